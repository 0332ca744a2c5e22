#include "prym/ks.hpp"

namespace prym {

namespace {

std::vector<Fp> e3_point(std::uint32_t p) {
    return {Fp::zero(p), Fp::zero(p), Fp::zero(p), Fp::one(p)};
}

void require_marked_node_normalized(const QuarticModel& model) {
    std::uint32_t p = model.prime;
    ProjPoint e3;
    e3.coords = e3_point(p);
    if (!model.nodes[0].same_point(e3)) throw PrymError("model is not normalized: P0 must be (0:0:0:1)");
}

}  // namespace

TangentSpace tangent_space_B0(const QuarticModel& model, const std::vector<Poly>& quartic_basis) {
    require_marked_node_normalized(model);
    std::uint32_t p = model.prime;
    Fp zero = Fp::zero(p), one = Fp::one(p);
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<Monomial> monos = degree_monomials(4, 4, ord);

    // express F in the given basis of the nodal-quartic space
    Mat<Fp> a(monos.size(), quartic_basis.size(), zero);
    std::vector<Fp> fv;
    for (std::size_t r = 0; r < monos.size(); ++r) {
        for (std::size_t c = 0; c < quartic_basis.size(); ++c) a(r, c) = quartic_basis[c].coeff(monos[r]);
        fv.push_back(model.quartic.coeff(monos[r]));
    }
    auto sol = solve_linear(a, fv, one);
    if (!sol) throw PrymError("F does not lie in the given nodal-quartic space");
    std::size_t dropped = quartic_basis.size();
    for (std::size_t i = quartic_basis.size(); i-- > 0;)
        if (!(*sol)[i].is_zero()) {
            dropped = i;
            break;
        }
    if (dropped == quartic_basis.size()) throw PrymError("F is zero in the nodal-quartic space");

    std::vector<Poly> dirs;
    for (std::size_t i = 0; i < quartic_basis.size(); ++i)
        if (i != dropped) dirs.push_back(quartic_basis[i]);

    // second partials of F at e3
    std::vector<Fp> e3 = e3_point(p);
    Mat<Fp> hess(4, 4, zero);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            hess(i, j) = evaluate(partial_derivative(partial_derivative(model.quartic, i), j),
                                  std::span<const Fp>(e3));

    // linearized conditions grad(dF/dx_k)(e3) . (Fdot, Pdot) = 0, k = 0..3
    Mat<Fp> cond(4, dirs.size() + 3, zero);
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t i = 0; i < dirs.size(); ++i)
            cond(k, i) = evaluate(partial_derivative(dirs[i], k), std::span<const Fp>(e3));
        for (std::size_t j = 0; j < 3; ++j) cond(k, dirs.size() + j) = hess(k, j);
    }

    std::vector<std::vector<Fp>> kern = kernel_basis(cond, one);
    if (kern.size() != 13)
        throw UnexpectedTangentDim("tangent space has dimension " + std::to_string(kern.size()) +
                                   ", expected 13");

    TangentSpace ts{{}, dirs, dropped};
    for (const std::vector<Fp>& v : kern) {
        Poly fdot(proj3_vars(), ord, zero);
        for (std::size_t i = 0; i < dirs.size(); ++i) fdot = fdot + dirs[i].scaled(v[i]);
        ts.vectors.push_back(TangentVector{std::move(fdot), {v[dirs.size()], v[dirs.size() + 1], v[dirs.size() + 2]}});
    }
    return ts;
}

namespace {

/// G = c0 + c1 x3 + c2 x3^2 (+ nothing higher) over the P^2 variables.
template <class T>
std::vector<MultiPoly<T>> split_singular_quartic(const MultiPoly<T>& g) {
    VarSetPtr small = proj2_vars();
    std::vector<MultiPoly<T>> parts(5, MultiPoly<T>(small, g.order(), g.zero_coeff()));
    for (const auto& [m, c] : g.terms()) {
        Monomial mm = Monomial::unit(3);
        mm.e[0] = m.e[0];
        mm.e[1] = m.e[1];
        mm.e[2] = m.e[2];
        parts.at(m.e[3]).add_term(mm, c);
    }
    if (!parts[3].is_zero() || !parts[4].is_zero())
        throw NonGenericPivot("first-order member is not singular at the renormalized point");
    return parts;
}

}  // namespace

std::vector<Poly> first_order_pipeline(const QuarticModel& model, const CanonicalCurve& base,
                                       const TangentVector& v) {
    require_marked_node_normalized(model);
    std::uint32_t p = model.prime;
    Fp fzero = Fp::zero(p);
    Dual zero = Dual::zero(p), one = Dual::one(p);
    MonomialOrder ord = MonomialOrder::grevlex();

    // F + eps Fdot, then coordinates renormalized so the node sits at e3:
    // x_i -> x_i + eps pdot_i x3 for i < 3.
    MultiPoly<Dual> f_eps = dual_poly(model.quartic, v.f_dot);
    std::vector<MultiPoly<Dual>> images;
    for (std::size_t i = 0; i < 4; ++i) {
        MultiPoly<Dual> im(proj3_vars(), ord, zero);
        im.add_term(Monomial::var(i, 4), one);
        if (i < 3 && !v.p_dot[i].is_zero()) im.add_term(Monomial::var(3, 4), Dual(fzero, v.p_dot[i]));
        images.push_back(std::move(im));
    }
    MultiPoly<Dual> g = substitute(f_eps, std::span<const MultiPoly<Dual>>(images));

    std::vector<MultiPoly<Dual>> parts = split_singular_quartic(g);
    Dual half = Dual(Fp(2, p)).inv();
    MultiPoly<Dual> u2e = parts[2];
    MultiPoly<Dual> u3e = parts[1].scaled(half);
    MultiPoly<Dual> u4e = parts[0];
    if (constant_part(u2e) != model.u2 || constant_part(u3e) != model.u3 || constant_part(u4e) != model.u4)
        throw PrymError("eps -> 0 reduction of the split disagrees with the base model");

    MultiPoly<Dual> sextic_eps = u3e * u3e - u2e * u4e;
    if (constant_part(sextic_eps) != model.sextic)
        throw PrymError("eps -> 0 reduction of the discriminant disagrees with the base model");
    Poly f_dot = eps_part(sextic_eps);

    // track each node of the sextic to first order in its affine chart
    std::vector<std::vector<Dual>> node_reps;
    for (const ProjPoint& q : model.sextic_nodes) {
        ProjPoint canon = q.canonical();
        std::size_t chart = canon.last_nonzero();
        Poly fa = dehomogenize_poly(model.sextic, chart);
        Poly fda = dehomogenize_poly(f_dot, chart);
        std::vector<Poly> tr;
        std::size_t ci = 0;
        std::vector<Fp> pt;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == chart) continue;
            Poly im = Poly::variable(fa.vars(), ord, ci, Fp::one(p));
            im.add_term(Monomial::unit(2), canon.coords[i]);
            tr.push_back(std::move(im));
            pt.push_back(canon.coords[i]);
            ++ci;
        }
        Poly loc = substitute(fa, std::span<const Poly>(tr));
        Poly locd = substitute(fda, std::span<const Poly>(tr));
        if (!graded_part(loc, 0).is_zero() || !graded_part(loc, 1).is_zero())
            throw PrymError("sextic is not singular at a listed node");
        if (!graded_part(locd, 0).is_zero())
            throw PrymError("first-order discriminant does not vanish at a node");

        Mat<Fp> hess = quadratic_form_matrix(graded_part(loc, 2));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) hess(i, j) = hess(i, j) * Fp(2, p);
        Poly lin = graded_part(locd, 1);
        std::vector<Fp> rhs{-lin.coeff(Monomial::var(0, 2)), -lin.coeff(Monomial::var(1, 2))};
        auto delta = solve_linear(hess, rhs, Fp::one(p));
        if (!delta || rank(hess) != 2) throw NonGenericPivot("node Hessian is not invertible");

        std::vector<Dual> rep;
        ci = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == chart) {
                rep.push_back(one);
            } else {
                rep.push_back(Dual(pt[ci], (*delta)[ci]));
                ++ci;
            }
        }
        // moved node must be an exact critical point of the lifted sextic
        for (std::size_t i = 0; i < 3; ++i)
            if (!evaluate(partial_derivative(sextic_eps, i), std::span<const Dual>(rep)).is_zero())
                throw PrymError("tracked node is not critical for the lifted sextic");
        node_reps.push_back(std::move(rep));
    }

    std::vector<MultiPoly<Dual>> cubics_eps = cubics_through(node_reps, one);
    if (cubics_eps.size() != base.cubics.basis.size())
        throw NonGenericPivot("cubic system dimension changed under deformation");
    for (std::size_t i = 0; i < cubics_eps.size(); ++i)
        if (constant_part(cubics_eps[i]) != base.cubics.basis[i])
            throw PrymError("eps -> 0 reduction of the cubic system disagrees with the base");

    std::vector<std::vector<Dual>> kern = quadric_kernel(sextic_eps, cubics_eps, one);
    if (kern.size() != 3) throw NonGenericPivot("quadric kernel dimension changed under deformation");

    std::vector<Poly> h_dots;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 16; ++j)
            if (kern[i][j].constant_part() != base.kernel[i][j])
                throw PrymError("eps -> 0 reduction of the quadric kernel disagrees with the base");
        std::vector<Fp> eps_coords;
        for (std::size_t j = 0; j < 15; ++j) eps_coords.push_back(kern[i][j].eps_part());
        h_dots.push_back(from_coeff_vector(quadric_vars(), ord, 2, std::span<const Fp>(eps_coords), fzero));
    }
    return h_dots;
}

std::vector<Mat<Fp>> sl5_basis(std::uint32_t p) {
    Fp zero = Fp::zero(p), one = Fp::one(p);
    std::vector<Mat<Fp>> out;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            if (i == j) continue;
            Mat<Fp> m(5, 5, zero);
            m(i, j) = one;
            out.push_back(std::move(m));
        }
    for (std::size_t i = 1; i < 5; ++i) {
        Mat<Fp> m(5, 5, zero);
        m(0, 0) = one;
        m(i, i) = -one;
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::vector<Fp>> gl3_rows(const CanonicalCurve& curve) {
    std::uint32_t p = curve.sextic.zero_coeff().modulus();
    std::vector<std::vector<Fp>> rows;
    for (std::size_t slot = 0; slot < 3; ++slot)
        for (std::size_t i = 0; i < 3; ++i) {
            std::vector<Fp> row(45, Fp::zero(p));
            std::vector<Fp> v = coeff_vector(curve.quadrics[i], 2);
            for (std::size_t j = 0; j < 15; ++j) row[15 * slot + j] = v[j];
            rows.push_back(std::move(row));
        }
    return rows;
}

std::vector<Fp> sl5_row(const CanonicalCurve& curve, const Mat<Fp>& delta) {
    std::vector<Fp> row;
    row.reserve(45);
    Mat<Fp> dt = transpose(delta);
    for (std::size_t i = 0; i < 3; ++i) {
        Mat<Fp> q = quadratic_form_matrix(curve.quadrics[i]);
        Mat<Fp> s = dt * q;
        Mat<Fp> qd = q * delta;
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = 0; b < 5; ++b) s(a, b) = s(a, b) + qd(a, b);
        Poly quad = quadric_from_matrix(s, quadric_vars(), MonomialOrder::grevlex());
        std::vector<Fp> v = coeff_vector(quad, 2);
        row.insert(row.end(), v.begin(), v.end());
    }
    return row;
}

std::vector<std::vector<Fp>> sl5_rows(const CanonicalCurve& curve, const std::vector<Mat<Fp>>& basis) {
    std::vector<std::vector<Fp>> rows;
    for (const Mat<Fp>& delta : basis) rows.push_back(sl5_row(curve, delta));
    return rows;
}

KSMatrix assemble_matrix(const std::vector<std::vector<Fp>>& family, const CanonicalCurve& curve) {
    std::uint32_t p = curve.sextic.zero_coeff().modulus();
    std::vector<std::vector<Fp>> g3 = gl3_rows(curve);
    std::vector<std::vector<Fp>> s5 = sl5_rows(curve, sl5_basis(p));
    std::size_t nrows = family.size() + g3.size() + s5.size();
    Mat<Fp> m(nrows, 45, Fp::zero(p));
    std::vector<std::string> prov;
    std::size_t r = 0;
    auto put = [&](const std::vector<Fp>& row, const std::string& tag) {
        if (row.size() != 45) throw PrymError("row has wrong length");
        for (std::size_t j = 0; j < 45; ++j) m(r, j) = row[j];
        prov.push_back(tag);
        ++r;
    };
    for (std::size_t i = 0; i < family.size(); ++i) put(family[i], "family:" + std::to_string(i));
    for (std::size_t i = 0; i < g3.size(); ++i)
        put(g3[i], "gl3:slot" + std::to_string(i / 3) + ":H" + std::to_string(i % 3 + 1));
    std::vector<std::string> sl5_tags;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            if (i != j) sl5_tags.push_back("sl5:E" + std::to_string(i) + std::to_string(j));
    for (std::size_t i = 1; i < 5; ++i) sl5_tags.push_back("sl5:E00-E" + std::to_string(i) + std::to_string(i));
    for (std::size_t i = 0; i < s5.size(); ++i) put(s5[i], sl5_tags[i]);
    return KSMatrix{std::move(m), std::move(prov), family.size()};
}

KSCertificate rank_certificate(KSMatrix matrix) {
    std::size_t r1 = rank(matrix.m);
    std::size_t r2 = rank_by_column_greedy(matrix.m);
    if (r1 != r2) throw PrymError("rank cross-check failed: elimination vs greedy column count");
    KSCertificate cert{std::move(matrix), r1, 0, false};
    cert.n_family = cert.matrix.n_family;
    cert.pass = (r1 == 45) && (cert.n_family >= 12);
    return cert;
}

std::vector<std::vector<Fp>> family_rows(const QuarticModel& model, const CanonicalCurve& base) {
    std::vector<ProjPoint> five(model.nodes.begin() + 1, model.nodes.end());
    std::vector<Poly> basis15 = quartics_with_nodes(five);
    TangentSpace ts = tangent_space_B0(model, basis15);
    std::vector<std::vector<Fp>> rows;
    for (const TangentVector& v : ts.vectors) {
        std::vector<Poly> hd = first_order_pipeline(model, base, v);
        std::vector<Fp> row;
        row.reserve(45);
        for (const Poly& h : hd) {
            std::vector<Fp> cv = coeff_vector(h, 2);
            row.insert(row.end(), cv.begin(), cv.end());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

KSCertificate assemble_and_rank(const QuarticModel& model) {
    CanonicalCurve base = canonical_quadrics(model.sextic, cubic_system(model.sextic_nodes));
    return rank_certificate(assemble_matrix(family_rows(model, base), base));
}

}  // namespace prym
