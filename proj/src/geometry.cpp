#include "prym/geometry.hpp"

#include <algorithm>

namespace prym {

VarSetPtr proj3_vars() {
    static VarSetPtr v = make_vars({"x0", "x1", "x2", "x3"});
    return v;
}

VarSetPtr proj2_vars() {
    static VarSetPtr v = make_vars({"x0", "x1", "x2"});
    return v;
}

VarSetPtr quadric_vars() {
    static VarSetPtr v = make_vars({"y0", "y1", "y2", "y3", "y4"});
    return v;
}

ProjPoint ProjPoint::make(const std::vector<std::int64_t>& v, std::uint32_t p) {
    ProjPoint q;
    for (std::int64_t x : v) q.coords.push_back(Fp(x, p));
    bool all_zero = std::all_of(q.coords.begin(), q.coords.end(), [](const Fp& c) { return c.is_zero(); });
    if (q.coords.empty() || all_zero) throw PrymError("projective point needs a nonzero coordinate");
    return q;
}

std::size_t ProjPoint::last_nonzero() const {
    for (std::size_t i = coords.size(); i-- > 0;)
        if (!coords[i].is_zero()) return i;
    throw PrymError("zero vector is not a projective point");
}

ProjPoint ProjPoint::canonical() const {
    std::size_t k = last_nonzero();
    Fp s = coords[k].inv();
    ProjPoint q;
    for (const Fp& c : coords) q.coords.push_back(c * s);
    return q;
}

bool ProjPoint::same_point(const ProjPoint& o) const {
    if (coords.size() != o.coords.size()) return false;
    ProjPoint a = canonical(), b = o.canonical();
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (a.coords[i] != b.coords[i]) return false;
    return true;
}

namespace {

Fp det_of(const std::vector<const ProjPoint*>& pts, std::uint32_t p) {
    std::size_t n = pts.size();
    Mat<Fp> m(n, n, Fp::zero(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = pts[i]->coords[j];
    // rank suffices: determinant nonzero iff full rank
    return rank(m) == n ? Fp::one(p) : Fp::zero(p);
}

}  // namespace

bool general_position_p3(const std::vector<ProjPoint>& pts) {
    if (pts.size() != 5) throw PrymError("general_position_p3 expects 5 points");
    std::uint32_t p = pts[0].modulus();
    for (std::size_t skip = 0; skip < 5; ++skip) {
        std::vector<const ProjPoint*> four;
        for (std::size_t i = 0; i < 5; ++i)
            if (i != skip) four.push_back(&pts[i]);
        if (det_of(four, p).is_zero()) return false;
    }
    return true;
}

bool general_position_p2(const std::vector<ProjPoint>& pts) {
    if (pts.size() != 5) throw PrymError("general_position_p2 expects 5 points");
    std::uint32_t p = pts[0].modulus();
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b)
            for (std::size_t c = b + 1; c < 5; ++c)
                if (det_of({&pts[a], &pts[b], &pts[c]}, p).is_zero()) return false;
    return true;
}

std::vector<Poly> quartics_with_nodes(const std::vector<ProjPoint>& points) {
    if (points.empty()) throw PrymError("quartics_with_nodes needs at least one point");
    std::uint32_t p = points[0].modulus();
    VarSetPtr vars = proj3_vars();
    bool first = true;
    IdealSpec acc;
    for (const ProjPoint& q : points) {
        IdealSpec sq = point_double_ideal(vars, p, q.canonical().coords);
        acc = first ? sq : intersect(acc, sq);
        first = false;
    }
    return graded_piece_basis(acc, 4);
}

namespace {

/// F = sum_k c_k(x0,x1,x2) x3^k; returns c_0..c_4 over the P^2 variables.
template <class T>
std::vector<MultiPoly<T>> split_by_x3(const MultiPoly<T>& f) {
    VarSetPtr small = proj2_vars();
    std::vector<MultiPoly<T>> parts(5, MultiPoly<T>(small, f.order(), f.zero_coeff()));
    for (const auto& [m, c] : f.terms()) {
        if (m.e[3] > 4) throw PrymError("split_by_x3: not a quartic");
        Monomial mm = Monomial::unit(3);
        mm.e[0] = m.e[0];
        mm.e[1] = m.e[1];
        mm.e[2] = m.e[2];
        parts[m.e[3]].add_term(mm, c);
    }
    return parts;
}

}  // namespace

QuarticSplit split_quartic(const Poly& f_quartic, const ProjPoint& p0) {
    std::uint32_t p = p0.modulus();
    Fp zero = Fp::zero(p), one = Fp::one(p);
    ProjPoint canon = p0.canonical();
    std::size_t k = canon.last_nonzero();

    // A maps e3 to P0: columns are the complementary standard vectors, then P0.
    Mat<Fp> a(4, 4, zero);
    std::size_t col = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        if (j == k) continue;
        a(j, col) = one;
        ++col;
    }
    for (std::size_t i = 0; i < 4; ++i) a(i, 3) = canon.coords[i];

    Poly g = f_quartic;
    bool moved = canon.coords != std::vector<Fp>{zero, zero, zero, one};
    if (moved) {
        std::vector<Poly> images;
        for (std::size_t i = 0; i < 4; ++i) {
            Poly im(f_quartic.vars(), f_quartic.order(), zero);
            for (std::size_t j = 0; j < 4; ++j) im.add_term(Monomial::var(j, 4), a(i, j));
            images.push_back(std::move(im));
        }
        g = substitute(f_quartic, std::span<const Poly>(images));
    }

    std::vector<Poly> parts = split_by_x3(g);
    if (!parts[4].is_zero() || !parts[3].is_zero())
        throw NotSingularAtP0("x3^3 or x3^4 coefficient survives at the marked point");
    QuarticSplit s{parts[2], parts[1].scaled(Fp(2, p).inv()), parts[0], a};
    if (s.u2.is_zero() || rank(quadratic_form_matrix(s.u2)) != 3)
        throw NotOrdinaryNode("tangent cone u2 is a degenerate quadratic form");
    return s;
}

Poly discriminant_sextic(const Poly& u2, const Poly& u3, const Poly& u4) {
    auto check = [](const Poly& f, int d) {
        auto hd = f.homogeneous_degree();
        if (f.is_zero()) return;
        if (!hd || *hd != d) throw IncompatibleDegrees("expected a form of degree " + std::to_string(d));
    };
    check(u2, 2);
    check(u3, 3);
    check(u4, 4);
    return u3 * u3 - u2 * u4;
}

SingularityType classify_singular_point(const Poly& g, const ProjPoint& q) {
    ProjPoint canon = q.canonical();
    std::size_t chart = canon.last_nonzero();
    Poly ga = dehomogenize_poly(g, chart);
    std::uint32_t p = q.modulus();
    std::size_t n = ga.nvars();

    std::vector<Poly> images;
    std::size_t ci = 0;
    for (std::size_t i = 0; i < canon.coords.size(); ++i) {
        if (i == chart) continue;
        Poly im = Poly::variable(ga.vars(), ga.order(), ci, Fp::one(p));
        im.add_term(Monomial::unit(n), canon.coords[i]);
        images.push_back(std::move(im));
        ++ci;
    }
    Poly local = substitute(ga, std::span<const Poly>(images));

    if (!graded_part(local, 0).is_zero()) throw PointNotOnVariety();
    if (!graded_part(local, 1).is_zero()) return SingularityType::smooth;
    Poly quad = graded_part(local, 2);
    if (quad.is_zero()) return SingularityType::worse;
    return rank(quadratic_form_matrix(quad)) == n ? SingularityType::ordinary_node : SingularityType::worse;
}

void CertReport::add(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back(CheckResult{name, ok ? "pass" : "fail", detail});
}

void CertReport::add_status(const std::string& name, const std::string& status, const std::string& detail) {
    checks.push_back(CheckResult{name, status, detail});
}

bool CertReport::verdict() const {
    for (const CheckResult& c : checks)
        if (c.status != "pass") return false;
    return true;
}

const CheckResult* CertReport::find(const std::string& name) const {
    for (const CheckResult& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

IdealSpec jacobian_ideal(const Poly& f) {
    std::vector<Poly> gens{f};
    for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(partial_derivative(f, i));
    return IdealSpec::make(f.vars(), f.zero_coeff().modulus(), std::move(gens));
}

IdealSpec radical_of_points(const std::vector<ProjPoint>& pts, VarSetPtr vars, std::uint32_t p) {
    IdealSpec acc;
    bool first = true;
    for (const ProjPoint& q : pts) {
        IdealSpec m = point_vanishing_ideal(vars, p, q.canonical().coords);
        acc = first ? m : intersect(acc, m);
        first = false;
    }
    return acc;
}

std::string sing_name(SingularityType t) {
    switch (t) {
        case SingularityType::smooth: return "smooth";
        case SingularityType::ordinary_node: return "ordinary_node";
        case SingularityType::worse: return "worse";
    }
    return "?";
}

void classify_points_check(CertReport& rep, const std::string& check_name, const Poly& g,
                           const std::vector<ProjPoint>& pts) {
    bool all_nodes = true;
    std::string detail;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string cls;
        try {
            cls = sing_name(classify_singular_point(g, pts[i]));
        } catch (const PointNotOnVariety&) {
            cls = "not_on_hypersurface";
        }
        if (cls != "ordinary_node") all_nodes = false;
        if (!detail.empty()) detail += ", ";
        detail += "P" + std::to_string(i) + "=" + cls;
    }
    rep.add(check_name, all_nodes, detail);
}

std::string tristate_name(Tristate t) {
    switch (t) {
        case Tristate::yes: return "pass";
        case Tristate::no: return "fail";
        case Tristate::inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace

CertReport certify_singular_locus(const Poly& f_quartic, const std::vector<ProjPoint>& nodes, SplitMix64& rng) {
    CertReport rep;
    std::uint32_t p = f_quartic.zero_coeff().modulus();
    classify_points_check(rep, "nodes_ordinary", f_quartic, nodes);

    IdealSpec sat = saturate_irrelevant(jacobian_ideal(f_quartic));
    ProjectiveSchemeInfo info = projective_scheme_info(sat, rng);
    rep.add("singular_scheme_zero_dimensional", info.zero_dimensional);
    rep.add("singular_scheme_degree", info.zero_dimensional && info.degree == static_cast<int>(nodes.size()),
            "degree=" + std::to_string(info.degree) + " expected=" + std::to_string(nodes.size()));
    rep.add("singular_scheme_equals_node_radical",
            equal_ideals(sat, radical_of_points(nodes, f_quartic.vars(), p)));
    return rep;
}

CertReport certify_sextic_nodes(const Poly& sextic, const std::vector<ProjPoint>& expected, const Poly& u2,
                                const Poly& u3, const Poly& u4, SplitMix64& rng) {
    CertReport rep;
    std::uint32_t p = sextic.zero_coeff().modulus();
    classify_points_check(rep, "sextic_nodes_ordinary", sextic, expected);

    IdealSpec sat = saturate_irrelevant(jacobian_ideal(sextic));
    ProjectiveSchemeInfo info = projective_scheme_info(sat, rng);
    rep.add("sextic_singular_scheme_zero_dimensional", info.zero_dimensional);
    rep.add("sextic_singular_scheme_degree",
            info.zero_dimensional && info.degree == static_cast<int>(expected.size()),
            "degree=" + std::to_string(info.degree) + " expected=" + std::to_string(expected.size()));
    rep.add_status("sextic_singular_scheme_reduced", tristate_name(info.reduced));
    rep.add("sextic_singular_scheme_equals_expected_radical",
            equal_ideals(sat, radical_of_points(expected, sextic.vars(), p)));
    rep.add("genericity_u2_u3_u4_no_common_zero",
            projectively_empty(IdealSpec::make(sextic.vars(), p, {u2, u3, u4})));
    return rep;
}

CertReport certify_contact_conic(const Poly& u2, const Poly& u3, const Poly& sextic, SplitMix64& rng) {
    CertReport rep;
    std::uint32_t p = u2.zero_coeff().modulus();
    VarSetPtr vars = u2.vars();

    rep.add("contact_ideal_identity",
            equal_ideals(IdealSpec::make(vars, p, {u2, sextic}), IdealSpec::make(vars, p, {u2, u3 * u3})));

    IdealSpec contact = saturate_irrelevant(IdealSpec::make(vars, p, {u2, u3}));
    ProjectiveSchemeInfo info = projective_scheme_info(contact, rng);
    rep.add("contact_scheme_zero_dimensional", info.zero_dimensional);
    rep.add("contact_scheme_degree_6", info.zero_dimensional && info.degree == 6,
            "degree=" + std::to_string(info.degree));
    rep.add_status("contact_scheme_reduced", tristate_name(info.reduced));

    IdealSpec meet = jacobian_ideal(sextic);
    meet.generators.push_back(u2);
    meet.generators.push_back(u3);
    rep.add("contact_points_not_nodes", projectively_empty(meet));
    return rep;
}

CertReport conic_bundle_fiber_check(const Poly& u2, const Poly& u3, const Poly& u4, const Poly& sextic) {
    CertReport rep;
    std::uint32_t p = u2.zero_coeff().modulus();
    VarSetPtr vars = u2.vars();
    Poly zero(vars, u2.order(), Fp::zero(p));
    Poly minus_one = Poly::constant(vars, u2.order(), -Fp::one(p));

    // fiber conic in (z0, z1, z2): z0^2 u4 + 2 z0 z1 u3 + z1^2 u2 - z2^2
    std::vector<std::vector<Poly>> m = {{u4, u3, zero}, {u3, u2, zero}, {zero, zero, minus_one}};

    auto det3 = [&](const std::vector<std::vector<Poly>>& a) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    Poly det = det3(m);
    bool unit_multiple = false;
    std::string detail;
    if (!sextic.is_zero() && !det.is_zero()) {
        const auto& [lm, lc] = sextic.leading_term();
        Fp c = det.coeff(lm) * lc.inv();
        unit_multiple = !c.is_zero() && det == sextic.scaled(c);
        detail = "unit=" + std::to_string(c.value());
    }
    rep.add("fiber_determinant_is_unit_times_f", unit_multiple, detail);

    std::vector<Poly> gens{sextic};
    for (std::size_t r1 = 0; r1 < 3; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < 3; ++r2)
            for (std::size_t c1 = 0; c1 < 3; ++c1)
                for (std::size_t c2 = c1 + 1; c2 < 3; ++c2)
                    gens.push_back(m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]);
    rep.add("fiber_rank_at_least_2_everywhere", projectively_empty(IdealSpec::make(vars, p, std::move(gens))));
    return rep;
}

QuarticModel make_model(std::uint32_t prime, std::vector<ProjPoint> nodes, Poly u2, Poly u3_half, Poly u4) {
    if (nodes.size() != 6) throw PrymError("a model needs exactly 6 nodes");
    Prime checked(prime);
    QuarticModel m{prime,
                   Poly(proj3_vars(), MonomialOrder::grevlex(), Fp::zero(prime)),
                   std::move(nodes),
                   u2,
                   u3_half,
                   u4,
                   discriminant_sextic(u2, u3_half, u4),
                   {},
                   "half",
                   0,
                   0};

    Fp zero = Fp::zero(prime), one = Fp::one(prime);
    ProjPoint e3;
    e3.coords = {zero, zero, zero, one};
    if (!m.nodes[0].same_point(e3)) throw PrymError("the marked node must be (0:0:0:1)");

    // F = u2 x3^2 + 2 u3 x3 + u4 over x0..x3
    VarSetPtr v4 = proj3_vars();
    auto lift = [&](const Poly& f) { return map_variables(f, v4, MonomialOrder::grevlex()); };
    Poly x3 = Poly::variable(v4, MonomialOrder::grevlex(), 3, one);
    m.quartic = lift(u2) * x3 * x3 + lift(u3_half).scaled(Fp(2, prime)) * x3 + lift(u4);

    for (std::size_t i = 0; i < m.nodes.size(); ++i) {
        const ProjPoint q = m.nodes[i].canonical();
        bool singular = evaluate(m.quartic, std::span<const Fp>(q.coords)).is_zero();
        for (std::size_t k = 0; k < 4 && singular; ++k)
            singular = evaluate(partial_derivative(m.quartic, k), std::span<const Fp>(q.coords)).is_zero();
        if (!singular) throw PrymError("node P" + std::to_string(i) + " is not a singular point of F");
    }
    for (std::size_t i = 1; i < 6; ++i) {
        ProjPoint proj;
        proj.coords = {m.nodes[i].coords[0], m.nodes[i].coords[1], m.nodes[i].coords[2]};
        m.sextic_nodes.push_back(proj.canonical());
    }
    return m;
}

std::vector<ProjPoint> standard_nodes(std::uint32_t p) {
    return {ProjPoint::make({0, 0, 0, 1}, p), ProjPoint::make({0, 0, 1, 0}, p), ProjPoint::make({0, 1, 0, 0}, p),
            ProjPoint::make({1, 0, 0, 0}, p), ProjPoint::make({1, 1, 1, 1}, p), ProjPoint::make({1, 2, 3, 4}, p)};
}

CertReport certify_model(const QuarticModel& model, SplitMix64& rng) {
    CertReport rep;
    CertReport bundle = conic_bundle_fiber_check(model.u2, model.u3, model.u4, model.sextic);
    for (auto& c : bundle.checks) rep.checks.push_back(c);
    if (!bundle.verdict()) return rep;  // cheap genericity gate failed; skip the heavy ideal work

    CertReport sext = certify_sextic_nodes(model.sextic, model.sextic_nodes, model.u2, model.u3, model.u4, rng);
    for (auto& c : sext.checks) rep.checks.push_back(c);
    if (!sext.verdict()) return rep;

    CertReport contact = certify_contact_conic(model.u2, model.u3, model.sextic, rng);
    for (auto& c : contact.checks) rep.checks.push_back(c);
    if (!contact.verdict()) return rep;

    CertReport locus = certify_singular_locus(model.quartic, model.nodes, rng);
    for (auto& c : locus.checks) rep.checks.push_back(c);
    return rep;
}

QuarticModel random_quartic(std::uint32_t prime, std::uint64_t seed, int max_tries) {
    Prime checked(prime);
    std::vector<ProjPoint> nodes = standard_nodes(prime);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i].same_point(nodes[j]))
                throw NoGeneralMemberFound("reference nodes collide mod " + std::to_string(prime));

    std::vector<Poly> basis = quartics_with_nodes(nodes);
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Poly f(proj3_vars(), MonomialOrder::grevlex(), Fp::zero(prime));
        for (const Poly& b : basis) f = f + b.scaled(rng.field(prime));
        if (f.is_zero()) continue;
        try {
            ProjPoint p0 = nodes[0];
            QuarticSplit split = split_quartic(f, p0);
            QuarticModel model = make_model(prime, nodes, split.u2, split.u3, split.u4);
            model.seed = seed;
            model.tries = attempt + 1;
            SplitMix64 cert_rng(seed ^ 0x5eedc0de);
            if (certify_model(model, cert_rng).verdict()) return model;
        } catch (const PrymError&) {
            // draw was degenerate; try again
        }
    }
    throw NoGeneralMemberFound("no certified quartic within " + std::to_string(max_tries) + " tries");
}

}  // namespace prym
