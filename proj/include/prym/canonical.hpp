#pragma once

#include "prym/geometry.hpp"

namespace prym {

/// Evaluation of the 10 cubic monomials at the 5 node representatives; the
/// kernel is the linear system of cubics through the nodes.  Generic so the
/// same code lifts the system over the dual ring.
template <class T>
std::vector<MultiPoly<T>> cubics_through(const std::vector<std::vector<T>>& reps, const T& one) {
    VarSetPtr vars = proj2_vars();
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<Monomial> monos = degree_monomials(3, 3, ord);
    const T zero = zero_like(one);
    Mat<T> m(reps.size(), monos.size(), zero);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < monos.size(); ++j) {
            MultiPoly<T> mono(vars, ord, zero);
            mono.add_term(monos[j], one);
            m(i, j) = evaluate(mono, std::span<const T>(reps[i]));
        }
    std::vector<MultiPoly<T>> out;
    for (const std::vector<T>& v : kernel_basis(m, one)) {
        MultiPoly<T> f(vars, ord, zero);
        for (std::size_t j = 0; j < monos.size(); ++j) f.add_term(monos[j], v[j]);
        out.push_back(std::move(f));
    }
    return out;
}

struct CubicSystem {
    std::vector<Poly> basis;  // 5 cubics in x0..x2, reduced-echelon kernel basis
};

/// Throws DegenerateNodes unless the 5 nodes are in general position and
/// impose independent conditions.
CubicSystem cubic_system(const std::vector<ProjPoint>& nodes);

/// Linear condition { (Q, lambda) : Q(c0..c4) = lambda * f } as a 28x16
/// matrix (15 quadric coefficients + lambda against the 28 sextic
/// coefficients); returns its reduced-echelon kernel basis.
template <class T>
std::vector<std::vector<T>> quadric_kernel(const MultiPoly<T>& sextic, const std::vector<MultiPoly<T>>& cubics,
                                           const T& one) {
    MonomialOrder ord = MonomialOrder::grevlex();
    const T zero = zero_like(one);
    std::vector<Monomial> qmonos = degree_monomials(5, 2, ord);
    std::vector<Monomial> smonos = degree_monomials(3, 6, ord);
    std::vector<MultiPoly<T>> pullbacks;
    for (const Monomial& qm : qmonos) {
        std::size_t i = 5, j = 5;
        for (std::size_t k = 0; k < 5; ++k) {
            if (qm.e[k] == 2) i = j = k;
            if (qm.e[k] == 1) (i == 5 ? i : j) = k;
        }
        pullbacks.push_back(cubics[i] * cubics[j]);
    }
    Mat<T> m(smonos.size(), qmonos.size() + 1, zero);
    for (std::size_t r = 0; r < smonos.size(); ++r) {
        for (std::size_t c = 0; c < qmonos.size(); ++c) m(r, c) = pullbacks[c].coeff(smonos[r]);
        m(r, qmonos.size()) = -sextic.coeff(smonos[r]);
    }
    return kernel_basis(m, one);
}

struct CanonicalCurve {
    std::vector<Poly> quadrics;              // H1, H2, H3 in y0..y4
    std::vector<Fp> lambdas;                 // pullback scalars, one per quadric
    std::vector<std::vector<Fp>> kernel;     // the raw 16-long kernel vectors
    CubicSystem cubics;
    Poly sextic;
};

/// Throws UnexpectedKernelDim unless the kernel is exactly 3-dimensional.
CanonicalCurve canonical_quadrics(const Poly& sextic, const CubicSystem& system);

/// Jacobian smoothness criterion plus the genus-5 Hilbert values 8d-4.
CertReport certify_smooth_ci(const CanonicalCurve& curve);

}  // namespace prym
