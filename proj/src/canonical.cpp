#include "prym/canonical.hpp"

namespace prym {

CubicSystem cubic_system(const std::vector<ProjPoint>& nodes) {
    if (nodes.size() != 5) throw DegenerateNodes("cubic_system expects exactly 5 nodes");
    if (!general_position_p2(nodes)) throw DegenerateNodes("nodes are not in linear general position");
    std::uint32_t p = nodes[0].modulus();
    std::vector<std::vector<Fp>> reps;
    for (const ProjPoint& q : nodes) reps.push_back(q.canonical().coords);
    std::vector<Poly> basis = cubics_through(reps, Fp::one(p));
    if (basis.size() != 5)
        throw DegenerateNodes("cubic system has dimension " + std::to_string(basis.size()) + ", expected 5");
    return CubicSystem{std::move(basis)};
}

CanonicalCurve canonical_quadrics(const Poly& sextic, const CubicSystem& system) {
    std::uint32_t p = sextic.zero_coeff().modulus();
    std::vector<std::vector<Fp>> kernel = quadric_kernel(sextic, system.basis, Fp::one(p));
    if (kernel.size() != 3)
        throw UnexpectedKernelDim("quadric kernel has dimension " + std::to_string(kernel.size()) +
                                  ", expected 3");
    CanonicalCurve curve{{}, {}, kernel, system, sextic};
    MonomialOrder ord = MonomialOrder::grevlex();
    for (const std::vector<Fp>& v : kernel) {
        std::span<const Fp> qpart(v.data(), 15);
        Poly h = from_coeff_vector(quadric_vars(), ord, 2, qpart, Fp::zero(p));
        Fp lambda = v[15];
        // defining property, re-verified on every construction
        Poly pulled = substitute(h, std::span<const Poly>(system.basis));
        if (pulled != sextic.scaled(lambda)) throw PrymError("quadric kernel vector fails its defining property");
        curve.quadrics.push_back(std::move(h));
        curve.lambdas.push_back(lambda);
    }
    return curve;
}

CertReport certify_smooth_ci(const CanonicalCurve& curve) {
    CertReport rep;
    std::uint32_t p = curve.sextic.zero_coeff().modulus();
    VarSetPtr y = quadric_vars();

    Mat<Fp> coeffs(3, 15, Fp::zero(p));
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Fp> v = coeff_vector(curve.quadrics[i], 2);
        for (std::size_t j = 0; j < 15; ++j) coeffs(i, j) = v[j];
    }
    rep.add("quadrics_linearly_independent", rank(coeffs) == 3);

    // Jacobian criterion: the quadrics plus all 3x3 minors of the 3x5 matrix
    // of partials must have empty projective vanishing.
    std::vector<std::vector<Poly>> jac;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Poly> row;
        for (std::size_t j = 0; j < 5; ++j) row.push_back(partial_derivative(curve.quadrics[i], j));
        jac.push_back(std::move(row));
    }
    std::vector<Poly> gens = curve.quadrics;
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b)
            for (std::size_t c = b + 1; c < 5; ++c) {
                Poly det = jac[0][a] * (jac[1][b] * jac[2][c] - jac[1][c] * jac[2][b]) -
                           jac[0][b] * (jac[1][a] * jac[2][c] - jac[1][c] * jac[2][a]) +
                           jac[0][c] * (jac[1][a] * jac[2][b] - jac[1][b] * jac[2][a]);
                gens.push_back(std::move(det));
            }
    rep.add("jacobian_criterion_smooth", projectively_empty(IdealSpec::make(y, p, std::move(gens))));

    IdealSpec curve_ideal = IdealSpec::make(y, p, curve.quadrics);
    GroebnerBasis g = groebner(curve_ideal, MonomialOrder::grevlex());
    std::string detail;
    bool hilbert_ok = true;
    for (int d = 2; d <= 5; ++d) {
        int hv = hilbert_value(g, d);
        if (hv != 8 * d - 4) hilbert_ok = false;
        detail += (detail.empty() ? "" : ", ") + std::to_string(d) + ":" + std::to_string(hv);
    }
    rep.add("hilbert_values_8d_minus_4", hilbert_ok, detail);
    return rep;
}

}  // namespace prym
