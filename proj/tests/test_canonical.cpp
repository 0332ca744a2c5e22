#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace prym;
using prym::testutil::fixture_model;
using prym::testutil::random_poly;

namespace {
constexpr std::uint32_t P = 101;

Mat<Fp> random_invertible(SplitMix64& rng, std::size_t n, std::uint32_t p) {
    while (true) {
        Mat<Fp> m(n, n, Fp::zero(p));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.field(p);
        if (rank(m) == n) return m;
    }
}

/// Random plane sextic vanishing to order >= 2 at the five reference nodes.
Poly random_double_sextic(SplitMix64& rng, const std::vector<ProjPoint>& nodes) {
    std::vector<Monomial> monos = degree_monomials(3, 6, MonomialOrder::grevlex());
    Mat<Fp> cond(nodes.size() * 4, monos.size(), Fp::zero(P));
    std::size_t r = 0;
    for (const ProjPoint& q : nodes) {
        ProjPoint canon = q.canonical();
        std::span<const Fp> pt(canon.coords);
        for (std::size_t j = 0; j < monos.size(); ++j) {
            Poly mono(proj2_vars(), MonomialOrder::grevlex(), Fp::zero(P));
            mono.add_term(monos[j], Fp::one(P));
            cond(r, j) = evaluate(mono, pt);
            for (std::size_t k = 0; k < 3; ++k) cond(r + 1 + k, j) = evaluate(partial_derivative(mono, k), pt);
        }
        r += 4;
    }
    auto kern = kernel_basis(cond, Fp::one(P));
    REQUIRE(kern.size() == 13);  // 28 sextic coefficients - 15 double-point conditions
    Poly f(proj2_vars(), MonomialOrder::grevlex(), Fp::zero(P));
    for (const auto& v : kern) {
        Fp c = rng.field(P);
        for (std::size_t j = 0; j < monos.size(); ++j) f.add_term(monos[j], v[j] * c);
    }
    return f;
}

}  // namespace

TEST_CASE("cubic system through the reference nodes") {
    QuarticModel m = fixture_model();
    CubicSystem c = cubic_system(m.sextic_nodes);
    REQUIRE(c.basis.size() == 5);
    for (const Poly& f : c.basis) {
        CHECK(f.homogeneous_degree() == std::optional<int>(3));
        for (const ProjPoint& q : m.sextic_nodes)
            CHECK(evaluate(f, std::span<const Fp>(q.canonical().coords)).is_zero());
    }
    CubicSystem again = cubic_system(m.sextic_nodes);
    for (std::size_t i = 0; i < 5; ++i) CHECK(c.basis[i] == again.basis[i]);
}

TEST_CASE("cubic system rejects collinear nodes") {
    std::vector<ProjPoint> bad{ProjPoint::make({0, 0, 1}, P), ProjPoint::make({0, 1, 0}, P),
                               ProjPoint::make({1, 0, 0}, P), ProjPoint::make({0, 1, 1}, P),
                               ProjPoint::make({0, 1, 2}, P)};
    CHECK_THROWS_AS(cubic_system(bad), DegenerateNodes);
}

TEST_CASE("canonical quadrics of the reference model") {
    QuarticModel m = fixture_model();
    CanonicalCurve curve = canonical_quadrics(m.sextic, cubic_system(m.sextic_nodes));
    REQUIRE(curve.quadrics.size() == 3);

    std::size_t nonzero_lambda = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        Poly pulled = substitute(curve.quadrics[i], std::span<const Poly>(curve.cubics.basis));
        CHECK(pulled == m.sextic.scaled(curve.lambdas[i]));
        if (!curve.lambdas[i].is_zero()) ++nonzero_lambda;
    }
    // two quadrics cut the whole surface (lambda = 0), one reaches the sextic
    CHECK(nonzero_lambda == 1);

    Mat<Fp> coeffs(3, 15, Fp::zero(P));
    for (std::size_t i = 0; i < 3; ++i) {
        auto v = coeff_vector(curve.quadrics[i], 2);
        for (std::size_t j = 0; j < 15; ++j) coeffs(i, j) = v[j];
    }
    CHECK(rank(coeffs) == 3);
    CanonicalCurve again = canonical_quadrics(m.sextic, cubic_system(m.sextic_nodes));
    for (std::size_t i = 0; i < 3; ++i) CHECK(curve.quadrics[i] == again.quadrics[i]);
}

TEST_CASE("pullback is linear on the quadric space") {
    QuarticModel m = fixture_model();
    CanonicalCurve curve = canonical_quadrics(m.sextic, cubic_system(m.sextic_nodes));
    SplitMix64 rng(51);
    std::span<const Poly> cubics(curve.cubics.basis);
    for (int iter = 0; iter < 5; ++iter) {
        Fp a = rng.field(P), b = rng.field(P);
        Poly combo = curve.quadrics[0].scaled(a) + curve.quadrics[1].scaled(b);
        CHECK(substitute(combo, cubics) ==
              substitute(curve.quadrics[0], cubics).scaled(a) + substitute(curve.quadrics[1], cubics).scaled(b));
    }
}

TEST_CASE("kernel dimension drops to 2 for a sextic that only passes through the nodes") {
    QuarticModel m = fixture_model();
    CubicSystem c = cubic_system(m.sextic_nodes);
    std::vector<Monomial> monos = degree_monomials(3, 6, MonomialOrder::grevlex());
    Mat<Fp> cond(5, monos.size(), Fp::zero(P));
    for (std::size_t i = 0; i < 5; ++i) {
        ProjPoint canon = m.sextic_nodes[i].canonical();
        std::span<const Fp> pt(canon.coords);
        for (std::size_t j = 0; j < monos.size(); ++j) {
            Poly mono(proj2_vars(), MonomialOrder::grevlex(), Fp::zero(P));
            mono.add_term(monos[j], Fp::one(P));
            cond(i, j) = evaluate(mono, pt);
        }
    }
    SplitMix64 rng(53);
    auto kern = kernel_basis(cond, Fp::one(P));
    Poly g(proj2_vars(), MonomialOrder::grevlex(), Fp::zero(P));
    for (const auto& v : kern) {
        Fp cmul = rng.field(P);
        for (std::size_t j = 0; j < monos.size(); ++j) g.add_term(monos[j], v[j] * cmul);
    }
    auto raw = quadric_kernel(g, c.basis, Fp::one(P));
    CHECK(raw.size() == 2);  // only the two del Pezzo quadrics survive
    CHECK_THROWS_AS(canonical_quadrics(g, c), UnexpectedKernelDim);
}

TEST_CASE("any sextic double at the nodes admits the full 3-dimensional kernel") {
    // the del Pezzo surface is projectively normal, so the pullback map
    // surjects onto sextics double at the nodes
    QuarticModel m = fixture_model();
    CubicSystem c = cubic_system(m.sextic_nodes);
    SplitMix64 rng(55);
    for (int iter = 0; iter < 3; ++iter) {
        Poly g = random_double_sextic(rng, m.sextic_nodes);
        if (g.is_zero()) continue;
        CHECK(quadric_kernel(g, c.basis, Fp::one(P)).size() == 3);
    }
}

TEST_CASE("smooth complete intersection certificate on the reference model") {
    QuarticModel m = fixture_model();
    CanonicalCurve curve = canonical_quadrics(m.sextic, cubic_system(m.sextic_nodes));
    CertReport rep = certify_smooth_ci(curve);
    CHECK(rep.verdict());
    const CheckResult* h = rep.find("hilbert_values_8d_minus_4");
    REQUIRE(h != nullptr);
    CHECK(h->detail == "2:12, 3:20, 4:28, 5:36");
}

TEST_CASE("three quadric cones with a common vertex fail the smoothness criterion") {
    // vertex (0:0:0:0:1) lies on all three cones and kills the Jacobian minors
    VarSetPtr y = quadric_vars();
    CanonicalCurve fake{{parse_poly("y0^2-y1*y2", y, P), parse_poly("y0*y1-y2^2", y, P),
                         parse_poly("y1^2-y0*y3", y, P)},
                        {},
                        {},
                        CubicSystem{},
                        Poly(proj2_vars(), MonomialOrder::grevlex(), Fp::zero(P))};
    CertReport rep = certify_smooth_ci(fake);
    const CheckResult* jc = rep.find("jacobian_criterion_smooth");
    REQUIRE(jc != nullptr);
    CHECK(jc->status == "fail");
}

TEST_CASE("quadric subspace is invariant under remixing the cubic basis") {
    QuarticModel m = fixture_model();
    CubicSystem c = cubic_system(m.sextic_nodes);
    CanonicalCurve base = canonical_quadrics(m.sextic, c);
    SplitMix64 rng(57);

    for (int iter = 0; iter < 3; ++iter) {
        Mat<Fp> mix = random_invertible(rng, 5, P);
        CubicSystem mixed;
        for (std::size_t i = 0; i < 5; ++i) {
            Poly f(proj2_vars(), MonomialOrder::grevlex(), Fp::zero(P));
            for (std::size_t j = 0; j < 5; ++j) f = f + c.basis[j].scaled(mix(i, j));
            mixed.basis.push_back(std::move(f));
        }
        auto raw = quadric_kernel(m.sextic, mixed.basis, Fp::one(P));
        REQUIRE(raw.size() == 3);

        // pulled-back ideals agree
        std::vector<Poly> pulls_base, pulls_mixed;
        for (std::size_t i = 0; i < 3; ++i) {
            pulls_base.push_back(substitute(base.quadrics[i], std::span<const Poly>(c.basis)));
            Poly h = from_coeff_vector(quadric_vars(), MonomialOrder::grevlex(), 2,
                                       std::span<const Fp>(raw[i].data(), 15), Fp::zero(P));
            pulls_mixed.push_back(substitute(h, std::span<const Poly>(mixed.basis)));
        }
        IdealSpec ib = IdealSpec::make(proj2_vars(), P, pulls_base);
        IdealSpec im = IdealSpec::make(proj2_vars(), P, pulls_mixed);
        CHECK(equal_ideals(ib, im));

        // rewriting the mixed quadrics through y -> mix * y lands in the same
        // quadric subspace as the base ones
        std::vector<Poly> yimgs;
        for (std::size_t i = 0; i < 5; ++i) {
            Poly img(quadric_vars(), MonomialOrder::grevlex(), Fp::zero(P));
            for (std::size_t j = 0; j < 5; ++j) img.add_term(Monomial::var(j, 5), mix(i, j));
            yimgs.push_back(std::move(img));
        }
        Mat<Fp> span_base(3, 15, Fp::zero(P));
        Mat<Fp> stacked(6, 15, Fp::zero(P));
        for (std::size_t i = 0; i < 3; ++i) {
            auto vb = coeff_vector(base.quadrics[i], 2);
            Poly h = from_coeff_vector(quadric_vars(), MonomialOrder::grevlex(), 2,
                                       std::span<const Fp>(raw[i].data(), 15), Fp::zero(P));
            auto vm = coeff_vector(substitute(h, std::span<const Poly>(yimgs)), 2);
            for (std::size_t j = 0; j < 15; ++j) {
                span_base(i, j) = vb[j];
                stacked(i, j) = vb[j];
                stacked(i + 3, j) = vm[j];
            }
        }
        CHECK(rank(span_base) == 3);
        CHECK(rank(stacked) == 3);  // same span
    }
}
