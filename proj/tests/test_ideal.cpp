#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "test_util.hpp"

using namespace prym;
using prym::testutil::buchberger_certificate;
using prym::testutil::fixture_model;
using prym::testutil::gb_member;
using prym::testutil::oracle_member;
using prym::testutil::random_poly;

namespace {
constexpr std::uint32_t P = 101;

IdealSpec ideal_of(std::vector<Poly> gens) {
    VarSetPtr vars = gens.at(0).vars();
    std::uint32_t p = gens.at(0).zero_coeff().modulus();
    return IdealSpec::make(std::move(vars), p, std::move(gens));
}

VarSetPtr xy() {
    static VarSetPtr v = make_vars({"x", "y"});
    return v;
}

}  // namespace

TEST_CASE("principal ideal: GB of (x) is {x}") {
    GroebnerBasis g = groebner(ideal_of({parse_poly("x", xy(), P)}), MonomialOrder::grevlex());
    REQUIRE(g.elements().size() == 1);
    CHECK(g.elements()[0] == parse_poly("x", xy(), P));
}

TEST_CASE("lex GB of (x - y^2, y) is {x, y}") {
    IdealSpec i = ideal_of({parse_poly("x-y^2", xy(), P), parse_poly("y", xy(), P)});
    GroebnerBasis g = groebner(i, MonomialOrder::lex());
    REQUIRE(g.elements().size() == 2);
    CHECK(g.elements()[0] == parse_poly("x", xy(), P));
    CHECK(g.elements()[1] == parse_poly("y", xy(), P));
}

TEST_CASE("reference identity: u2*F reduces to zero modulo ((u2*x3+u3)^2 - f)") {
    QuarticModel m = fixture_model();
    VarSetPtr v4 = proj3_vars();
    auto lift = [&](const Poly& f) { return map_variables(f, v4, MonomialOrder::grevlex()); };
    Poly x3 = Poly::variable(v4, MonomialOrder::grevlex(), 3, Fp::one(P));
    Poly inner = lift(m.u2) * x3 + lift(m.u3);
    Poly gen = inner * inner - lift(m.sextic);
    GroebnerBasis g = groebner(ideal_of({gen}), MonomialOrder::grevlex());
    CHECK(normal_form(lift(m.u2) * m.quartic, g).is_zero());
}

TEST_CASE("normal form properties") {
    SplitMix64 rng(31);
    IdealSpec i = ideal_of({parse_poly("x^2+y", xy(), P), parse_poly("x*y-1", xy(), P)});
    GroebnerBasis g = groebner(i, MonomialOrder::grevlex());
    for (const Poly& gen : i.generators) CHECK(normal_form(gen, g).is_zero());
    for (int iter = 0; iter < 15; ++iter) {
        Poly f = random_poly(rng, xy(), 4, P);
        Poly nf = normal_form(f, g);
        CHECK(normal_form(nf, g) == nf);  // idempotence
        Poly h = random_poly(rng, xy(), 4, P);
        CHECK(normal_form(f + h, g) == normal_form(normal_form(f, g) + normal_form(h, g), g));
    }
    // nf(1) = 1 for a proper homogeneous ideal
    QuarticModel m = fixture_model();
    GroebnerBasis gu = groebner(ideal_of({m.u2, m.u3}), MonomialOrder::grevlex());
    Poly one = parse_poly("1", proj2_vars(), P);
    CHECK(normal_form(one, gu) == one);
}

TEST_CASE("reduced GB is independent of generator permutation") {
    SplitMix64 rng(33);
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<Poly> gens{random_poly(rng, proj2_vars(), 2, P), random_poly(rng, proj2_vars(), 3, P),
                               random_poly(rng, proj2_vars(), 2, P)};
        IdealSpec a = ideal_of(gens);
        std::reverse(gens.begin(), gens.end());
        IdealSpec b = ideal_of(gens);
        CHECK(groebner(a, MonomialOrder::grevlex()).same_elements(groebner(b, MonomialOrder::grevlex())));
    }
}

TEST_CASE("elimination examples") {
    VarSetPtr txy = make_vars({"t", "x", "y"});
    SUBCASE("parametrized parabola") {
        IdealSpec i = IdealSpec::make(txy, P, {parse_poly("x-t", txy, P), parse_poly("y-t^2", txy, P)});
        IdealSpec e = eliminate(i, {"t"});
        REQUIRE(e.generators.size() == 1);
        CHECK(e.generators[0] == parse_poly("x^2-y", xy(), P));
    }
    SUBCASE("unit times tag") {
        IdealSpec i = IdealSpec::make(txy, P, {parse_poly("t*x-1", txy, P), parse_poly("y", txy, P)});
        IdealSpec e = eliminate(i, {"t"});
        REQUIRE(e.generators.size() == 1);
        CHECK(e.generators[0] == parse_poly("y", xy(), P));
        CHECK(oracle_member(parse_poly("y", xy(), P), e, 4));
    }
    SUBCASE("eliminating nothing returns the same ideal") {
        IdealSpec i = IdealSpec::make(xy(), P, {parse_poly("x^2-y", xy(), P)});
        IdealSpec e = eliminate(i, {});
        CHECK(equal_ideals(i, e));
    }
}

TEST_CASE("intersection examples") {
    SUBCASE("(x) cap (y) = (xy)") {
        IdealSpec e = intersect(ideal_of({parse_poly("x", xy(), P)}), ideal_of({parse_poly("y", xy(), P)}));
        CHECK(equal_ideals(e, ideal_of({parse_poly("x*y", xy(), P)})));
    }
    SUBCASE("idempotence on a squared point ideal") {
        IdealSpec p2 = ideal_of({parse_poly("x^2", xy(), P), parse_poly("x*y", xy(), P), parse_poly("y^2", xy(), P)});
        CHECK(equal_ideals(intersect(p2, p2), p2));
    }
}

TEST_CASE("saturation examples") {
    SUBCASE("sat((xy), y) = (x)") {
        IdealSpec s = saturate(ideal_of({parse_poly("x*y", xy(), P)}), parse_poly("y", xy(), P));
        CHECK(equal_ideals(s, ideal_of({parse_poly("x", xy(), P)})));
    }
    SUBCASE("sat(I, 1) = I") {
        IdealSpec i = ideal_of({parse_poly("x^2+y^2", xy(), P)});
        CHECK(equal_ideals(saturate(i, parse_poly("1", xy(), P)), i));
    }
}

TEST_CASE("intersection and saturation agree with brute-force membership") {
    SplitMix64 rng(35);
    for (int iter = 0; iter < 3; ++iter) {
        IdealSpec a = ideal_of({random_poly(rng, xy(), 2, P), random_poly(rng, xy(), 2, P)});
        IdealSpec b = ideal_of({random_poly(rng, xy(), 2, P)});
        IdealSpec both = intersect(a, b);
        GroebnerBasis ga = groebner(a, MonomialOrder::grevlex());
        GroebnerBasis gb = groebner(b, MonomialOrder::grevlex());
        GroebnerBasis gboth = groebner(both, MonomialOrder::grevlex());
        for (int k = 0; k < 10; ++k) {
            Poly f = random_poly(rng, xy(), 3, P);
            CHECK(gb_member(f, gboth) == (gb_member(f, ga) && gb_member(f, gb)));
        }
        // saturation: f in (I : g^inf) iff g^k f in I for some small k
        Poly g0 = random_poly(rng, xy(), 1, P);
        if (g0.is_zero()) continue;
        IdealSpec sat = saturate(a, g0);
        GroebnerBasis gsat = groebner(sat, MonomialOrder::grevlex());
        for (int k = 0; k < 10; ++k) {
            Poly f = random_poly(rng, xy(), 2, P);
            bool in_sat = gb_member(f, gsat);
            bool witnessed = false;
            Poly gf = f;
            for (int e = 0; e <= 4 && !witnessed; ++e) {
                if (gb_member(gf, ga)) witnessed = true;
                gf = gf * g0;
            }
            if (witnessed) CHECK(in_sat);
            if (!in_sat) CHECK_FALSE(witnessed);
        }
    }
}

TEST_CASE("hilbert values") {
    SUBCASE("zero ideal in 4 variables at degree 4") {
        IdealSpec z = IdealSpec::make(proj3_vars(), P, {});
        CHECK(hilbert_value(z, 4) == 35);
    }
    SUBCASE("squared node ideals: quartic pieces of dimension 15 and 11") {
        QuarticModel m = fixture_model();
        IdealSpec acc;
        bool first = true;
        for (std::size_t i = 1; i < 6; ++i) {
            IdealSpec sq = point_double_ideal(proj3_vars(), P, m.nodes[i].canonical().coords);
            acc = first ? sq : intersect(acc, sq);
            first = false;
        }
        GroebnerBasis g = groebner(acc, MonomialOrder::grevlex());
        CHECK(hilbert_value(g, 4) == 20);              // quotient
        CHECK(graded_piece_basis(g, 4).size() == 15);  // ideal part
        CHECK(hilbert_value(g, 4) + 15 == 35);

        IdealSpec six = intersect(acc, point_double_ideal(proj3_vars(), P, m.nodes[0].canonical().coords));
        GroebnerBasis g6 = groebner(six, MonomialOrder::grevlex());
        CHECK(hilbert_value(g6, 4) == 24);
        CHECK(graded_piece_basis(g6, 4).size() == 11);
    }
}

TEST_CASE("hilbert_value rejects inhomogeneous ideals") {
    CHECK_THROWS_AS(hilbert_value(ideal_of({parse_poly("x^2+y", xy(), P)}), 2), NotHomogeneous);
}

TEST_CASE("f - nf(f) lies in the ideal") {
    SplitMix64 rng(97);
    IdealSpec i = ideal_of({random_poly(rng, xy(), 2, P), random_poly(rng, xy(), 3, P)});
    GroebnerBasis g = groebner(i, MonomialOrder::grevlex());
    for (int iter = 0; iter < 10; ++iter) {
        Poly f = random_poly(rng, xy(), 4, P);
        CHECK(normal_form(f - normal_form(f, g), g).is_zero());
    }
}

TEST_CASE("intersect rejects ideals over different rings") {
    IdealSpec a = ideal_of({parse_poly("x", xy(), P)});
    IdealSpec b = IdealSpec::make(proj2_vars(), P, {parse_poly("x0", proj2_vars(), P)});
    CHECK_THROWS_AS(intersect(a, b), IncompatibleVariables);
}

TEST_CASE("graded piece basis of (x0) in 2 variables at degree 2") {
    VarSetPtr v = make_vars({"x0", "x1"});
    IdealSpec i = IdealSpec::make(v, P, {parse_poly("x0", v, P)});
    std::vector<Poly> b = graded_piece_basis(i, 2);
    REQUIRE(b.size() == 2);
    for (const Poly& f : b) {
        CHECK(f.homogeneous_degree() == std::optional<int>(2));
        CHECK(f.coeff(Monomial{{0, 2}}).is_zero());  // x1^2 is not in the ideal
    }
}

TEST_CASE("zero-dimensional degree") {
    SUBCASE("(x^2, y) has length 2") {
        CHECK(zero_dim_degree(ideal_of({parse_poly("x^2", xy(), P), parse_poly("y", xy(), P)})) == 2);
    }
    SUBCASE("maximal ideal of a point has length 1") {
        CHECK(zero_dim_degree(ideal_of({parse_poly("x-3", xy(), P), parse_poly("y-5", xy(), P)})) == 1);
    }
    SUBCASE("positive-dimensional input is rejected") {
        CHECK_THROWS_AS(zero_dim_degree(ideal_of({parse_poly("x", xy(), P)})), PositiveDimensional);
    }
    SUBCASE("contact scheme of the reference model has length 6 in the x2 chart") {
        QuarticModel m = fixture_model();
        IdealSpec contact = IdealSpec::make(proj2_vars(), P, {m.u2, m.u3});
        CHECK(zero_dim_degree(dehomogenize(contact, 2)) == 6);
    }
}

TEST_CASE("reducedness certificate") {
    SplitMix64 rng(37);
    SUBCASE("double point is not reduced") {
        CHECK(is_reduced_zero_dim(ideal_of({parse_poly("x^2", xy(), P), parse_poly("y", xy(), P)}), rng) ==
              Tristate::no);
    }
    SUBCASE("two distinct points are reduced") {
        CHECK(is_reduced_zero_dim(ideal_of({parse_poly("x^2-x", xy(), P), parse_poly("y", xy(), P)}), rng) ==
              Tristate::yes);
    }
    SUBCASE("contact scheme of the reference model is reduced") {
        QuarticModel m = fixture_model();
        IdealSpec contact = IdealSpec::make(proj2_vars(), P, {m.u2, m.u3});
        CHECK(is_reduced_zero_dim(dehomogenize(contact, 2), rng) == Tristate::yes);
    }
}

TEST_CASE("projective emptiness") {
    QuarticModel m = fixture_model();
    CHECK(projectively_empty(IdealSpec::make(proj2_vars(), P, {m.u2, m.u3, m.u4})));
    CHECK_FALSE(projectively_empty(IdealSpec::make(proj2_vars(), P, {m.u2})));
}

TEST_CASE("Buchberger certificate and oracle agreement on random small ideals") {
    SplitMix64 rng(39);
    VarSetPtr v3 = make_vars({"x", "y", "z"});
    for (std::uint32_t p : {3u, 7u, 101u}) {
        for (int iter = 0; iter < 8; ++iter) {
            std::vector<Poly> gens;
            int ng = 1 + static_cast<int>(rng.below(3));
            for (int k = 0; k < ng; ++k)
                gens.push_back(random_poly(rng, v3, 1 + static_cast<int>(rng.below(3)), p));
            IdealSpec i = IdealSpec::make(v3, p, gens);
            if (i.generators.empty()) continue;
            GroebnerBasis g = groebner(i, MonomialOrder::grevlex());
            CHECK(buchberger_certificate(g));
            for (int k = 0; k < 4; ++k) {
                Poly f = random_poly(rng, v3, 2, p);
                CHECK(gb_member(f, g) == oracle_member(f, i, 6));
                Poly member(v3, MonomialOrder::grevlex(), Fp::zero(p));
                for (const Poly& gen : i.generators) member = member + gen * random_poly(rng, v3, 1, p);
                CHECK(gb_member(member, g));
                if (member.total_degree() <= 6) CHECK(oracle_member(member, i, 6));
            }
        }
    }
}

TEST_CASE("projective scheme info for the reference contact scheme") {
    QuarticModel m = fixture_model();
    SplitMix64 rng(41);
    IdealSpec contact = saturate_irrelevant(IdealSpec::make(proj2_vars(), P, {m.u2, m.u3}));
    ProjectiveSchemeInfo info = projective_scheme_info(contact, rng);
    CHECK(info.zero_dimensional);
    CHECK(info.degree == 6);
    CHECK(info.reduced == Tristate::yes);
}
