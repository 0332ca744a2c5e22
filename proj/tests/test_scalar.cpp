#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prym/rng.hpp"
#include "prym/scalar.hpp"

using namespace prym;

TEST_CASE("prime construction") {
    CHECK(Prime(101).value() == 101);
    CHECK(Prime(3).value() == 3);
    CHECK_THROWS_AS(Prime(2), PrymError);
    CHECK_THROWS_AS(Prime(1), PrymError);
    CHECK_THROWS_AS(Prime(91), PrymError);  // 7 * 13
    CHECK_THROWS_AS(Prime(0), PrymError);
}

TEST_CASE("field arithmetic basics mod 101") {
    CHECK((Fp(50, 101) + Fp(60, 101)).value() == 9);
    CHECK(Fp(2, 101).inv().value() == 51);
    CHECK((Fp(2, 101) * Fp(51, 101)).value() == 1);
    SplitMix64 rng(1);
    for (int i = 0; i < 50; ++i) {
        Fp x = rng.field(101);
        CHECK((Fp(0, 101) * x).is_zero());
    }
    CHECK(Fp(-1, 101).value() == 100);
    CHECK_THROWS_AS(Fp(0, 101).inv(), DivisionByZero);
}

TEST_CASE("field axioms exhaustively for p in {3,5,7}") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (std::uint32_t a = 0; a < p; ++a)
            for (std::uint32_t b = 0; b < p; ++b) {
                Fp x(a, p), y(b, p);
                CHECK(x + y == y + x);
                CHECK(x * y == y * x);
                for (std::uint32_t c = 0; c < p; ++c) {
                    Fp z(c, p);
                    CHECK((x + y) + z == x + (y + z));
                    CHECK((x * y) * z == x * (y * z));
                    CHECK(x * (y + z) == x * y + x * z);
                }
                if (!y.is_zero()) CHECK(y * y.inv() == Fp::one(p));
            }
    }
}

TEST_CASE("field axioms randomized at p = 101") {
    SplitMix64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Fp x = rng.field(101), y = rng.field(101), z = rng.field(101);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == Fp::zero(101));
        if (!x.is_zero()) CHECK(x * x.inv() == Fp::one(101));
    }
}

TEST_CASE("dual inverse examples mod 101") {
    Dual x(Fp(1, 101), Fp(3, 101));
    Dual ix = x.inv();
    CHECK(ix == Dual(Fp(1, 101), Fp(98, 101)));
    CHECK(x * ix == Dual::one(101));

    Dual two(Fp(2, 101), Fp(0, 101));
    CHECK(two.inv() == Dual(Fp(51, 101), Fp(0, 101)));
    CHECK_THROWS_AS(Dual(Fp(0, 101), Fp(5, 101)).inv(), NotAUnit);
}

TEST_CASE("dual inverse property, exhaustive small p and randomized p = 101") {
    for (std::uint32_t a = 1; a < 7; ++a)
        for (std::uint32_t b = 0; b < 7; ++b) {
            Dual x(Fp(a, 7), Fp(b, 7));
            CHECK(x * x.inv() == Dual::one(7));
        }
    SplitMix64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Dual x(rng.nonzero_field(101), rng.field(101));
        Fp a = x.constant_part(), b = x.eps_part();
        Dual expected(a.inv(), -(a.inv() * a.inv() * b));
        CHECK(x.inv() == expected);
        CHECK(x * x.inv() == Dual::one(101));
    }
}

TEST_CASE("dual ring is local: non-units form an ideal, squares of non-units vanish") {
    SplitMix64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Dual u(Fp::zero(101), rng.field(101));
        Dual v(Fp::zero(101), rng.field(101));
        CHECK((u * v).is_zero());
        CHECK_FALSE((u + v).is_unit());
        Dual any(rng.field(101), rng.field(101));
        CHECK_FALSE((any * u).is_unit());
    }
}

TEST_CASE("eps -> 0 reduction is a ring homomorphism") {
    SplitMix64 rng(9);
    for (int i = 0; i < 200; ++i) {
        Dual x(rng.field(101), rng.field(101));
        Dual y(rng.field(101), rng.field(101));
        CHECK((x + y).constant_part() == x.constant_part() + y.constant_part());
        CHECK((x * y).constant_part() == x.constant_part() * y.constant_part());
    }
}
