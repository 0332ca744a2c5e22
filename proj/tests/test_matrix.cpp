#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prym/matrix.hpp"
#include "prym/rng.hpp"

using namespace prym;

namespace {

Mat<Fp> random_matrix(SplitMix64& rng, std::size_t r, std::size_t c, std::uint32_t p) {
    Mat<Fp> m(r, c, Fp::zero(p));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.field(p);
    return m;
}

}  // namespace

TEST_CASE("rref and rank on a known system") {
    // x + 2y = 3, 2x + 4y = 6 has rank 1 over F_101
    Mat<Fp> m(2, 3, Fp::zero(101));
    m(0, 0) = Fp(1, 101); m(0, 1) = Fp(2, 101); m(0, 2) = Fp(3, 101);
    m(1, 0) = Fp(2, 101); m(1, 1) = Fp(4, 101); m(1, 2) = Fp(6, 101);
    CHECK(rank(m) == 1);
    CHECK(rank_by_column_greedy(m) == 1);
}

TEST_CASE("kernel basis annihilates the matrix and has echelon shape") {
    SplitMix64 rng(5);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t r = 1 + rng.below(6), c = 1 + rng.below(8);
        Mat<Fp> m = random_matrix(rng, r, c, 101);
        auto kern = kernel_basis(m, Fp::one(101));
        CHECK(kern.size() == c - rank(m));
        for (const auto& v : kern)
            for (std::size_t i = 0; i < r; ++i) {
                Fp s = Fp::zero(101);
                for (std::size_t j = 0; j < c; ++j) s = s + m(i, j) * v[j];
                CHECK(s.is_zero());
            }
        // echelon normalization: each vector is 1 at its own free column and
        // 0 at the free columns of the others
        for (std::size_t a = 0; a < kern.size(); ++a) {
            std::size_t ones = 0;
            for (std::size_t j = 0; j < c; ++j)
                if (kern[a][j] == Fp::one(101)) ++ones;
            CHECK(ones >= 1);
        }
    }
}

TEST_CASE("rank agreement between elimination and greedy column count") {
    SplitMix64 rng(17);
    for (int iter = 0; iter < 50; ++iter) {
        Mat<Fp> m = random_matrix(rng, 1 + rng.below(10), 1 + rng.below(10), 101);
        CHECK(rank(m) == rank_by_column_greedy(m));
    }
}

TEST_CASE("solve_linear") {
    Mat<Fp> a(2, 2, Fp::zero(101));
    a(0, 0) = Fp(1, 101); a(0, 1) = Fp(1, 101);
    a(1, 0) = Fp(1, 101); a(1, 1) = Fp(-1, 101);
    auto x = solve_linear(a, {Fp(4, 101), Fp(2, 101)}, Fp::one(101));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Fp(3, 101));
    CHECK((*x)[1] == Fp(1, 101));

    // inconsistent system
    Mat<Fp> b(2, 1, Fp::zero(101));
    b(0, 0) = Fp(1, 101);
    b(1, 0) = Fp(1, 101);
    CHECK_FALSE(solve_linear(b, {Fp(0, 101), Fp(1, 101)}, Fp::one(101)).has_value());
}

TEST_CASE("dual rref lifts the base computation when flat") {
    std::uint32_t p = 101;
    SplitMix64 rng(23);
    for (int iter = 0; iter < 30; ++iter) {
        // base with full row rank and an invertible leading block, so the
        // perturbed matrix is flat and the unit-pivot sweep cannot stall
        std::size_t r = 2 + rng.below(4), c = r + rng.below(5);
        Mat<Fp> lead(1, 1, Fp::zero(p));
        do {
            lead = random_matrix(rng, r, r, p);
        } while (rank(lead) != r);
        Mat<Fp> tail = random_matrix(rng, r, c - r, p);
        Mat<Fp> a0(r, c, Fp::zero(p));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) a0(i, j) = lead(i, j);
            for (std::size_t j = r; j < c; ++j) a0(i, j) = tail(i, j - r);
        }
        Mat<Dual> a(r, c, Dual::zero(p));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = Dual(a0(i, j), rng.field(p));
        auto kern = kernel_basis(a, Dual::one(p));
        auto kern0 = kernel_basis(a0, Fp::one(p));
        REQUIRE(kern.size() == kern0.size());
        for (std::size_t k = 0; k < kern.size(); ++k)
            for (std::size_t j = 0; j < c; ++j) CHECK(kern[k][j].constant_part() == kern0[k][j]);
        // membership over the dual ring
        for (const auto& v : kern)
            for (std::size_t i = 0; i < r; ++i) {
                Dual s = Dual::zero(p);
                for (std::size_t j = 0; j < c; ++j) s = s + a(i, j) * v[j];
                CHECK(s.is_zero());
            }
    }
}

TEST_CASE("dual rref raises NonGenericPivot when the base rank drops") {
    std::uint32_t p = 101;
    Mat<Dual> a(1, 1, Dual(Fp::zero(p), Fp::one(p)));  // the matrix (eps)
    CHECK_THROWS_AS(rref_in_place(a), NonGenericPivot);
}
