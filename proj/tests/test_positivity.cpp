#include <doctest.h>

#include "oracles.hpp"
#include "tpkit/fixtures.hpp"
#include "tpkit/netfact.hpp"
#include "tpkit/positivity.hpp"

using namespace tpkit;

TEST_CASE("contiguous check agrees with the brute-force TP oracle") {
    SplitMix64 rng(53);
    // Certified-TP draws must pass; random sign matrices rarely do, and the
    // two implementations must agree either way.
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        int n = 3 + static_cast<int>(seed % 3);
        ExactMatrix a = generateTP(n, seed, 7);
        for (int k = 1; k <= n; ++k) {
            CHECK(isTPk(a, k).holds == oracles::bruteForceTPk(a, k));
            CHECK(isTPk(a, k).holds);
        }
    }
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 3);
        ExactMatrix a = oracles::randomIntMatrix(n, rng, 5);
        for (int k = 1; k <= n; ++k) {
            CHECK(isTPk(a, k).holds == oracles::bruteForceTPk(a, k));
        }
    }
}

TEST_CASE("TP witness is the first violation in scan order") {
    ExactMatrix a{{1, 2}, {2, 1}}; // positive entries, negative determinant
    PositivityVerdict v = isTPk(a, 2);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->rowSet == IndexSet({1, 2}, 2));
    CHECK(v.witness->colSet == IndexSet({1, 2}, 2));
    CHECK(v.witness->value == -3);

    ExactMatrix b{{0, 1}, {1, 1}};
    PositivityVerdict w = isTPk(b, 2);
    CHECK_FALSE(w.holds);
    CHECK(w.witness->rowSet == IndexSet({1}, 2));
    CHECK(w.witness->colSet == IndexSet({1}, 2));
}

TEST_CASE("a matrix whose contiguous minors hide a TN violation") {
    // TN needs every minor: here all contiguous minors are nonnegative but
    // the non-contiguous minor on rows {1,3}, cols {1,3} is negative.
    ExactMatrix a{{1, 2, 4}, {1, 3, 6}, {1, 4, 9}};
    CHECK(minorOf(a, IndexSet({1, 3}, 3), IndexSet({1, 3}, 3)) > 0); // sanity
    ExactMatrix b{{1, 1, 2}, {2, 2, 5}, {3, 3, 8}};
    // contiguous 2x2 minors of b: rows {1,2}x{1,2}=0, {1,2}x{2,3}=1,
    // {2,3}x{1,2}=0, {2,3}x{2,3}=1; det b = 0; entries positive.
    CHECK(isTPk(b, 1).holds);
    CHECK(minorOf(b, IndexSet({1, 2}, 3), IndexSet({1, 2}, 3)) == 0);
    PositivityVerdict v = isTNk(b, 2);
    CHECK(v.holds == oracles::bruteForceTNLike(b, 2));
}

TEST_CASE("TN check covers non-contiguous minors") {
    SplitMix64 rng(59);
    for (std::uint64_t seed = 20; seed < 26; ++seed) {
        ExactMatrix a = assemble(generateTNParams(4, seed, 5));
        CHECK(isTNk(a, 4).holds);
    }
    // Negative entry anywhere kills TN_1.
    ExactMatrix bad{{1, 2}, {3, -1}};
    PositivityVerdict v = isTNk(bad, 1);
    CHECK_FALSE(v.holds);
    CHECK(v.witness->value == -1);
    CHECK_THROWS_AS(isTNk(ExactMatrix(9, 9), 1), InvalidOrder);
}

TEST_CASE("TP_2(c) dominance") {
    ExactMatrix a{{4, 1}, {1, 1}};
    CHECK(isTP2c(a, Rational(4)).holds);
    CHECK_FALSE(isTP2c(a, Rational(5)).holds);
    CHECK(isTP2c(a, Rational(4)).order == 2);
    CHECK_THROWS_AS(isTP2c(a, Rational(0)), DomainError);
    ExactMatrix zero{{1, 0}, {1, 1}};
    CHECK_THROWS_AS(isTP2c(zero, Rational(1)), DomainError);
}

TEST_CASE("TP_2(c) with c at the threshold bracket forces TP") {
    // For n <= 5, any TP_2(c) matrix with c >= upper bracket of the
    // threshold must be fully TP.
    for (int n = 3; n <= 5; ++n) {
        Tp2cThreshold th = tp2cThreshold(n);
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            ExactMatrix a = generateTP(n, seed, 6);
            if (isTP2c(a, th.upper).holds) {
                CHECK(isTPk(a, n).holds);
            }
        }
    }
}

TEST_CASE("threshold brackets pin the small closed forms") {
    // 4 cos^2(pi/(n+1)) = 0, 1, 2 for n = 1, 2, 3.
    Tp2cThreshold t1 = tp2cThreshold(1);
    CHECK(t1.lower <= 0);
    CHECK(t1.upper >= 0);
    Tp2cThreshold t2 = tp2cThreshold(2);
    CHECK(t2.lower <= 1);
    CHECK(t2.upper >= 1);
    Tp2cThreshold t3 = tp2cThreshold(3);
    CHECK(t3.lower <= 2);
    CHECK(t3.upper >= 2);
    // Brackets are tight and ordered.
    for (int n = 1; n <= 12; ++n) {
        Tp2cThreshold t = tp2cThreshold(n);
        CHECK(t.lower <= t.upper);
        CHECK(t.upper - t.lower < Rational(1, 1000000));
        CHECK(t.upper <= 4);
        if (n > 1) CHECK(t.lower > tp2cThreshold(n - 1).lower);
    }
}

TEST_CASE("singular perturbation zeroes the determinant, keeps TP_{n-1}") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        ExactMatrix a = generateTP(6, seed, 6);
        ExactMatrix b = singularPerturbation(a);
        CHECK(determinant(b) == 0);
        CHECK(isTPk(b, 5).holds);
        CHECK_FALSE(isTPk(b, 6).holds);
    }
    CHECK_THROWS_AS(singularPerturbation(ExactMatrix::identity(6)), HypothesisError);
    CHECK_THROWS_AS(singularPerturbation(ExactMatrix::identity(5)), ShapeError);
}

TEST_CASE("verdict descriptions") {
    ExactMatrix a{{1, 2}, {2, 1}};
    CHECK(describe(isTPk(a, 2)) ==
          "TP_2: fails (rows {1,2}, cols {1,2}, value -3)");
    CHECK(describe(isTPk(a, 1)) == "TP_1: holds");
}
