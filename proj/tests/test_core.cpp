#include <doctest.h>

#include "oracles.hpp"
#include "tpkit/fixtures.hpp"
#include "tpkit/matrix.hpp"

using namespace tpkit;

TEST_CASE("submatrix extracts the indexed block") {
    const ExactMatrix& a = fixtures::hilbertExample();
    ExactMatrix block = submatrix(a, IndexSet({1, 2}, 4), IndexSet({1, 2}, 4));
    CHECK(block == ExactMatrix{{Rational(1, 2), Rational(1, 3)},
                               {Rational(1, 3), Rational(1, 4)}});

    CHECK(submatrix(a, IndexSet::full(4), IndexSet::full(4)) == a);

    ExactMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    ExactMatrix picked = submatrix(m, IndexSet({1, 3}, 3), IndexSet({2, 3}, 3));
    CHECK(picked == ExactMatrix{{2, 3}, {8, 9}});

    CHECK_THROWS_AS(IndexSet({0, 2}, 3), InvalidIndex);
    CHECK_THROWS_AS(IndexSet({2, 2}, 3), InvalidIndex);
    CHECK_THROWS_AS(IndexSet({4}, 3), InvalidIndex);
}

TEST_CASE("complement within the bound") {
    CHECK(IndexSet({2}, 3).complement() == IndexSet({1, 3}, 3));
    CHECK(IndexSet::full(5).complement().size() == 0);
    CHECK(IndexSet({1, 3}, 4).complement() == IndexSet({2, 4}, 4));
    IndexSet s({1, 4, 5}, 6);
    CHECK(s.complement().complement() == s);
}

TEST_CASE("determinant matches the worked 2x2 anchor") {
    ExactMatrix block{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 3), Rational(1, 4)}};
    CHECK(determinant(block) == Rational(1, 72));
    CHECK(determinant(ExactMatrix::identity(5)) == 1);
    CHECK_THROWS_AS(determinant(ExactMatrix(2, 3)), ShapeError);
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 5); // orders 2..6
        ExactMatrix a = oracles::randomIntMatrix(n, rng, 9);
        CHECK(determinant(a) == oracles::cofactorDet(a));
    }
    // and on rational entries
    for (int trial = 0; trial < 15; ++trial) {
        ExactMatrix a = oracles::randomRationalMatrix(4, rng, 9);
        CHECK(determinant(a) == oracles::cofactorDet(a));
    }
}

TEST_CASE("determinant handles zero pivots via row swaps") {
    ExactMatrix a{{0, 1, 2}, {3, 0, 1}, {1, 1, 1}};
    CHECK(determinant(a) == oracles::cofactorDet(a));
    ExactMatrix singular{{0, 0, 1}, {0, 0, 2}, {1, 1, 1}};
    CHECK(determinant(singular) == 0);
}

TEST_CASE("determinant is multiplicative") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 4); // orders 2..5
        ExactMatrix a = oracles::randomIntMatrix(n, rng, 6);
        ExactMatrix b = oracles::randomIntMatrix(n, rng, 6);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("minor anchors from the worked examples") {
    const ExactMatrix& a = fixtures::hilbertExample();
    CHECK(minorOf(a, IndexSet({1, 2}, 4), IndexSet({3, 4}, 4)) == Rational(1, 600));
    CHECK(minorOf(a, IndexSet({2}, 4), IndexSet({3}, 4)) == a.at(2, 3));
    const ExactMatrix& b = fixtures::condensationExample();
    CHECK(minorOf(b, IndexSet({1, 2}, 6), IndexSet({1, 2}, 6)) == 1);
    CHECK_THROWS_AS(minorOf(a, IndexSet({1, 2}, 4), IndexSet({3}, 4)), ShapeError);
}

TEST_CASE("minors cross-check against the permutation-sum oracle") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix a = oracles::randomIntMatrix(4, rng, 9);
        for (int r = 1; r <= 4; ++r) {
            for (const auto& rows : lexSubsets(4, r)) {
                for (const auto& cols : lexSubsets(4, r)) {
                    CHECK(minorOf(a, rows, cols) ==
                          oracles::permanentSumDet(submatrix(a, rows, cols)));
                }
            }
        }
    }
}

TEST_CASE("transposition symmetry of minors") {
    SplitMix64 rng(31);
    ExactMatrix a = oracles::randomIntMatrix(5, rng, 9);
    ExactMatrix at = a.transpose();
    for (const auto& rows : lexSubsets(5, 3)) {
        for (const auto& cols : lexSubsets(5, 3)) {
            CHECK(minorOf(at, cols, rows) == minorOf(a, rows, cols));
        }
    }
}

TEST_CASE("rational parsing") {
    CHECK(parseRational("3/6") == Rational(1, 2));
    CHECK(parseRational("-14") == -14);
    CHECK(parseRational(" 7/2 ") == Rational(7, 2));
    CHECK_THROWS_AS(parseRational("1/0"), ParseError);
    CHECK_THROWS_AS(parseRational("a/b"), ParseError);
    CHECK_THROWS_AS(parseRational(""), ParseError);
    CHECK(toString(Rational(-3, 7)) == "-3/7");
    CHECK(toString(Rational(4, 2)) == "2");
}
