#include <doctest.h>

#include "oracles.hpp"
#include "tpkit/condensation.hpp"
#include "tpkit/fixtures.hpp"
#include "tpkit/netfact.hpp"

using namespace tpkit;

TEST_CASE("first condensation of the worked 6x6 is bit-exact") {
    CHECK(condense(fixtures::condensationExample(), 1) ==
          fixtures::condensationExampleD1());
}

TEST_CASE("condensation entries are contiguous minors") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 3 + static_cast<int>(rng.next() % 4); // orders 3..6
        ExactMatrix a = oracles::randomIntMatrix(n, rng, 7);
        for (int k = 1; k <= n - 1; ++k) {
            ExactMatrix dk = condense(a, k);
            REQUIRE(dk.rows() == n - k);
            for (int i = 1; i <= n - k; ++i) {
                for (int j = 1; j <= n - k; ++j) {
                    CHECK(dk.at(i, j) ==
                          oracles::cofactorDet(submatrix(
                              a, IndexSet::range(i, i + k, n),
                              IndexSet::range(j, j + k, n))));
                }
            }
        }
    }
}

TEST_CASE("zero divisors fall back to the direct minor and are flagged") {
    // Stage 2 divides by the interior entries of A; a(2,2) = 0 forces the
    // fallback at that position.
    ExactMatrix a{{1, 2, 3, 4}, {5, 0, 2, 1}, {3, 1, 1, 2}, {4, 2, 5, 3}};
    CondensationSequence seq = condensationSequence(a);
    CHECK(seq.stages.size() == 3);
    CHECK(seq.finalScalar() == determinant(a));
    bool anyFlag = false;
    for (const auto& flags : seq.fallbackFlags) anyFlag = anyFlag || !flags.empty();
    CHECK(anyFlag);
    // Flags or not, every stage entry still equals its contiguous minor.
    for (size_t s = 0; s < seq.stages.size(); ++s) {
        int k = static_cast<int>(s) + 1;
        for (int i = 1; i <= 4 - k; ++i)
            for (int j = 1; j <= 4 - k; ++j)
                CHECK(seq.stages[s].at(i, j) ==
                      minorOf(a, IndexSet::range(i, i + k, 4),
                              IndexSet::range(j, j + k, 4)));
    }
}

TEST_CASE("condensation sequence on TP input never needs the fallback") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        ExactMatrix a = generateTP(5, seed, 6);
        CondensationSequence seq = condensationSequence(a);
        for (const auto& flags : seq.fallbackFlags) CHECK(flags.empty());
        CHECK(seq.finalScalar() == determinant(a));
    }
}

TEST_CASE("condense argument validation") {
    ExactMatrix a{{1, 2}, {3, 4}};
    CHECK_THROWS_AS(condense(a, 0), InvalidOrder);
    CHECK_THROWS_AS(condense(a, 2), InvalidOrder);
    CHECK(condense(a, 1).at(1, 1) == determinant(a));
    CHECK_THROWS_AS(condense(ExactMatrix(2, 3), 1), ShapeError);
}

TEST_CASE("Sylvester's identity on random matrices") {
    SplitMix64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng.next() % 3); // 3..5
        ExactMatrix a = oracles::randomIntMatrix(n, rng, 6);
        // alpha = a random proper nonempty prefix-free subset; delta, gamma
        // equal-size subsets of the complement.
        int m = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 2));
        std::vector<int> pool;
        for (int i = 1; i <= n; ++i) pool.push_back(i);
        for (int i = 0; i < m; ++i) {
            int pick = i + static_cast<int>(rng.next() %
                                            static_cast<std::uint64_t>(n - i));
            std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(pick)]);
        }
        std::vector<int> alphaIdx(pool.begin(), pool.begin() + m);
        std::sort(alphaIdx.begin(), alphaIdx.end());
        IndexSet alpha(alphaIdx, n);
        IndexSet rest = alpha.complement();
        int l = 1 + static_cast<int>(rng.next() %
                                     static_cast<std::uint64_t>(rest.size()));
        auto pickFrom = [&](const IndexSet& src, int count) {
            std::vector<int> v = src.indices();
            for (int i = 0; i < count; ++i) {
                int pick = i + static_cast<int>(
                                   rng.next() %
                                   static_cast<std::uint64_t>(v.size() - static_cast<size_t>(i)));
                std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(pick)]);
            }
            std::vector<int> out(v.begin(), v.begin() + count);
            std::sort(out.begin(), out.end());
            return IndexSet(out, n);
        };
        IndexSet delta = pickFrom(rest, l);
        IndexSet gamma = pickFrom(rest, l);
        SylvesterResult r = sylvesterCheck(a, alpha, delta, gamma);
        CHECK(r.holds);
        CHECK(r.lhs == r.rhs);
    }
}

TEST_CASE("Sylvester check rejects overlapping or mismatched sets") {
    ExactMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
    CHECK_THROWS_AS(
        sylvesterCheck(a, IndexSet({1}, 3), IndexSet({1}, 3), IndexSet({2}, 3)),
        InvalidIndex);
    CHECK_THROWS_AS(
        sylvesterCheck(a, IndexSet({1}, 3), IndexSet({2, 3}, 3), IndexSet({2}, 3)),
        ShapeError);
}
