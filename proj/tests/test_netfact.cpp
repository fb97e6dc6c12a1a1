#include <doctest.h>

#include "oracles.hpp"
#include "tpkit/netfact.hpp"
#include "tpkit/positivity.hpp"
#include "tpkit/verify.hpp"

using namespace tpkit;

TEST_CASE("assemble expands the documented factor order at n = 3") {
    // A = L_2(l1) . (L_3(l2) L_2(l3)) . D . (U_2(u3) U_3(u2)) . U_2(u1)
    FactorizationParams p;
    p.n = 3;
    p.lowers = {{2, Rational(2)}, {3, Rational(3)}, {2, Rational(5)}};
    p.uppers = {{2, Rational(7)}, {3, Rational(11)}, {2, Rational(13)}};
    p.diag = {Rational(1), Rational(2), Rational(3)};
    ExactMatrix byHand = elementaryLower(3, 2, Rational(2)) *
                         elementaryLower(3, 3, Rational(3)) *
                         elementaryLower(3, 2, Rational(5));
    ExactMatrix d{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
    byHand = byHand * d;
    byHand = byHand * elementaryUpper(3, 2, Rational(13)) *
             elementaryUpper(3, 3, Rational(11)) * elementaryUpper(3, 2, Rational(7));
    CHECK(assemble(p) == byHand);
}

TEST_CASE("parameter layout validation") {
    FactorizationParams p;
    p.n = 3;
    p.lowers = {{2, 1}, {3, 1}, {2, 1}};
    p.uppers = {{2, 1}, {3, 1}, {2, 1}};
    p.diag = {1, 1, 1};
    CHECK_NOTHROW(p.validate());
    p.lowers[1].position = 2; // breaks the L_3 L_2 pattern of group 2
    CHECK_THROWS_AS(p.validate(), ShapeError);
    p.lowers[1].position = 3;
    p.lowers[0].value = -1;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.lowers[0].value = 1;
    p.diag[2] = 0;
    CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("positive parameters assemble to a TP matrix") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        int n = 3 + static_cast<int>(seed % 3);
        ExactMatrix a = generateTP(n, seed, 8);
        CHECK(oracles::bruteForceTPk(a, n));
    }
}

TEST_CASE("generation is a pure function of the seed") {
    CHECK(generateTP(5, 42, 9) == generateTP(5, 42, 9));
    CHECK_FALSE(generateTP(5, 42, 9) == generateTP(5, 43, 9));
}

TEST_CASE("factorize round-trips through assemble") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        int n = 2 + static_cast<int>(seed % 4);
        FactorizationParams params = generateTPParams(n, seed, 7);
        ExactMatrix a = assemble(params);
        FactorizationParams recovered = factorize(a);
        // For TP input the parameters themselves are unique.
        REQUIRE(recovered.lowers.size() == params.lowers.size());
        for (size_t i = 0; i < params.lowers.size(); ++i) {
            CHECK(recovered.lowers[i].position == params.lowers[i].position);
            CHECK(recovered.lowers[i].value == params.lowers[i].value);
            CHECK(recovered.uppers[i].value == params.uppers[i].value);
        }
        CHECK(recovered.diag == params.diag);
        CHECK(assemble(recovered) == a);
    }
}

TEST_CASE("factorize handles TN inputs with zeroed parameters") {
    for (std::uint64_t seed = 10; seed <= 20; ++seed) {
        int n = 3 + static_cast<int>(seed % 3);
        ExactMatrix a = assemble(generateTNParams(n, seed, 6));
        FactorizationParams recovered = factorize(a); // may differ from the draw
        CHECK(assemble(recovered) == a);
    }
}

TEST_CASE("factorize rejects singular and non-TN input") {
    CHECK_THROWS_AS(factorize(ExactMatrix{{1, 1}, {1, 1}}), DomainError);
    CHECK_THROWS_AS(factorize(ExactMatrix{{1, 2}, {3, 1}}), DomainError);
    CHECK_THROWS_AS(factorize(ExactMatrix(2, 3)), ShapeError);
}

TEST_CASE("path sums reproduce every minor of the assembled matrix") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        FactorizationParams params = generateTPParams(4, seed, 5);
        ExactMatrix a = assemble(params);
        PlanarNetwork net = networkFromParams(params);
        for (int r = 1; r <= 4; ++r) {
            for (const auto& rows : lexSubsets(4, r)) {
                for (const auto& cols : lexSubsets(4, r)) {
                    CHECK(lindstromMinor(net, rows, cols) == minorOf(a, rows, cols));
                }
            }
        }
    }
    // TN networks (zero-weight edges) as well, sampled.
    SplitMix64 rng(61);
    for (std::uint64_t seed = 30; seed <= 34; ++seed) {
        FactorizationParams params = generateTNParams(5, seed, 5);
        ExactMatrix a = assemble(params);
        PlanarNetwork net = networkFromParams(params);
        for (int trial = 0; trial < 10; ++trial) {
            int r = 1 + static_cast<int>(rng.next() % 5);
            auto subsets = lexSubsets(5, r);
            const IndexSet& rows = subsets[rng.next() % subsets.size()];
            const IndexSet& cols = subsets[rng.next() % subsets.size()];
            CHECK(lindstromMinor(net, rows, cols) == minorOf(a, rows, cols));
        }
    }
}

TEST_CASE("lindstrom guards") {
    FactorizationParams params = generateTPParams(3, 1, 3);
    PlanarNetwork net = networkFromParams(params);
    CHECK_THROWS_AS(lindstromMinor(net, IndexSet({1}, 3), IndexSet({1, 2}, 3)),
                    ShapeError);
    CHECK_THROWS_AS(lindstromMinor(net, IndexSet({1}, 4), IndexSet({1}, 4)),
                    InvalidIndex);
}

TEST_CASE("S-matrix index sets and the labelled construction") {
    std::vector<IndexSet> sets = sMatrixIndexSets(6);
    CHECK(sets[0] == IndexSet({1, 2, 3, 4}, 6));
    CHECK(sets[1] == IndexSet({1, 2, 3, 5}, 6));
    CHECK(sets[2] == IndexSet({1, 2, 3, 6}, 6));
    CHECK(sets[3] == IndexSet({1, 2, 4, 5}, 6));
    CHECK_THROWS_AS(sMatrixIndexSets(3), InvalidOrder);

    SMatrixParams p;
    p.n = 5;
    p.a = Rational(2); p.b = Rational(3); p.c = Rational(5);
    p.d = Rational(7); p.e = Rational(11); p.f = Rational(13);
    p.g = Rational(17); p.h = Rational(19); p.i = Rational(23);
    p.j = Rational(29); p.k = Rational(31); p.l = Rational(37);
    auto [s, a] = buildSMatrix(p);
    CHECK(s.rows() == 4);
    // Entries are the corresponding order-(n-2) minors of the big matrix.
    CHECK(s == extractSMatrix(a));
    // The formulas must match the assembled minors entry for entry.
    CHECK(s == sMatrixFormulaValues(p));
}

TEST_CASE("the S-matrix TN example is never TP_3") {
    SplitMix64 rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        SMatrixParams p;
        p.n = 4 + static_cast<int>(rng.next() % 3);
        Rational* labels[] = {&p.a, &p.b, &p.c, &p.d, &p.e, &p.f,
                              &p.g, &p.h, &p.i, &p.j, &p.k, &p.l};
        for (Rational* w : labels) *w = rng.nextPositiveRational(9);
        auto [s, a] = buildSMatrix(p);
        CHECK(isTPk(s, 1).holds); // entries are minors of a TP matrix
        CHECK_FALSE(isTPk(s, 3).holds);
        // and so for every simultaneous reordering
        Report perm = orderingInvarianceCheck(s);
        CHECK(perm.status == ReportStatus::Pass);
    }
}
