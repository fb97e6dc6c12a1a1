#ifndef TPKIT_TEST_ORACLES_HPP
#define TPKIT_TEST_ORACLES_HPP

// Independent reference implementations used only by tests. Nothing here
// may call the elimination-based determinant path it is checking.

#include <algorithm>
#include <vector>

#include "tpkit/compound.hpp"
#include "tpkit/matrix.hpp"
#include "tpkit/rng.hpp"

namespace oracles {

// Determinant by first-row cofactor expansion.
inline tpkit::Rational cofactorDet(const tpkit::ExactMatrix& a) {
    const int n = a.rows();
    if (n == 1) return a.at(1, 1);
    tpkit::Rational det(0);
    for (int j = 1; j <= n; ++j) {
        if (a.at(1, j) == 0) continue;
        std::vector<int> cols;
        for (int c = 1; c <= n; ++c)
            if (c != j) cols.push_back(c);
        tpkit::ExactMatrix sub =
            tpkit::submatrix(a, tpkit::IndexSet::range(2, n, n), tpkit::IndexSet(cols, n));
        tpkit::Rational term = a.at(1, j) * cofactorDet(sub);
        det += (j % 2 == 0) ? -term : term;
    }
    return det;
}

// Determinant as the signed sum over all permutations.
inline tpkit::Rational permanentSumDet(const tpkit::ExactMatrix& a) {
    const int n = a.rows();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
    tpkit::Rational det(0);
    do {
        int inversions = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        tpkit::Rational term(1);
        for (int i = 1; i <= n; ++i) term *= a.at(i, perm[static_cast<size_t>(i - 1)]);
        det += (inversions % 2 == 0) ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Brute-force TP_k: every minor of every order up to k, no Fekete shortcut.
inline bool bruteForceTPk(const tpkit::ExactMatrix& a, int k) {
    for (int r = 1; r <= k; ++r) {
        for (const auto& rows : tpkit::lexSubsets(a.rows(), r)) {
            for (const auto& cols : tpkit::lexSubsets(a.cols(), r)) {
                if (cofactorDet(tpkit::submatrix(a, rows, cols)) <= 0) return false;
            }
        }
    }
    return true;
}

// Brute-force TN_k: every minor of every order up to k is nonnegative.
inline bool bruteForceTNLike(const tpkit::ExactMatrix& a, int k) {
    for (int r = 1; r <= k; ++r) {
        for (const auto& rows : tpkit::lexSubsets(a.rows(), r)) {
            for (const auto& cols : tpkit::lexSubsets(a.cols(), r)) {
                if (cofactorDet(tpkit::submatrix(a, rows, cols)) < 0) return false;
            }
        }
    }
    return true;
}

inline tpkit::ExactMatrix randomIntMatrix(int n, tpkit::SplitMix64& rng, int magnitude) {
    tpkit::ExactMatrix a(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            a.at(i, j) = tpkit::Rational(rng.nextSignedInt(static_cast<std::uint64_t>(magnitude)));
    return a;
}

inline tpkit::ExactMatrix randomRationalMatrix(int n, tpkit::SplitMix64& rng,
                                               std::uint64_t magnitude) {
    tpkit::ExactMatrix a(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            a.at(i, j) = rng.nextPositiveRational(magnitude);
    return a;
}

} // namespace oracles

#endif
