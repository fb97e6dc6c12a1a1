#ifndef TPKIT_CONDENSATION_HPP
#define TPKIT_CONDENSATION_HPP

#include <utility>
#include <vector>

#include "tpkit/matrix.hpp"

namespace tpkit {

// Full Dodgson condensation sequence D_1(A), ..., D_{n-1}(A).
// fallbackFlags[k-1] lists the (i,j) positions of stage k whose recursive
// divisor was zero, so the entry was computed as a direct contiguous minor.
struct CondensationSequence {
    ExactMatrix source;
    std::vector<ExactMatrix> stages;
    std::vector<std::vector<std::pair<int, int>>> fallbackFlags;

    const ExactMatrix& stage(int k) const { return stages.at(static_cast<size_t>(k) - 1); }
    Rational finalScalar() const { return stages.back().at(1, 1); }
};

// D_k(A) of order n-k. Entries are computed by the recursive 2x2 division
// scheme; a zero divisor falls back to the direct contiguous minor.
ExactMatrix condense(const ExactMatrix& a, int k);

CondensationSequence condensationSequence(const ExactMatrix& a);

struct SylvesterResult {
    Rational lhs;
    Rational rhs;
    bool holds;
};

// Evaluates both sides of Sylvester's identity
//   det B[delta, gamma] = (det A[alpha])^{l-1} det A[alpha u delta, alpha u gamma]
// where b_{i,j} = det A[alpha u {i}, alpha u {j}] for i, j not in alpha.
SylvesterResult sylvesterCheck(const ExactMatrix& a, const IndexSet& alpha,
                               const IndexSet& delta, const IndexSet& gamma);

} // namespace tpkit

#endif
