#ifndef TPKIT_HANKEL_HPP
#define TPKIT_HANKEL_HPP

#include <cstdint>
#include <vector>

#include "tpkit/positivity.hpp"

namespace tpkit {

// Odd-length moment sequence a_0, ..., a_{2n} inducing the (n+1)x(n+1)
// Hankel matrix (a_{i+j}).
struct HankelSpec {
    std::vector<Rational> sequence;
};

ExactMatrix hankelFromSequence(const HankelSpec& spec);

bool isHankel(const ExactMatrix& a);

// A' = A[{1..n}, {2..n+1}], the Hankel matrix on a_1, ..., a_{2n-1}.
ExactMatrix shiftedHankel(const ExactMatrix& a);

// Exact Sylvester criterion: all leading principal minors positive.
PositivityVerdict isPositiveDefinite(const ExactMatrix& a);

// TP criterion for Hankel matrices: A is TP iff A and A' are both
// positive definite.
PositivityVerdict isTPHankel(const ExactMatrix& a);

// Moments of a discrete positive measure: a_k = sum_t w_t x_t^k with
// positive rational weights and distinct positive nodes, t = 1..nodes.
// The induced Hankel matrix of order `nodes` is TP.
HankelSpec momentSequence(int nodes, std::uint64_t seed, std::uint64_t magnitude = 9);

struct HankelTheoremReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// Checks, for every k, that D_k(A) is exactly Hankel and TP (for k = n the
// scalar case reduces to det A > 0), and that D_k(A)' = D_k(A').
HankelTheoremReport verifyTheoremC(const HankelSpec& spec);

} // namespace tpkit

#endif
