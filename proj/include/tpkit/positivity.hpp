#ifndef TPKIT_POSITIVITY_HPP
#define TPKIT_POSITIVITY_HPP

#include <optional>
#include <string>

#include "tpkit/matrix.hpp"

namespace tpkit {

enum class PositivityProperty { TPk, TNk, TP2c };

struct WitnessMinor {
    IndexSet rowSet;
    IndexSet colSet;
    Rational value;
};

struct PositivityVerdict {
    PositivityProperty property;
    int order;
    bool holds;
    std::optional<WitnessMinor> witness; // violating minor when holds = false
};

// Fekete check: all contiguous minors of orders 1..k must be positive.
// On failure the witness is the first violation in (order, row, col)
// lexicographic scan order.
PositivityVerdict isTPk(const ExactMatrix& a, int k);

// TN_k checks ALL minors of orders 1..k (Fekete does not cover the
// nonnegative case). Guarded at n <= 8.
PositivityVerdict isTNk(const ExactMatrix& a, int k);

// Quantitative TP_2 dominance: a_{i,j} a_{i+1,j+1} >= c a_{i+1,j} a_{i,j+1}
// for all adjacent 2x2 positions, i, j in [1, n-1]. Requires positive
// entries and c > 0.
PositivityVerdict isTP2c(const ExactMatrix& a, const Rational& c);

// Rational bracket around 4 cos^2(pi / (n+1)), the TP_2(c) => TP threshold.
struct Tp2cThreshold {
    int n;
    Rational lower;
    Rational upper;
};

Tp2cThreshold tp2cThreshold(int n, int precisionBits = 128);

// B = A - t E_{1,1} with t = det(A) / det(A({1})); det(B) = 0 exactly.
// Requires a TP 6x6 input.
ExactMatrix singularPerturbation(const ExactMatrix& a);

std::string describe(const PositivityVerdict& v);

} // namespace tpkit

#endif
