#include "tpkit/condensation.hpp"

#include <algorithm>
#include <string>

namespace tpkit {

namespace {

bool allIntegerEntries(const ExactMatrix& a) {
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j)
            if (a.at(i, j).get_den() != 1) return false;
    return true;
}

// One condensation step: prev1 = M^{(k-1)}, prev2 = M^{(k-2)} (nullptr at
// k = 1, where the divisor is the all-ones convention from D_0 = A).
ExactMatrix condenseStep(const ExactMatrix& source, int k, const ExactMatrix& prev1,
                         const ExactMatrix* prev2,
                         std::vector<std::pair<int, int>>* flags) {
    const int order = prev1.rows() - 1;
    ExactMatrix out(order, order);
    for (int i = 1; i <= order; ++i) {
        for (int j = 1; j <= order; ++j) {
            Rational numer = prev1.at(i, j) * prev1.at(i + 1, j + 1) -
                             prev1.at(i, j + 1) * prev1.at(i + 1, j);
            Rational divisor = prev2 ? prev2->at(i + 1, j + 1) : Rational(1);
            if (divisor == 0) {
                out.at(i, j) = minorOf(source, IndexSet::range(i, i + k, source.rows()),
                                       IndexSet::range(j, j + k, source.cols()));
                if (flags) flags->emplace_back(i, j);
                continue;
            }
            Rational q = numer / divisor;
            // Over an integer source every stage entry is a minor, hence an
            // integer; a fractional quotient would mean the recursion broke.
            if (q.get_den() != 1 && allIntegerEntries(source)) {
                throw ConsistencyError("non-exact condensation division at stage " +
                                       std::to_string(k));
            }
            out.at(i, j) = q;
        }
    }
    return out;
}

} // namespace

ExactMatrix condense(const ExactMatrix& a, int k) {
    if (!a.isSquare()) throw ShapeError("condensation requires a square matrix");
    const int n = a.rows();
    if (k < 1 || k > n - 1) throw InvalidOrder("condensation order out of range");

    ExactMatrix prev1 = a; // D_0(A) = A
    ExactMatrix prev2 = a; // unused until stage 2
    for (int stage = 1; stage <= k; ++stage) {
        ExactMatrix next =
            condenseStep(a, stage, prev1, stage == 1 ? nullptr : &prev2, nullptr);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

CondensationSequence condensationSequence(const ExactMatrix& a) {
    if (!a.isSquare()) throw ShapeError("condensation requires a square matrix");
    const int n = a.rows();
    if (n < 2) throw ShapeError("condensation sequence needs order >= 2");

    CondensationSequence seq{a, {}, {}};
    ExactMatrix prev1 = a;
    ExactMatrix prev2 = a;
    for (int stage = 1; stage <= n - 1; ++stage) {
        std::vector<std::pair<int, int>> flags;
        ExactMatrix next =
            condenseStep(a, stage, prev1, stage == 1 ? nullptr : &prev2, &flags);
        seq.stages.push_back(next);
        seq.fallbackFlags.push_back(std::move(flags));
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return seq;
}

SylvesterResult sylvesterCheck(const ExactMatrix& a, const IndexSet& alpha,
                               const IndexSet& delta, const IndexSet& gamma) {
    if (!a.isSquare()) throw ShapeError("sylvesterCheck requires a square matrix");
    const int n = a.rows();
    if (alpha.bound() != n || delta.bound() != n || gamma.bound() != n) {
        throw InvalidIndex("index set bound does not match matrix order");
    }
    for (int v : delta.indices())
        if (alpha.contains(v)) throw InvalidIndex("delta must be disjoint from alpha");
    for (int v : gamma.indices())
        if (alpha.contains(v)) throw InvalidIndex("gamma must be disjoint from alpha");
    if (delta.size() != gamma.size() || delta.size() < 1) {
        throw ShapeError("delta and gamma must have equal positive cardinality");
    }
    const int l = delta.size();

    auto unionWith = [&](const IndexSet& extra) {
        std::vector<int> v = alpha.indices();
        v.insert(v.end(), extra.indices().begin(), extra.indices().end());
        std::sort(v.begin(), v.end());
        return IndexSet(v, n);
    };

    // B = bordered-minor matrix restricted to rows delta, cols gamma.
    ExactMatrix b(l, l);
    for (int p = 1; p <= l; ++p) {
        IndexSet rowUnion = unionWith(IndexSet({delta[p - 1]}, n));
        for (int q = 1; q <= l; ++q) {
            IndexSet colUnion = unionWith(IndexSet({gamma[q - 1]}, n));
            b.at(p, q) = minorOf(a, rowUnion, colUnion);
        }
    }

    Rational lhs = determinant(b);
    Rational detAlpha = alpha.size() > 0
                            ? minorOf(a, alpha, alpha)
                            : Rational(1);
    Rational power(1);
    for (int t = 0; t < l - 1; ++t) power *= detAlpha;
    Rational rhs = power * minorOf(a, unionWith(delta), unionWith(gamma));
    return {lhs, rhs, lhs == rhs};
}

} // namespace tpkit
