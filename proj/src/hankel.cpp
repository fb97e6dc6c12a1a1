#include "tpkit/hankel.hpp"

#include <set>
#include <string>

#include "tpkit/condensation.hpp"
#include "tpkit/rng.hpp"

namespace tpkit {

ExactMatrix hankelFromSequence(const HankelSpec& spec) {
    const size_t len = spec.sequence.size();
    if (len == 0 || len % 2 == 0) {
        throw ShapeError("Hankel sequence must have odd length 2n+1");
    }
    const int order = static_cast<int>((len - 1) / 2) + 1;
    ExactMatrix a(order, order);
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= order; ++j)
            a.at(i, j) = spec.sequence[static_cast<size_t>(i + j - 2)];
    return a;
}

bool isHankel(const ExactMatrix& a) {
    if (!a.isSquare()) return false;
    for (int i = 1; i < a.rows(); ++i)
        for (int j = 2; j <= a.cols(); ++j)
            if (a.at(i, j) != a.at(i + 1, j - 1)) return false;
    return true;
}

ExactMatrix shiftedHankel(const ExactMatrix& a) {
    if (!isHankel(a)) throw DomainError("input is not a Hankel matrix");
    const int n = a.rows() - 1;
    if (n < 1) throw ShapeError("shifted Hankel needs order >= 2");
    return submatrix(a, IndexSet::range(1, n, n + 1), IndexSet::range(2, n + 1, n + 1));
}

PositivityVerdict isPositiveDefinite(const ExactMatrix& a) {
    if (!a.isSymmetric()) throw DomainError("positive definiteness requires symmetry");
    for (int r = 1; r <= a.rows(); ++r) {
        IndexSet lead = IndexSet::range(1, r, a.rows());
        Rational v = minorOf(a, lead, lead);
        if (v <= 0) {
            return {PositivityProperty::TPk, r, false, WitnessMinor{lead, lead, v}};
        }
    }
    return {PositivityProperty::TPk, a.rows(), true, std::nullopt};
}

PositivityVerdict isTPHankel(const ExactMatrix& a) {
    if (!isHankel(a)) throw DomainError("input is not a Hankel matrix");
    if (a.rows() == 1) {
        Rational v = a.at(1, 1);
        if (v > 0) return {PositivityProperty::TPk, 1, true, std::nullopt};
        return {PositivityProperty::TPk, 1, false,
                WitnessMinor{IndexSet::full(1), IndexSet::full(1), v}};
    }
    PositivityVerdict full = isPositiveDefinite(a);
    if (!full.holds) return full;
    return isPositiveDefinite(shiftedHankel(a));
}

HankelSpec momentSequence(int nodes, std::uint64_t seed, std::uint64_t magnitude) {
    if (nodes < 1) throw ShapeError("need at least one node");
    SplitMix64 rng(seed);
    std::vector<Rational> weights;
    std::set<Rational> seen;
    std::vector<Rational> xs;
    for (int t = 0; t < nodes; ++t) {
        weights.push_back(rng.nextPositiveRational(magnitude));
        Rational x = rng.nextPositiveRational(magnitude);
        while (seen.count(x)) x = rng.nextPositiveRational(magnitude);
        seen.insert(x);
        xs.push_back(x);
    }
    // a_k for k = 0 .. 2(nodes-1): the Hankel matrix has order = nodes.
    HankelSpec spec;
    std::vector<Rational> powers(xs.size(), Rational(1));
    for (int k = 0; k <= 2 * (nodes - 1); ++k) {
        Rational moment(0);
        for (size_t t = 0; t < xs.size(); ++t) {
            moment += weights[t] * powers[t];
            powers[t] *= xs[t];
        }
        spec.sequence.push_back(moment);
    }
    return spec;
}

HankelTheoremReport verifyTheoremC(const HankelSpec& spec) {
    ExactMatrix a = hankelFromSequence(spec);
    if (!isTPHankel(a).holds) {
        throw HypothesisError("input Hankel matrix is not TP");
    }
    HankelTheoremReport report;
    const int order = a.rows();
    if (order < 2) return report; // vacuous: no k in range

    ExactMatrix shifted = shiftedHankel(a);
    for (int k = 1; k <= order - 1; ++k) {
        ExactMatrix dk = condense(a, k);
        if (!isHankel(dk)) {
            report.pass = false;
            report.failures.push_back("D_" + std::to_string(k) + " is not Hankel");
            continue;
        }
        if (dk.rows() == 1) {
            if (dk.at(1, 1) <= 0) {
                report.pass = false;
                report.failures.push_back("final scalar not positive");
            }
            continue;
        }
        if (!isTPHankel(dk).holds) {
            report.pass = false;
            report.failures.push_back("D_" + std::to_string(k) + " is not TP");
        }
        // D_k(A)' = D_k(A'), proof identity for k <= n-1 of the shifted matrix
        if (k <= shifted.rows() - 1) {
            if (!(shiftedHankel(dk) == condense(shifted, k))) {
                report.pass = false;
                report.failures.push_back("D_" + std::to_string(k) +
                                          "(A)' != D_" + std::to_string(k) + "(A')");
            }
        }
    }
    return report;
}

} // namespace tpkit
