#include "tpkit/positivity.hpp"

#include <mpfr.h>

#include "tpkit/compound.hpp"

namespace tpkit {

PositivityVerdict isTPk(const ExactMatrix& a, int k) {
    if (k < 1 || k > std::min(a.rows(), a.cols())) {
        throw InvalidOrder("TP order out of range");
    }
    for (int r = 1; r <= k; ++r) {
        for (int i = 1; i + r - 1 <= a.rows(); ++i) {
            for (int j = 1; j + r - 1 <= a.cols(); ++j) {
                IndexSet rows = IndexSet::range(i, i + r - 1, a.rows());
                IndexSet cols = IndexSet::range(j, j + r - 1, a.cols());
                Rational v = minorOf(a, rows, cols);
                if (v <= 0) {
                    return {PositivityProperty::TPk, k, false,
                            WitnessMinor{rows, cols, v}};
                }
            }
        }
    }
    return {PositivityProperty::TPk, k, true, std::nullopt};
}

PositivityVerdict isTNk(const ExactMatrix& a, int k) {
    if (k < 1 || k > std::min(a.rows(), a.cols())) {
        throw InvalidOrder("TN order out of range");
    }
    if (a.rows() > 8 || a.cols() > 8) {
        throw InvalidOrder("TN check enumerates all minors; guarded at n <= 8");
    }
    for (int r = 1; r <= k; ++r) {
        for (const IndexSet& rows : lexSubsets(a.rows(), r)) {
            for (const IndexSet& cols : lexSubsets(a.cols(), r)) {
                Rational v = minorOf(a, rows, cols);
                if (v < 0) {
                    return {PositivityProperty::TNk, k, false,
                            WitnessMinor{rows, cols, v}};
                }
            }
        }
    }
    return {PositivityProperty::TNk, k, true, std::nullopt};
}

PositivityVerdict isTP2c(const ExactMatrix& a, const Rational& c) {
    if (c <= 0) throw DomainError("TP_2(c) requires c > 0");
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j)
            if (a.at(i, j) <= 0) throw DomainError("TP_2(c) requires positive entries");

    // The adjacent-block inequality only makes sense for i, j <= n-1.
    for (int i = 1; i < a.rows(); ++i) {
        for (int j = 1; j < a.cols(); ++j) {
            Rational lhs = a.at(i, j) * a.at(i + 1, j + 1);
            Rational rhs = c * a.at(i + 1, j) * a.at(i, j + 1);
            if (lhs < rhs) {
                IndexSet rows = IndexSet::range(i, i + 1, a.rows());
                IndexSet cols = IndexSet::range(j, j + 1, a.cols());
                return {PositivityProperty::TP2c, 2, false,
                        WitnessMinor{rows, cols, lhs - rhs}};
            }
        }
    }
    return {PositivityProperty::TP2c, 2, true, std::nullopt};
}

namespace {

// Exact conversion of an MPFR binary float to a rational.
Rational mpfrToRational(mpfr_t x) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Rational out(q);
    mpq_clear(q);
    return out;
}

} // namespace

Tp2cThreshold tp2cThreshold(int n, int precisionBits) {
    if (n < 1) throw InvalidOrder("threshold needs n >= 1");
    if (precisionBits < 16) precisionBits = 16;

    // Directed rounding throughout: x in [xd, xu] with xd <= pi/(n+1) <= xu,
    // cos decreasing on (0, pi/2], so cos(xu) <= cos(pi/(n+1)) <= cos(xd).
    mpfr_t pi, xd, xu, cd, cu, lo, hi;
    mpfr_inits2(precisionBits, pi, xd, xu, cd, cu, lo, hi, (mpfr_ptr) nullptr);

    mpfr_const_pi(pi, MPFR_RNDD);
    mpfr_div_ui(xd, pi, static_cast<unsigned long>(n) + 1, MPFR_RNDD);
    mpfr_const_pi(pi, MPFR_RNDU);
    mpfr_div_ui(xu, pi, static_cast<unsigned long>(n) + 1, MPFR_RNDU);

    mpfr_cos(cd, xu, MPFR_RNDD);
    mpfr_cos(cu, xd, MPFR_RNDU);
    // cos can dip below 0 in the rounded endpoint at n = 1; clamp so the
    // square stays monotone.
    if (mpfr_sgn(cd) < 0) mpfr_set_ui(cd, 0, MPFR_RNDD);

    mpfr_sqr(lo, cd, MPFR_RNDD);
    mpfr_mul_ui(lo, lo, 4, MPFR_RNDD);
    mpfr_sqr(hi, cu, MPFR_RNDU);
    mpfr_mul_ui(hi, hi, 4, MPFR_RNDU);

    Tp2cThreshold out{n, mpfrToRational(lo), mpfrToRational(hi)};
    mpfr_clears(pi, xd, xu, cd, cu, lo, hi, (mpfr_ptr) nullptr);
    return out;
}

ExactMatrix singularPerturbation(const ExactMatrix& a) {
    if (a.rows() != 6 || a.cols() != 6) {
        throw ShapeError("singular perturbation is stated for 6x6 matrices");
    }
    if (!isTPk(a, 6).holds) throw HypothesisError("input matrix is not TP");

    Rational detA = determinant(a);
    Rational detMinor = minorOf(a, IndexSet::range(2, 6, 6), IndexSet::range(2, 6, 6));
    Rational t = detA / detMinor;
    ExactMatrix b = a;
    b.at(1, 1) -= t;
    return b;
}

std::string describe(const PositivityVerdict& v) {
    std::string name;
    switch (v.property) {
        case PositivityProperty::TPk: name = "TP_" + std::to_string(v.order); break;
        case PositivityProperty::TNk: name = "TN_" + std::to_string(v.order); break;
        case PositivityProperty::TP2c: name = "TP_2(c)"; break;
    }
    if (v.holds) return name + ": holds";
    std::string out = name + ": fails";
    if (v.witness) {
        out += " (rows {";
        for (size_t i = 0; i < v.witness->rowSet.indices().size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v.witness->rowSet.indices()[i]);
        }
        out += "}, cols {";
        for (size_t i = 0; i < v.witness->colSet.indices().size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v.witness->colSet.indices()[i]);
        }
        out += "}, value " + toString(v.witness->value) + ")";
    }
    return out;
}

} // namespace tpkit
