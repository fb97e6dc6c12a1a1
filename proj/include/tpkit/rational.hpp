#ifndef TPKIT_RATIONAL_HPP
#define TPKIT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "tpkit/errors.hpp"

namespace tpkit {

// Arbitrary-precision rational. GMP keeps values canonical (positive
// denominator, gcd(|num|, den) = 1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" with optional leading '-'. Rejects q = 0 and any
// malformed token.
Rational parseRational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string toString(const Rational& value);

} // namespace tpkit

#endif
