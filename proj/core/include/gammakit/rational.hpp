#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gammakit {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den" with positive denominator; integers print without "/1".
std::string to_string(const Rational& q);

/// Inverse of to_string; accepts "7", "-2/3". Throws ParseError.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace gammakit
