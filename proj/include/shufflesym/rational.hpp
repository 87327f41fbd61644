#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shufflesym {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". The result is canonicalized.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator ("3", "-1").
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Rational pow(const Rational& base, long exponent);
Integer factorial(unsigned long n);
Integer binomial(long n, long k);

}  // namespace shufflesym
