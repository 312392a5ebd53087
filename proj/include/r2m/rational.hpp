#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace r2m {

// Arbitrary-precision rational kept in canonical form (lowest terms,
// positive denominator, zero is 0/1). GMP maintains the canonical form
// across arithmetic; construction from text goes through parse_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p" or "p/q" with optional leading sign. Throws
// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace r2m
