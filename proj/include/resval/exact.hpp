#pragma once

// Exact scalars. GMP's C++ classes carry the arithmetic; this header adds the
// handful of helpers the rest of the library needs on top of them.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace resval {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical (lowest terms, den > 0)

/// num/den in lowest terms. Throws std::invalid_argument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer ipow(const Integer& base, unsigned long exponent);
Integer ipow(long base, unsigned long exponent);

bool is_integral(const Rational& q);

/// Floor of q as an Integer.
Integer floor(const Rational& q);

/// "n" for integral values, "n/d" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Parses "n" or "n/d" (as produced by to_string).
Rational parse_rational(const std::string& text);

bool fits_int64(const Integer& n);
std::int64_t to_int64(const Integer& n);

}  // namespace resval
