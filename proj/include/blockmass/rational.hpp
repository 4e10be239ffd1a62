#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace blockmass {

// Exact arithmetic substrate. Integers and rationals are GMP-backed;
// rationals are kept reduced with a positive denominator (mpq canonical
// form), so equality is plain value comparison.
using Int = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms. Throws std::invalid_argument on den == 0.
Rational make_rational(Int num, Int den);

Int int_pow(const Int& base, unsigned long exp);

// base^exp for signed exp; negative exponents require base != 0.
Rational rational_pow(const Rational& base, long exp);

// Serialized form is always "num/den" in base 10, even for integers ("7/1").
std::string rational_str(const Rational& q);

// Accepts "num" or "num/den" with optional leading '-'.
Rational parse_rational(std::string_view text);

// floor(q * 2^fbits) and ceil(q * 2^fbits): the directed roundings used by
// the enclosure accumulators.
Int floor_scaled(const Rational& q, unsigned fbits);
Int ceil_scaled(const Rational& q, unsigned fbits);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace blockmass
