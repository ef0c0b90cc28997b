#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace apartition {

// Exact arbitrary-precision arithmetic, GMP-backed. Rationals are kept in
// lowest terms with a positive denominator; zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form. Throws std::invalid_argument when den == 0.
Rational make_rational(Integer num, Integer den);

// Accepts "p" and "p/q" with an optional leading '-' on p and q > 0.
// Decimals, whitespace and anything else are rejected (exactness contract).
// Throws std::invalid_argument with the offending text.
Rational parse_rational(std::string_view text);

// Always "num/den" ("0/1", "-3/2", "9/1"): the canonical wire form used in
// JSON output and sweep instance keys.
std::string fraction_string(const Rational& q);

// Human form: "9", "-3/2".
std::string pretty_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace apartition
