#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kconn {

using Rational = mpq_class;

/// num/den in lowest terms. Prefer this to the two-argument mpq_class
/// constructor, which does not reduce (and GMP arithmetic assumes reduced).
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Accepts "3", "-7/4", "2.125". Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "3/1" or "-7/4".
std::string to_fraction_string(const Rational& value);

/// Canonical short form used in instance files: "3" or "7/4".
std::string to_compact_string(const Rational& value);

/// Fixed-point decimal with `digits` fractional digits, for human readers only.
std::string to_decimal_string(const Rational& value, int digits = 6);

double to_double(const Rational& value);

mpz_class floor_of(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace kconn
