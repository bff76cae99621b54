#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace latcurve {

using Integer = mpz_class;
using Rational = mpq_class;
using i128 = __int128;

/// num/den in canonical form (gmpxx's two-argument constructor does not
/// reduce).
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "7", "-3/4", "0.01", "2.5e-3" into an exact rational. Decimal
/// input is taken literally (0.01 is 1/100, not the nearest double).
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Exact value of a finite double.
Rational rational_from_double(double value);

double to_double(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Checked narrowing; throws Error(Overflow) when the value does not fit.
std::int64_t to_int64(const Integer& z);
i128 to_i128(const Integer& z);
Integer from_i128(i128 v);

/// Largest k >= 0 with k^3 <= x (x >= 0).
Integer floor_cbrt(const Rational& x);
/// Smallest k >= 0 with k^3 >= x (x >= 0).
Integer ceil_cbrt(const Rational& x);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// Floor and ceiling division for signed 128-bit values, b != 0.
i128 floor_div(i128 a, i128 b);
i128 ceil_div(i128 a, i128 b);

}  // namespace latcurve
