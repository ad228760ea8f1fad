#pragma once

#include <gmpxx.h>

#include <string>

namespace penner {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class Rounding { down, up, nearest };

/// Decimal rendering of a rational with a fixed number of fractional digits.
std::string to_decimal(const Rational& q, int digits, Rounding mode);

/// Rounds q to a multiple of 10^-digits in the given direction.
Rational round_decimal(const Rational& q, int digits, Rounding mode);

/// Exact value of a decimal string such as "-1.25" or "3"; throws ParseError.
Rational parse_decimal(const std::string& text);

/// Natural log of a positive big integer, accurate to double precision.
double log_bigint(const BigInt& x);

/// Double nearest to q, then nudged one ulp in the requested direction so the
/// result bounds q (for Rounding::down / up).
double to_double(const Rational& q, Rounding mode);

/// Shortest round-trip decimal for a double.
std::string format_double(double x);
double parse_double(const std::string& text);

}  // namespace penner
