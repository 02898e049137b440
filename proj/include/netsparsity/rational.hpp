#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace netsparsity {

/// Exact rational number used at every API boundary.
using Rational = mpq_class;

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

/// Parses "7", "-3", "2.75", "1/3" or ".5" into an exact rational.
/// Throws std::invalid_argument on anything else (including exponents and
/// trailing garbage).
Rational parse_rational(std::string_view text);

/// True when the rational has denominator 1.
bool is_integer(const Rational& value);

Rational from_int128(Int128 value);

double to_double(const Rational& value);

/// Canonical "p/q" (or "p") text form.
std::string to_string(const Rational& value);

/// Fixed-point decimal text rounded half away from zero to `digits` places.
std::string to_fixed(const Rational& value, int digits);

}  // namespace netsparsity
