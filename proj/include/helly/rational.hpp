#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace helly {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator) as long as construction goes through the
// helpers below; raw two-argument mpq_class construction does not
// canonicalize and must not be used outside this header.
using Rational = mpq_class;

Rational rat(long num, long den = 1);

// Parses "p", "-p/q" or "p/q". Rejects empty strings, zero
// denominators and stray characters.
Rational parse_rational(const std::string& text);

// Canonical form: "p" for integers, "p/q" with q > 1 otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

// Value must be an integer that fits in int64; throws otherwise.
std::int64_t to_int64(const Rational& value);

Rational rat_abs(const Rational& value);

// Least integer >= value.
Rational rat_ceil(const Rational& value);

} // namespace helly
