#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ramified {

/// Exact rational number (GMP).
using Rational = mpq_class;

/// Parses "p", "p/q" or a finite decimal such as "-0.125". Throws InvalidInput.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &q);

double to_double(const Rational &q);

/// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational &q);

Rational rational_pow(const Rational &base, unsigned exponent);

} // namespace ramified
