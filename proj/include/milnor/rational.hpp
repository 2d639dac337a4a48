#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace milnor {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional sign, decimal digits). Throws InputError.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace milnor
