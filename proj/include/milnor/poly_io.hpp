#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "milnor/polynomial.hpp"

namespace milnor {

/// Parses text such as "x0^3 + x1^3 + x2^3 - 3*x0*x1*x2" or "1/2*x0^2 - x1^2".
///
/// When n is omitted the ring is x0..x_m with m the largest index used. The
/// degree hint is only needed for forms that are identically zero ("0");
/// otherwise it must agree with the parsed terms. Throws InputError.
HomogeneousPolynomial parse_polynomial(std::string_view text, std::optional<int> n = std::nullopt,
                                       std::optional<int> degree = std::nullopt);

/// Canonical text form in graded lex order; parse_polynomial inverts it.
std::string format_polynomial(const HomogeneousPolynomial& f);

std::ostream& operator<<(std::ostream& out, const HomogeneousPolynomial& f);

}  // namespace milnor
