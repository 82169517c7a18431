#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cspi {

/// Exact rational scalar used by the symbol calculus. All ordering and
/// symbol transforms stay in this type; doubles appear only when a
/// polynomial is materialized as a matrix or evaluated numerically.
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

/// "3", "-5/7", "1/2"; integer denominators of 1 print without the slash.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q" and plain decimals ("0.25" -> 1/4).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

}  // namespace cspi
