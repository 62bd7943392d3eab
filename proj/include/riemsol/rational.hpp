#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace riemsol {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always canonical: reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "[+-]?digits(/digits)?". Throws RationalFormatError on anything
/// else, including a zero denominator. Result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical form: "n" when the denominator is 1, otherwise "n/d" with d > 0.
std::string to_string(const Rational& value);

inline Rational rational_abs(const Rational& value) {
    return value < 0 ? Rational(-value) : value;
}

} // namespace riemsol
