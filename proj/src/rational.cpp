#include "riemsol/rational.hpp"

#include <cctype>

#include "riemsol/errors.hpp"

namespace riemsol {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }

    std::string_view num_part = rest;
    std::string_view den_part;
    bool has_den = false;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num_part = rest.substr(0, slash);
        den_part = rest.substr(slash + 1);
        has_den = true;
    }

    if (!all_digits(num_part) || (has_den && !all_digits(den_part))) {
        throw RationalFormatError("invalid rational literal: \"" + std::string(text) +
                                  "\" (expected [+-]?digits or [+-]?digits/digits)");
    }

    Integer num{std::string(num_part)};
    if (negative) num = -num;
    if (!has_den) return Rational(num);

    Integer den{std::string(den_part)};
    if (den == 0) {
        throw RationalFormatError("invalid rational literal: \"" + std::string(text) +
                                  "\" (zero denominator)");
    }
    return Rational(num) / Rational(den);
}

std::string to_string(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

} // namespace riemsol
