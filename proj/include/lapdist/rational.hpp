#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "lapdist/errors.hpp"

namespace lapdist {

using Integer = boost::multiprecision::cpp_int;

// Exact arithmetic carrier for eigenvalue thresholds. Interval endpoints
// like 1 must be exact: every member of the extremal families has 1 as an
// eigenvalue, so a floating threshold sits right on the boundary.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parses "1", "-3/2" and decimal strings like "0.5" as exact fractions.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> parse_error {
        return parse_error("not a rational number: '" + std::string(text) + "'");
    };

    size_t pos = 0;
    auto take_sign = [&]() -> int {
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
            return text[pos++] == '-' ? -1 : 1;
        return 1;
    };
    auto take_digits = [&](Integer& out) -> size_t {
        size_t count = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            out = out * 10 + (text[pos] - '0');
            ++pos;
            ++count;
        }
        return count;
    };

    const int sign = take_sign();
    Integer int_part = 0;
    const size_t int_digits = take_digits(int_part);

    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (int_digits == 0) throw fail();
        const int den_sign = take_sign();
        Integer den = 0;
        if (take_digits(den) == 0 || pos != text.size()) throw fail();
        if (den == 0) throw fail();
        return Rational(sign * den_sign * int_part, den);
    }

    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        Integer frac_part = 0;
        const size_t frac_digits = take_digits(frac_part);
        if (int_digits + frac_digits == 0 || pos != text.size()) throw fail();
        Integer scale = 1;
        for (size_t i = 0; i < frac_digits; ++i) scale *= 10;
        return Rational(sign * (int_part * scale + frac_part), scale);
    }

    if (int_digits == 0 || pos != text.size()) throw fail();
    return Rational(sign * int_part);
}

}  // namespace lapdist
