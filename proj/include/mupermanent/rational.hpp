#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace muperm {

using Integer = boost::multiprecision::cpp_int;

// Exact fraction, kept canonical by the backend: gcd(|num|, den) = 1, den > 0.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

// Accepts "p" or "p/q" with an optional sign on either part.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view part) -> Integer {
        std::size_t start = (!part.empty() && (part[0] == '+' || part[0] == '-')) ? 1 : 0;
        if (part.size() == start) throw parse_error("invalid number: '" + std::string(text) + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw parse_error("invalid number: '" + std::string(text) + "'");
        return Integer(std::string(part));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

// "p/q", or just "p" when the denominator is 1.
inline std::string format_rational(const Rational& value) {
    std::string s = numerator(value).str();
    if (denominator(value) != 1) {
        s += '/';
        s += denominator(value).str();
    }
    return s;
}

inline bool is_integral(const Rational& value) { return denominator(value) == 1; }

}  // namespace muperm
