#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "deckard/errors.hpp"

namespace deckard {

// Exact arithmetic used everywhere: arbitrary-precision integers and
// rationals. Floating point would break multiset comparisons and exact
// rank computations.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" for integers, "p/q" otherwise; q always positive.
inline std::string rational_to_string(const Rational& r) {
    Integer num = numerator(r);
    Integer den = denominator(r);
    std::string s = num.str();
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

// Accepts "p" or "p/q" with optional leading minus signs.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    try {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            if (!is_int(text)) throw ParseError("not a rational: " + std::string(text));
            return Rational(Integer(std::string(text)));
        }
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw ParseError("not a rational: " + std::string(text));
        Integer d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator: " + std::string(text));
        return Rational(Integer(std::string(num)), d);
    } catch (const std::runtime_error& e) {
        throw ParseError(std::string("bad rational '") + std::string(text) + "': " + e.what());
    }
}

}  // namespace deckard
