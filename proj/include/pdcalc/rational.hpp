#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "pdcalc/errors.hpp"

namespace pdcalc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "123", "-4/7". Denominator must be nonzero.
inline Rational parse_rational(std::string_view s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
        Int num{std::string(s.substr(0, slash))};
        Int den{std::string(s.substr(slash + 1))};
        if (den == 0) throw validation_error("rational with zero denominator: " + std::string(s));
        return Rational(num, den);
    } catch (const std::exception&) {
        throw validation_error("bad rational literal: " + std::string(s));
    }
}

} // namespace pdcalc
