#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sncstab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always in lowest terms, denominator > 0;
/// no rounding occurs anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) {
    return r.sign();
}

inline BigInt rat_floor(const Rational& r) {
    BigInt n = numerator(r), d = denominator(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline BigInt rat_ceil(const Rational& r) {
    return -rat_floor(-r);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Serializes as "p/q", with "/q" omitted when q == 1.
inline std::string rat_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("nonpositive denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

}  // namespace sncstab
