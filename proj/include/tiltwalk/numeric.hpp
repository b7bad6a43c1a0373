#pragma once

// Exact and high-precision number types shared by every tiltwalk module.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tiltwalk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::cpp_bin_float_50;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt parse_bigint(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (!(c >= '0' && c <= '9') && !(i == 0 && c == '-' && text.size() > 1))
            throw std::invalid_argument("not a decimal integer: " + std::string(text));
    }
    return BigInt(std::string(text));
}

/// "numerator/denominator", always with an explicit denominator.
inline std::string to_fraction_string(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    const BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(parse_bigint(text.substr(0, slash)), den);
}

inline double to_double(const Rational& q) { return static_cast<double>(HighFloat(q)); }

/// v / 2^shift as a double, computed without forming 2^shift in floating point.
inline double div_pow2(const BigInt& v, std::size_t shift) {
    HighFloat x(v);
    x = boost::multiprecision::ldexp(x, -static_cast<int>(shift));
    return static_cast<double>(x);
}

/// v / base^n as a double; base^n is formed in 50-digit floating point.
inline double div_pow(const BigInt& v, double base, std::size_t n) {
    if (base == 2.0) return div_pow2(v, n);
    HighFloat x(v);
    x /= boost::multiprecision::pow(HighFloat(base), static_cast<int>(n));
    return static_cast<double>(x);
}

inline BigInt pow_int(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline BigInt binomial(std::size_t n, std::ptrdiff_t k) {
    if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
    auto kk = static_cast<std::size_t>(k);
    if (kk > n - kk) kk = n - kk;
    BigInt r = 1;
    for (std::size_t i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;
    }
    return r;
}

}  // namespace tiltwalk
