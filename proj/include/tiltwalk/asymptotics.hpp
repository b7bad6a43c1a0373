#pragma once

// Closed-form approximants for a_n, b_n(ell), c_n^{(r)} and w_n, the
// normalized error envelope against exact sequences, and a quadrature oracle
// for a_n.
//
// Nothing here compares huge numbers by subtraction. Exact values are divided
// by beta^n (exactly for beta = 2) before conversion to double, and the
// approximants are evaluated as prefactor(n) * n^tau without the beta^n factor.

#include "tiltwalk/numeric.hpp"
#include "tiltwalk/walks.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace tiltwalk::asymptotics {

/// mantissa * 2^exponent
struct ScaledReal {
    double mantissa;
    std::int64_t exponent;

    double log2() const { return std::log2(mantissa) + static_cast<double>(exponent); }
    bool operator<(const ScaledReal& o) const { return log2() < o.log2(); }
};

enum class Parity { even, odd };

inline Parity parity_of(std::size_t n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

inline const double kSqrtTwoOverPi = std::sqrt(2.0 / std::numbers::pi);

struct Approximant {
    Rational tau;
    double beta;
    std::function<double(std::size_t)> prefactor;
    std::string label;

    /// approx_n / beta^n
    double normalized(std::size_t n) const {
        return prefactor(n) * std::pow(static_cast<double>(n), to_double(tau));
    }
};

/// sqrt(2/pi) n^{-1/2} 2^n
inline ScaledReal a_approx(std::size_t n) {
    if (n == 0) throw std::domain_error("a_approx is undefined at n = 0");
    return {kSqrtTwoOverPi / std::sqrt(static_cast<double>(n)), static_cast<std::int64_t>(n)};
}

inline double b_prefactor(unsigned ell, std::size_t n) {
    walks::require_modulus(ell);
    const double l = ell;
    if (ell % 2 == 1) return (l + 1) / (2 * l);
    const double sign = n % 2 == 0 ? -1.0 : 1.0;  // (-1)^{n+1}
    return (l + 1 + sign) / (2 * l);
}

inline ScaledReal b_approx(unsigned ell, std::size_t n) {
    auto a = a_approx(n);
    a.mantissa *= b_prefactor(ell, n);
    return a;
}

inline double c_prefactor(unsigned ell, unsigned r, std::size_t n) {
    walks::require_modulus(ell);
    if (r >= ell) throw std::out_of_range("residue out of range");
    if (ell % 2 == 1) return 1.0 / ell;
    if ((r % 2) != (n % 2)) return 0.0;
    return 2.0 / ell;
}

inline ScaledReal c_approx(unsigned ell, unsigned r, std::size_t n) {
    auto a = a_approx(n);
    a.mantissa *= c_prefactor(ell, r, n);
    return a;
}

/// Wall summands are the residue class r = ell - 1.
inline double w_prefactor(unsigned ell, std::size_t n) { return c_prefactor(ell, ell - 1, n); }

inline ScaledReal w_approx(unsigned ell, std::size_t n) { return c_approx(ell, ell - 1, n); }

/// lim w_n / b_n along the given parity class of n.
inline Rational w_ratio_limit(unsigned ell, Parity parity) {
    walks::require_modulus(ell);
    if (ell % 2 == 1) return Rational(2, ell + 1);
    if (parity == Parity::even) return 0;
    return Rational(4, ell + 2);
}

inline Approximant a_approximant() {
    return {Rational(-1, 2), 2.0, [](std::size_t) { return kSqrtTwoOverPi; }, "a_n"};
}

inline Approximant b_approximant(unsigned ell) {
    walks::require_modulus(ell);
    return {Rational(-1, 2), 2.0,
            [ell](std::size_t n) { return b_prefactor(ell, n) * kSqrtTwoOverPi; },
            "b_n ell=" + std::to_string(ell)};
}

inline Approximant c_approximant(unsigned ell, unsigned r) {
    c_prefactor(ell, r, 0);
    return {Rational(-1, 2), 2.0,
            [ell, r](std::size_t n) { return c_prefactor(ell, r, n) * kSqrtTwoOverPi; },
            "c_n^(" + std::to_string(r) + ") ell=" + std::to_string(ell)};
}

inline Approximant w_approximant(unsigned ell) {
    auto c = c_approximant(ell, ell - 1);
    c.label = "w_n ell=" + std::to_string(ell);
    return c;
}

/// exact_n / (beta^n n^tau) as a double.
inline double normalized_exact(const BigInt& exact, std::size_t n, const Approximant& approx) {
    return div_pow(exact, approx.beta, n) / std::pow(static_cast<double>(n), to_double(approx.tau));
}

// ---------------------------------------------------------------------------
// Error envelope

struct ErrorReport {
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;
    std::vector<double> errors;  // e_n for n = n_lo..n_hi
    double constant = 0;         // max n * e_n over the window
    double lower_half_max = 0;
    double upper_half_max = 0;
    bool pass = false;

    double error_at(std::size_t n) const { return errors.at(n - n_lo); }
};

/// Trend rule: max of n*e_n over the upper half of the window may exceed the
/// lower-half max by at most this factor.
inline constexpr double kEnvelopeTrendFactor = 1.2;

/// e_n = |exact_n - approx_n| / (n^{-1/2} beta^n) over [n_lo, n_hi]; passes when
/// n * e_n shows no upward trend across the window.
inline ErrorReport error_envelope(const walks::GrowthSequence& exact, const Approximant& approx,
                                  std::size_t n_lo, std::size_t n_hi) {
    if (n_lo == 0) throw std::invalid_argument("error window must start at n >= 1");
    if (n_hi < n_lo) throw std::invalid_argument("empty error window");
    if (n_hi >= exact.size()) throw std::out_of_range("error window exceeds the exact sequence");
    ErrorReport rep;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    rep.errors.reserve(n_hi - n_lo + 1);
    const std::size_t split = n_lo + (n_hi - n_lo + 1) / 2;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        // |exact - approx| / (n^{-1/2} beta^n), written via the n^tau-normalised values.
        const double e = std::abs(normalized_exact(exact[n], n, approx) - approx.prefactor(n)) *
                         std::pow(static_cast<double>(n), to_double(approx.tau) + 0.5);
        rep.errors.push_back(e);
        const double scaled = static_cast<double>(n) * e;
        rep.constant = std::max(rep.constant, scaled);
        if (n < split) rep.lower_half_max = std::max(rep.lower_half_max, scaled);
        else rep.upper_half_max = std::max(rep.upper_half_max, scaled);
    }
    rep.pass = rep.upper_half_max <= kEnvelopeTrendFactor * rep.lower_half_max;
    return rep;
}

// ---------------------------------------------------------------------------
// Quadrature oracle

class quadrature_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kSpectralMaxN = 60;
inline constexpr unsigned kDefaultDigits = 30;
inline constexpr unsigned kMaxDigits = 45;

/// (2/pi) * integral_0^pi (2 cos t)^n (1 + cos t)/2 dt, which equals a_n.
/// Adaptive 61-point Gauss-Kronrod in 50-digit arithmetic, split at pi/2.
inline HighFloat spectral_an(std::size_t n, unsigned digits = kDefaultDigits) {
    if (n > kSpectralMaxN)
        throw std::domain_error("spectral_an is limited to n <= " + std::to_string(kSpectralMaxN));
    digits = std::clamp(digits, 1u, kMaxDigits);
    using boost::math::quadrature::gauss_kronrod;
    const HighFloat pi = boost::math::constants::pi<HighFloat>();
    const HighFloat tol = boost::multiprecision::pow(HighFloat(10), -static_cast<int>(digits));
    const int exponent = static_cast<int>(n);
    auto integrand = [exponent](const HighFloat& t) {
        const HighFloat c = cos(t);
        return boost::multiprecision::pow(2 * c, exponent) * (1 + c) / 2;
    };
    HighFloat err_left = 0, err_right = 0;
    const HighFloat left = gauss_kronrod<HighFloat, 61>::integrate(integrand, HighFloat(0), pi / 2, 20, tol, &err_left);
    const HighFloat right = gauss_kronrod<HighFloat, 61>::integrate(integrand, pi / 2, pi, 20, tol, &err_right);
    const HighFloat total = left + right;
    const HighFloat err = err_left + err_right;
    if (!(err <= tol * abs(total)))
        throw quadrature_error("quadrature did not reach 1e-" + std::to_string(digits) +
                               " relative accuracy for n = " + std::to_string(n));
    return 2 * total / pi;
}

}  // namespace tiltwalk::asymptotics
