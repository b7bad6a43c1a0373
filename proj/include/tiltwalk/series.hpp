#pragma once

// Exact polynomial, Laurent and truncated power-series arithmetic over Q,
// Chebyshev polynomials of the second kind, and the generating functions
// built from them.

#include "tiltwalk/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tiltwalk::series {

// ---------------------------------------------------------------------------
// Polynomials

/// Dense polynomial with rational coefficients; no trailing zeros are stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(Rational coeff, std::size_t degree) {
        std::vector<Rational> c(degree + 1);
        c[degree] = std::move(coeff);
        return Polynomial(std::move(c));
    }
    static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    double eval(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
        return acc;
    }

    Polynomial derivative() const {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        std::vector<Rational> c(p.c_);
        for (auto& v : c) v *= s;
        return Polynomial(std::move(c));
    }
    bool operator==(const Polynomial&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) return {Polynomial{}, a};
    std::vector<Rational> q(rem.size() - db);
    const Rational lead = b.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
        const Rational f = rem[k + db] / lead;
        q[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.coeff(j);
    }
    rem.resize(db);
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

/// Number of distinct real roots in the half-open interval (lo, hi], by Sturm's theorem.
inline std::size_t count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.degree() <= 0) return 0;
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        auto r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(Rational(-1) * r);
    }
    auto sign_changes = [&](const Rational& x) {
        std::size_t changes = 0;
        int last = 0;
        for (const auto& q : chain) {
            const Rational v = q(x);
            const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    };
    const auto a = sign_changes(lo);
    const auto b = sign_changes(hi);
    return a >= b ? a - b : 0;
}

struct RootInterval {
    Rational lo;
    Rational hi;  // the root lies in (lo, hi]
    double midpoint() const { return to_double((lo + hi) / 2); }
};

/// Isolates every real root of p into intervals of width <= tol (Cauchy bound + Sturm bisection).
inline std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& tol) {
    if (p.degree() <= 0) return {};
    Rational bound = 0;
    for (long i = 0; i < p.degree(); ++i) {
        Rational v = p.coeff(static_cast<std::size_t>(i)) / p.leading();
        if (v < 0) v = -v;
        bound = std::max(bound, v);
    }
    bound += 1;
    std::vector<RootInterval> done;
    std::vector<RootInterval> work{{-bound, bound}};
    while (!work.empty()) {
        auto iv = work.back();
        work.pop_back();
        const auto k = count_real_roots(p, iv.lo, iv.hi);
        if (k == 0) continue;
        if (k == 1 && iv.hi - iv.lo <= tol) {
            done.push_back(iv);
            continue;
        }
        const Rational mid = (iv.lo + iv.hi) / 2;
        work.push_back({iv.lo, mid});
        work.push_back({mid, iv.hi});
    }
    std::sort(done.begin(), done.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    return done;
}

// ---------------------------------------------------------------------------
// Chebyshev polynomials of the second kind

class ChebPoly {
public:
    explicit ChebPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {}

    std::size_t degree() const { return c_.size() - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const { return c_.back(); }

    BigInt operator()(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    Polynomial to_polynomial() const {
        std::vector<Rational> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.emplace_back(v);
        return Polynomial(std::move(c));
    }

    bool operator==(const ChebPoly&) const = default;

private:
    std::vector<BigInt> c_;
};

/// U_0 = 1, U_1 = 2x, U_j = 2x U_{j-1} - U_{j-2}.
inline ChebPoly cheb_u(std::size_t j) {
    std::vector<BigInt> prev{1};
    if (j == 0) return ChebPoly(prev);
    std::vector<BigInt> cur{0, 2};
    for (std::size_t i = 2; i <= j; ++i) {
        std::vector<BigInt> next(i + 1);
        for (std::size_t d = 0; d < cur.size(); ++d) next[d + 1] += 2 * cur[d];
        for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= prev[d];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return ChebPoly(std::move(cur));
}

// ---------------------------------------------------------------------------
// Laurent polynomials

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(Rational coeff, int exponent) {
        LaurentPoly p;
        p.add_term(exponent, std::move(coeff));
        return p;
    }

    void add_term(int exponent, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponent, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    bool is_zero() const { return terms_.empty(); }
    int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    const std::map<int, Rational>& terms() const { return terms_; }

    /// Multiply by x^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    /// Ordinary polynomial; throws if a negative exponent survives.
    Polynomial to_polynomial() const {
        if (!terms_.empty() && min_exponent() < 0)
            throw std::domain_error("Laurent polynomial has negative exponents");
        std::vector<Rational> c(terms_.empty() ? 0 : static_cast<std::size_t>(max_exponent()) + 1);
        for (const auto& [e, v] : terms_) c[static_cast<std::size_t>(e)] = v;
        return Polynomial(std::move(c));
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<int, Rational> terms_;
};

/// U(1/(2x)) as a Laurent polynomial in x.
inline LaurentPoly substitute_half_reciprocal(const ChebPoly& u) {
    LaurentPoly r;
    const auto& c = u.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        r.add_term(-static_cast<int>(i), Rational(c[i], pow_int(BigInt(2), static_cast<unsigned>(i))));
    }
    return r;
}

/// R_{ell-j} from R_{ell-2} = 1, R_{ell-3} = x^{-1}, R_{ell-j} = x^{-1} R_{ell-j+1} - R_{ell-j+2}.
inline LaurentPoly r_poly(unsigned ell, unsigned j) {
    if (ell < 2) throw std::invalid_argument("ell must be >= 2");
    if (j < 2 || j > ell)
        throw std::out_of_range("r_poly offset j=" + std::to_string(j) + " outside [2, " +
                                std::to_string(ell) + "]");
    LaurentPoly older = LaurentPoly::monomial(1, 0);
    if (j == 2) return older;
    LaurentPoly newer = LaurentPoly::monomial(1, -1);
    for (unsigned i = 4; i <= j; ++i) {
        LaurentPoly next = newer.shifted(-1) - older;
        older = std::move(newer);
        newer = std::move(next);
    }
    return newer;
}

// ---------------------------------------------------------------------------
// Truncated power series

class RationalSeries {
public:
    /// Zero series truncated at x^order.
    explicit RationalSeries(std::size_t order) : c_(order + 1) {}
    RationalSeries(std::vector<Rational> coeffs, std::size_t order) : c_(std::move(coeffs)) {
        c_.resize(order + 1);
    }

    static RationalSeries from_polynomial(const Polynomial& p, std::size_t order) {
        RationalSeries s(order);
        for (std::size_t i = 0; i <= order; ++i) s.c_[i] = p.coeff(i);
        return s;
    }
    static RationalSeries from_integers(std::span<const BigInt> values, std::size_t order) {
        RationalSeries s(order);
        for (std::size_t i = 0; i <= order && i < values.size(); ++i) s.c_[i] = Rational(values[i]);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return c_.at(i); }
    Rational& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Truncates both operands to the smaller order.
    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
        RationalSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
        RationalSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
        RationalSeries r(std::min(a.order(), b.order()));
        const auto n = r.order();
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend RationalSeries operator*(const Rational& s, RationalSeries a) {
        for (auto& v : a.c_) v *= s;
        return a;
    }
    bool operator==(const RationalSeries&) const = default;

private:
    std::vector<Rational> c_;
};

/// q with q * den = num up to the common truncation; den must have a nonzero constant term.
inline RationalSeries divide(const RationalSeries& num, const RationalSeries& den) {
    if (den[0] == 0) throw std::domain_error("series division needs a nonzero constant term");
    const auto n = std::min(num.order(), den.order());
    RationalSeries q(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc = num[k];
        for (std::size_t i = 1; i <= k; ++i) {
            if (den[i] != 0) acc -= den[i] * q[k - i];
        }
        q[k] = acc / den[0];
    }
    return q;
}

/// t with t^2 = s up to truncation and t_0 = 1; requires s_0 = 1.
inline RationalSeries sqrt_series(const RationalSeries& s) {
    if (s[0] != 1) throw std::domain_error("sqrt_series needs constant term 1");
    RationalSeries t(s.order());
    t[0] = 1;
    for (std::size_t k = 1; k <= s.order(); ++k) {
        Rational acc = s[k];
        for (std::size_t i = 1; i < k; ++i) acc -= t[i] * t[k - i];
        t[k] = acc / 2;
    }
    return t;
}

/// a(x, 0) = (1 - sqrt(1 - 4x^2)) / (2x^2), truncated at x^order.
inline RationalSeries gf_a_half_line(std::size_t order) {
    RationalSeries inner(order + 2);
    inner[0] = 1;
    if (order + 2 >= 2) inner[2] = -4;
    const auto root = sqrt_series(inner);
    RationalSeries out(order);
    for (std::size_t k = 0; k <= order; ++k) out[k] = -root[k + 2] / 2;
    return out;
}

/// x^{ell-1} U_{ell-1}(1/(2x)): the cleared denominator of the b_n generating function.
inline Polynomial cleared_denominator(unsigned ell) {
    if (ell < 2) throw std::invalid_argument("ell must be >= 2");
    return substitute_half_reciprocal(cheb_u(ell - 1)).shifted(static_cast<int>(ell) - 1).to_polynomial();
}

/// Generating function of b_n(ell):
///   [sum_{k<ell} U_k(1/2x)] / U_{ell-1}(1/2x) * c(x) + [sum_{k<ell-1} U_k(1/2x)] / (x U_{ell-1}(1/2x))
/// with c(x) = sum_n c_n^{(ell-1)} x^n. Every Laurent term is multiplied by x^{ell-1}
/// before the division, so only ordinary series arithmetic is needed.
inline RationalSeries gf_b(unsigned ell, std::size_t order, const RationalSeries& c_series) {
    if (ell < 3) throw std::invalid_argument("gf_b needs ell >= 3; ell = 2 uses the parity reduction");
    if (c_series.order() < order) throw std::invalid_argument("c_series is truncated below the requested order");
    LaurentPoly full, partial;
    for (unsigned k = 0; k < ell; ++k) {
        const auto term = substitute_half_reciprocal(cheb_u(k));
        full = full + term;
        if (k + 1 < ell) partial = partial + term;
    }
    const int shift = static_cast<int>(ell) - 1;
    const auto num_c = full.shifted(shift).to_polynomial();
    const auto num_free = partial.shifted(shift - 1).to_polynomial();
    const auto den = cleared_denominator(ell);

    const auto numerator = RationalSeries::from_polynomial(num_c, order) * c_series +
                           RationalSeries::from_polynomial(num_free, order);
    return divide(numerator, RationalSeries::from_polynomial(den, order));
}

// ---------------------------------------------------------------------------
// Mixed-case factor (1 - w^{ell-1})(1 + w^p) / ((1 - w^{p-1})(1 + w^ell))

namespace detail {

inline Polynomial one_plus_minus_power(int sign, std::size_t exponent) {
    return Polynomial::constant(1) + Polynomial::monomial(Rational(sign), exponent);
}

inline void require_mixed_args(unsigned p, unsigned ell) {
    if (p < 2) throw std::invalid_argument("mixed factor needs p >= 2");
    if (ell < 2) throw std::invalid_argument("mixed factor needs ell >= 2");
}

inline Polynomial mixed_numerator(unsigned p, unsigned ell) {
    return one_plus_minus_power(-1, ell - 1) * one_plus_minus_power(1, p);
}
inline Polynomial mixed_denominator(unsigned p, unsigned ell) {
    return one_plus_minus_power(-1, p - 1) * one_plus_minus_power(1, ell);
}

}  // namespace detail

inline RationalSeries mixed_factor_series(unsigned p, unsigned ell, std::size_t order) {
    detail::require_mixed_args(p, ell);
    return divide(RationalSeries::from_polynomial(detail::mixed_numerator(p, ell), order),
                  RationalSeries::from_polynomial(detail::mixed_denominator(p, ell), order));
}

/// Value at w = 1 after cancelling the common factor (1 - w).
inline Rational mixed_factor_limit(unsigned p, unsigned ell) {
    detail::require_mixed_args(p, ell);
    const Polynomial one_minus_w({Rational(1), Rational(-1)});
    auto [num, num_rem] = divmod(detail::mixed_numerator(p, ell), one_minus_w);
    auto [den, den_rem] = divmod(detail::mixed_denominator(p, ell), one_minus_w);
    if (!num_rem.is_zero() || !den_rem.is_zero())
        throw std::logic_error("(1 - w) does not divide the mixed factor");
    return num(Rational(1)) / den(Rational(1));
}

}  // namespace tiltwalk::series
