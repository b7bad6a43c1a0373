#include "tiltwalk/series.hpp"
#include "tiltwalk/walks.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace tiltwalk;
using series::LaurentPoly;
using series::Polynomial;
using series::RationalSeries;

namespace {

Polynomial poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(std::move(v));
}

}  // namespace

TEST(PolynomialType, Arithmetic) {
    const auto p = poly({1, 2});      // 1 + 2x
    const auto q = poly({-1, 0, 1});  // x^2 - 1
    EXPECT_EQ(p * q, poly({-1, -2, 1, 2}));
    EXPECT_EQ(p + q, poly({0, 2, 1}));
    EXPECT_EQ((p - p).degree(), -1);
    EXPECT_EQ(q.derivative(), poly({0, 2}));
    EXPECT_EQ(q(Rational(3)), 8);
    EXPECT_DOUBLE_EQ(q.eval(0.5), -0.75);
}

TEST(PolynomialType, DivmodRoundTrip) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> a(8), b(4);
        for (auto& v : a) v = coef(rng);
        for (auto& v : b) v = coef(rng);
        b.back() = 1 + std::abs(coef(rng));
        const Polynomial pa(a), pb(b);
        const auto [q, r] = series::divmod(pa, pb);
        EXPECT_EQ(q * pb + r, pa);
        EXPECT_LT(r.degree(), pb.degree());
    }
    EXPECT_THROW(series::divmod(poly({1}), Polynomial{}), std::domain_error);
}

TEST(Sturm, CountsKnownRoots) {
    // (x-1)(x-2)(x+3)
    const auto p = poly({-1, 1}) * poly({-2, 1}) * poly({3, 1});
    EXPECT_EQ(series::count_real_roots(p, -10, 10), 3u);
    EXPECT_EQ(series::count_real_roots(p, 0, 10), 2u);
    EXPECT_EQ(series::count_real_roots(p, 1, 2), 1u);  // half-open (1, 2]
    EXPECT_EQ(series::count_real_roots(poly({1, 0, 1}), -10, 10), 0u);
    // Repeated roots count once.
    EXPECT_EQ(series::count_real_roots(poly({-1, 1}) * poly({-1, 1}), -5, 5), 1u);
}

TEST(Sturm, IsolatesChebyshevRoots) {
    // U_j has the j roots cos(k pi / (j + 1)), k = 1..j.
    for (std::size_t j = 1; j <= 9; ++j) {
        const auto roots = series::isolate_real_roots(series::cheb_u(j).to_polynomial(), Rational(1, 1 << 20));
        ASSERT_EQ(roots.size(), j);
        for (std::size_t k = 0; k < j; ++k) {
            const double want = std::cos(static_cast<double>(j - k) * std::numbers::pi / static_cast<double>(j + 1));
            EXPECT_NEAR(roots[k].midpoint(), want, 1e-6);
        }
    }
}

TEST(Chebyshev, TrigonometricIdentity) {
    // U_j(cos t) sin t = sin((j + 1) t)
    for (std::size_t j = 0; j <= 12; ++j) {
        const auto u = series::cheb_u(j).to_polynomial();
        for (double t : {0.3, 1.1, 2.5}) EXPECT_NEAR(u.eval(std::cos(t)) * std::sin(t), std::sin((j + 1) * t), 1e-9);
    }
    EXPECT_EQ(series::cheb_u(0).coeffs(), std::vector<BigInt>{1});
    EXPECT_EQ(series::cheb_u(3).coeffs(), (std::vector<BigInt>{0, -4, 0, 8}));
}

TEST(Laurent, HalfReciprocalAndRPoly) {
    // U_2(1/(2x)) = x^{-2} - 1
    const auto u2 = series::substitute_half_reciprocal(series::cheb_u(2));
    EXPECT_EQ(u2.coeff(-2), 1);
    EXPECT_EQ(u2.coeff(0), -1);
    EXPECT_EQ(u2.terms().size(), 2u);
    EXPECT_THROW(u2.to_polynomial(), std::domain_error);
    EXPECT_EQ(u2.shifted(2).to_polynomial(), poly({1, 0, -1}));
    // R_{ell-j} = U_{j-2}(1/(2x)), by the shared recursion.
    for (unsigned ell = 3; ell <= 9; ++ell)
        for (unsigned j = 2; j <= ell; ++j)
            EXPECT_EQ(series::r_poly(ell, j), series::substitute_half_reciprocal(series::cheb_u(j - 2)));
    EXPECT_THROW(series::r_poly(5, 1), std::out_of_range);
    EXPECT_THROW(series::r_poly(5, 6), std::out_of_range);
}

TEST(Laurent, Arithmetic) {
    auto a = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(1, 1);
    auto b = LaurentPoly::monomial(1, 1);
    EXPECT_EQ((a * b).coeff(0), 2);
    EXPECT_EQ((a * b).coeff(2), 1);
    EXPECT_TRUE((a - a).is_zero());
}

TEST(SeriesType, DivideAndSqrt) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        RationalSeries num(30), den(30);
        for (std::size_t i = 0; i <= 30; ++i) num[i] = coef(rng), den[i] = coef(rng);
        den[0] = 1 + std::abs(coef(rng));
        EXPECT_EQ(series::divide(num, den) * den, num);
        RationalSeries s(30);
        s[0] = 1;
        for (std::size_t i = 1; i <= 30; ++i) s[i] = coef(rng);
        const auto t = series::sqrt_series(s);
        EXPECT_EQ(t * t, s);
    }
    RationalSeries zero(3);
    EXPECT_THROW(series::divide(zero, zero), std::domain_error);
    EXPECT_THROW(series::sqrt_series(zero), std::domain_error);
}

TEST(GeneratingFunctions, HalfLine) {
    const auto f = series::gf_a_half_line(80);
    // Walks returning to 0: Catalan numbers on even n, zero on odd n.
    const auto t = walks::classical_table(80);
    for (std::size_t n = 0; n <= 80; ++n) EXPECT_EQ(f[n], Rational(t.at(n, 0))) << n;
    EXPECT_EQ(f[20], 16796);
}

TEST(GeneratingFunctions, ModularEqualsRowSums) {
    for (unsigned ell = 3; ell <= 10; ++ell) {
        constexpr std::size_t order = 120;
        const auto c = walks::residue_sequence(ell - 1, ell, order);
        const auto f = series::gf_b(ell, order, RationalSeries::from_integers(c.values, order));
        const auto b = walks::row_sums(ell, order);
        for (std::size_t n = 0; n <= order; ++n) ASSERT_EQ(f[n], Rational(b[n])) << "ell=" << ell << " n=" << n;
    }
}

TEST(GeneratingFunctions, DenominatorHasUnitConstantTerm) {
    for (unsigned ell = 2; ell <= 12; ++ell) {
        const auto q = series::cleared_denominator(ell);
        EXPECT_EQ(q.coeff(0), 1);
        EXPECT_EQ(q.degree(), 2 * static_cast<long>((ell - 1) / 2));
    }
}

TEST(GeneratingFunctions, Rejects) {
    RationalSeries c(10);
    EXPECT_THROW(series::gf_b(2, 10, c), std::invalid_argument);
    EXPECT_THROW(series::gf_b(4, 11, c), std::invalid_argument);
}

TEST(MixedFactor, LimitAndSeries) {
    for (unsigned p = 2; p <= 9; ++p)
        for (unsigned ell = 2; ell <= 9; ++ell) {
            EXPECT_EQ(series::mixed_factor_limit(p, ell), Rational(ell - 1, p - 1));
            // Numerical oracle: evaluate the closed form just below w = 1.
            const double w = 1 - 1e-6;
            const double v = (1 - std::pow(w, ell - 1)) * (1 + std::pow(w, p)) /
                             ((1 - std::pow(w, p - 1)) * (1 + std::pow(w, ell)));
            EXPECT_NEAR(v, static_cast<double>(ell - 1) / (p - 1), 1e-4);
        }
    // (1 - w^2)(1 + w^3) / ((1 - w^2)(1 + w^3)) = 1
    const auto one = series::mixed_factor_series(3, 3, 20);
    for (std::size_t i = 0; i <= 20; ++i) EXPECT_EQ(one[i], i == 0 ? 1 : 0);
    EXPECT_THROW(series::mixed_factor_series(1, 3, 5), std::invalid_argument);
    EXPECT_THROW(series::mixed_factor_limit(3, 1), std::invalid_argument);
}
