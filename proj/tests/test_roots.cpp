#include "tiltwalk/roots.hpp"

#include <gtest/gtest.h>

using namespace tiltwalk;
using namespace tiltwalk::roots;

TEST(RootStats, ClassicalFamilies) {
    for (unsigned n = 1; n <= 8; ++n) {
        const auto a = stats(CartanType::A, n);
        EXPECT_EQ(a.num_positive_roots, n * (n + 1) / 2);
        EXPECT_EQ(a.coxeter_number, n + 1);
        EXPECT_EQ(a.rho, std::vector<unsigned>(n, 1));
        // #R+ = rank * h / 2 for every simple type.
        EXPECT_EQ(2 * a.num_positive_roots, a.rank * a.coxeter_number);
    }
    for (unsigned n = 2; n <= 8; ++n)
        for (auto t : {CartanType::B, CartanType::C}) {
            const auto s = stats(t, n);
            EXPECT_EQ(s.num_positive_roots, n * n);
            EXPECT_EQ(s.coxeter_number, 2 * n);
        }
    for (unsigned n = 4; n <= 8; ++n) {
        const auto d = stats(CartanType::D, n);
        EXPECT_EQ(d.num_positive_roots, n * (n - 1));
        EXPECT_EQ(2 * d.num_positive_roots, d.rank * d.coxeter_number);
    }
}

TEST(RootStats, Exceptional) {
    struct Row {
        const char* name;
        unsigned positive, h;
    };
    for (const auto& r : {Row{"E6", 36, 12}, Row{"E7", 63, 18}, Row{"E8", 120, 30}, Row{"F4", 24, 12}, Row{"G2", 6, 6}}) {
        const auto s = stats(r.name);
        EXPECT_EQ(s.num_positive_roots, r.positive) << r.name;
        EXPECT_EQ(s.coxeter_number, r.h) << r.name;
        EXPECT_EQ(s.name(), r.name);
        EXPECT_EQ(2 * s.num_positive_roots, s.rank * s.coxeter_number);
    }
}

TEST(RootStats, RejectsInvalid) {
    for (const char* bad : {"", "A", "A0", "B1", "D3", "E5", "E9", "F3", "G3", "H2", "Ax"})
        EXPECT_THROW(stats(bad), std::invalid_argument) << bad;
    EXPECT_EQ(stats("g2").name(), "G2");
}

TEST(Constants, SteinbergAndProjectiveBound) {
    EXPECT_EQ(steinberg_dim(stats("A1"), 5), 5);
    EXPECT_EQ(steinberg_dim(stats("A2"), 5), 125);
    EXPECT_EQ(projective_delta_bound(stats("A2"), 10), 27);
    EXPECT_EQ(projective_delta_bound(stats("A2"), 2), 8);
    EXPECT_EQ(projective_delta_bound(stats("B2"), 4), 256);
    EXPECT_EQ(projective_delta_bound(stats("G2"), 6), 46656);
    EXPECT_THROW(steinberg_dim(stats("A1"), 1), std::invalid_argument);
}

TEST(Constants, RankTwoImproved) {
    EXPECT_EQ(rank2_improved_bound(stats("A2")), 12u);
    EXPECT_EQ(rank2_improved_bound(stats("B2")), 32u);
    EXPECT_EQ(rank2_improved_bound(stats("C2")), 32u);
    EXPECT_EQ(rank2_improved_bound(stats("G2")), 348u);
    EXPECT_THROW(rank2_improved_bound(stats("A3")), std::invalid_argument);
    EXPECT_FALSE(rank2_admissible(stats("A2"), 2));
    EXPECT_TRUE(rank2_admissible(stats("A2"), 3));
    EXPECT_FALSE(rank2_admissible(stats("B2"), 4));
    EXPECT_TRUE(rank2_admissible(stats("C2"), 5));
    EXPECT_FALSE(rank2_admissible(stats("G2"), 6));
    EXPECT_TRUE(rank2_admissible(stats("G2"), 7));
    EXPECT_FALSE(rank2_admissible(stats("D4"), 100));
    // The improved constants never exceed the general ones.
    for (const char* t : {"A2", "B2", "C2", "G2"}) {
        const auto s = stats(t);
        EXPECT_LE(BigInt(rank2_improved_bound(s)), projective_delta_bound(s, s.coxeter_number));
    }
}

TEST(Envelope, Theta) {
    const auto g2 = stats("G2");
    const auto env = theta_envelope(g2, 7, 2.0, 7);
    EXPECT_EQ(env.tau, Rational(-3));
    EXPECT_EQ(env.beta, 7);
    EXPECT_EQ(env.divisor, 348);
    EXPECT_DOUBLE_EQ(env.upper_const, 2.0);
    EXPECT_DOUBLE_EQ(env.lower_const, 2.0 / 348);
    EXPECT_EQ(theta_envelope(g2, 7, 2.0, 5).divisor, 15625);  // min(5, 6)^6
    EXPECT_EQ(theta_envelope(stats("A1"), 2, 1.0, 3).tau, Rational(-1, 2));
    EXPECT_EQ(theta_envelope(stats("A1"), 2, 1.0, 3).divisor, 2);
    EXPECT_THROW(theta_envelope(g2, 0, 1.0, 7), std::invalid_argument);
    EXPECT_THROW(theta_envelope(g2, 7, 0.0, 7), std::invalid_argument);
}
