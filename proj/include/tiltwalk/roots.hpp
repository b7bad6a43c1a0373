#pragma once

// Root-system statistics for simple types and the constants that bound the
// growth of tensor powers of tilting modules in general type.

#include "tiltwalk/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tiltwalk::roots {

enum class CartanType { A, B, C, D, E, F, G };

inline char to_char(CartanType t) { return "ABCDEFG"[static_cast<int>(t)]; }

struct RootSystemStats {
    CartanType type;
    unsigned rank;
    unsigned num_positive_roots;
    unsigned coxeter_number;
    std::vector<unsigned> rho;  // rho in the fundamental-weight basis: all ones

    std::string name() const { return std::string(1, to_char(type)) + std::to_string(rank); }
};

inline RootSystemStats stats(CartanType type, unsigned rank) {
    auto invalid = [&] {
        return std::invalid_argument(std::string("no simple root system of type ") + to_char(type) +
                                     std::to_string(rank));
    };
    unsigned positive = 0, h = 0;
    switch (type) {
    case CartanType::A:
        if (rank < 1) throw invalid();
        positive = rank * (rank + 1) / 2;
        h = rank + 1;
        break;
    case CartanType::B:
    case CartanType::C:
        if (rank < 2) throw invalid();
        positive = rank * rank;
        h = 2 * rank;
        break;
    case CartanType::D:
        if (rank < 4) throw invalid();
        positive = rank * (rank - 1);
        h = 2 * rank - 2;
        break;
    case CartanType::E:
        if (rank == 6) positive = 36, h = 12;
        else if (rank == 7) positive = 63, h = 18;
        else if (rank == 8) positive = 120, h = 30;
        else throw invalid();
        break;
    case CartanType::F:
        if (rank != 4) throw invalid();
        positive = 24, h = 12;
        break;
    case CartanType::G:
        if (rank != 2) throw invalid();
        positive = 6, h = 6;
        break;
    }
    return {type, rank, positive, h, std::vector<unsigned>(rank, 1u)};
}

/// Parses names such as "A1", "G2", "e8".
inline RootSystemStats stats(std::string_view name) {
    if (name.size() < 2) throw std::invalid_argument("bad root system name: " + std::string(name));
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    if (letter < 'A' || letter > 'G') throw std::invalid_argument("bad root system type: " + std::string(name));
    unsigned rank = 0;
    for (char c : name.substr(1)) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad root system rank: " + std::string(name));
        rank = rank * 10 + static_cast<unsigned>(c - '0');
        if (rank > 1000) throw std::invalid_argument("root system rank too large: " + std::string(name));
    }
    return stats(static_cast<CartanType>(letter - 'A'), rank);
}

inline void require_modulus(unsigned ell) {
    if (ell < 2) throw std::invalid_argument("modulus ell must be >= 2, got " + std::to_string(ell));
}

/// dim ST = ell^{#R+}
inline BigInt steinberg_dim(const RootSystemStats& s, unsigned ell) {
    require_modulus(ell);
    return pow_int(BigInt(ell), s.num_positive_roots);
}

/// Bound on the Weyl factors of an indecomposable projective: min(ell, h)^{#R+}.
inline BigInt projective_delta_bound(const RootSystemStats& s, unsigned ell) {
    require_modulus(ell);
    return pow_int(BigInt(std::min(ell, s.coxeter_number)), s.num_positive_roots);
}

inline bool is_rank2(const RootSystemStats& s) {
    return s.rank == 2 && (s.type == CartanType::A || s.type == CartanType::B || s.type == CartanType::C ||
                           s.type == CartanType::G);
}

/// Improved rank-2 lower-bound constants: A2 -> 12, B2/C2 -> 32, G2 -> 348.
inline unsigned rank2_improved_bound(const RootSystemStats& s) {
    if (!is_rank2(s)) throw std::invalid_argument("no improved bound for type " + s.name());
    switch (s.type) {
    case CartanType::A: return 12;
    case CartanType::B:
    case CartanType::C: return 32;
    default: return 348;
    }
}

/// The improved constant holds for ell > 2 (A2), ell > 4 (B2, C2), ell > 6 (G2).
inline bool rank2_admissible(const RootSystemStats& s, unsigned ell) {
    if (!is_rank2(s)) return false;
    switch (s.type) {
    case CartanType::A: return ell > 2;
    case CartanType::B:
    case CartanType::C: return ell > 4;
    default: return ell > 6;
    }
}

/// b_n in Theta(n^tau beta^n), with lower_const * n^tau beta^n <= b_n <= upper_const * n^tau beta^n.
struct ThetaEnvelope {
    Rational tau;
    BigInt beta;
    double lower_const;
    double upper_const;
    BigInt divisor;  // upper_const / lower_const
};

inline ThetaEnvelope theta_envelope(const RootSystemStats& s, const BigInt& dim_t, double char_zero_const,
                                    unsigned ell) {
    require_modulus(ell);
    if (dim_t < 1) throw std::invalid_argument("module dimension must be >= 1");
    if (!(char_zero_const > 0)) throw std::invalid_argument("characteristic-zero constant must be positive");
    BigInt divisor = rank2_admissible(s, ell) ? BigInt(rank2_improved_bound(s)) : projective_delta_bound(s, ell);
    const double lower = char_zero_const / static_cast<double>(divisor);
    return {Rational(-static_cast<int>(s.num_positive_roots), 2), dim_t, lower, char_zero_const, divisor};
}

}  // namespace tiltwalk::roots
