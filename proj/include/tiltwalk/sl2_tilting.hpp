#pragma once

// Tilting modules for quantum SL2 at a root of unity, tracked through their
// Weyl (Delta) factors.
//
// A weight k is the highest weight of T(k); the module dimension context is
// k + 1 = a*ell + b with 0 <= b < ell. T(k) = Delta(k) unless a != 0 and b != 0,
// in which case T(k) has the two factors Delta(k) and Delta(j) with
// j + 1 = a*ell - b ("flipping digits"). Since j < k, the Delta-factor matrix
// is unitriangular and any tilting module is recovered from its Delta-factors
// by peeling off the highest weight repeatedly.

#include "tiltwalk/numeric.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tiltwalk::sl2 {

using Weight = std::uint64_t;

inline void require_modulus(unsigned ell) {
    if (ell < 2) throw std::invalid_argument("modulus ell must be >= 2, got " + std::to_string(ell));
}

/// k + 1 = a * ell + b
struct Digits {
    std::uint64_t a;
    std::uint64_t b;
};

inline Digits digits(Weight k, unsigned ell) {
    require_modulus(ell);
    return {(k + 1) / ell, (k + 1) % ell};
}

enum class Region { fundamental_alcove, wall, projective_interior };

inline Region region(Weight k, unsigned ell) {
    const auto d = digits(k, ell);
    if (d.a == 0) return Region::fundamental_alcove;
    return d.b == 0 ? Region::wall : Region::projective_interior;
}

/// Projective cone: k + 1 >= ell (wall included).
inline bool is_projective(Weight k, unsigned ell) {
    require_modulus(ell);
    return k + 1 >= ell;
}

/// Formal sum of Weyl modules: weight -> multiplicity (never stores zero).
class DeltaMultiset {
public:
    using map_type = std::map<Weight, BigInt>;

    DeltaMultiset() = default;
    DeltaMultiset(std::initializer_list<std::pair<const Weight, BigInt>> init) {
        for (const auto& [w, m] : init) add(w, m);
    }

    void add(Weight w, const BigInt& mult) {
        if (mult == 0) return;
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        entries_[w] += mult;
    }

    /// Removes mult copies of Delta(w); throws if fewer are present.
    void remove(Weight w, const BigInt& mult) {
        if (mult == 0) return;
        auto it = entries_.find(w);
        const BigInt have = it == entries_.end() ? BigInt(0) : it->second;
        if (have < mult)
            throw std::domain_error("multiplicity of Delta(" + std::to_string(w) + ") would become negative");
        if (have == mult) entries_.erase(it);
        else it->second -= mult;
    }

    BigInt multiplicity(Weight w) const {
        auto it = entries_.find(w);
        return it == entries_.end() ? BigInt(0) : it->second;
    }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const map_type& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool operator==(const DeltaMultiset&) const = default;

private:
    map_type entries_;
};

/// Direct sum of indecomposable tiltings: weight -> multiplicity of T(weight).
class TiltingDecomposition {
public:
    explicit TiltingDecomposition(unsigned ell) : ell_(ell) { require_modulus(ell); }

    unsigned modulus() const { return ell_; }

    void add(Weight w, const BigInt& mult) {
        if (mult == 0) return;
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        entries_[w] += mult;
    }

    BigInt multiplicity(Weight w) const {
        auto it = entries_.find(w);
        return it == entries_.end() ? BigInt(0) : it->second;
    }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::map<Weight, BigInt>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool operator==(const TiltingDecomposition&) const = default;

private:
    unsigned ell_;
    std::map<Weight, BigInt> entries_;
};

inline DeltaMultiset delta_factors(Weight k, unsigned ell) {
    const auto d = digits(k, ell);
    DeltaMultiset out;
    out.add(k, 1);
    if (d.a != 0 && d.b != 0) out.add(d.a * ell - d.b - 1, 1);
    return out;
}

inline BigInt dim_tilting(Weight k, unsigned ell) {
    const auto d = digits(k, ell);
    if (d.a == 0 || d.b == 0) return BigInt(k + 1);
    return BigInt(2 * d.a) * ell;
}

/// Clebsch-Gordan: Delta(a) (x) Delta(b) = sum_{i=0}^{min(a,b)} Delta(a + b - 2i), extended bilinearly.
inline DeltaMultiset cg_product(const DeltaMultiset& lhs, const DeltaMultiset& rhs) {
    DeltaMultiset out;
    for (const auto& [a, ma] : lhs) {
        for (const auto& [b, mb] : rhs) {
            const BigInt m = ma * mb;
            const Weight lo = a < b ? a : b;
            for (Weight i = 0; i <= lo; ++i) out.add(a + b - 2 * i, m);
        }
    }
    return out;
}

/// Raised when a Delta-multiset is not the Delta-multiset of any tilting module.
class not_tilting_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Greedy peel from the highest weight.
inline TiltingDecomposition tilting_decompose(DeltaMultiset d, unsigned ell) {
    TiltingDecomposition td(ell);
    while (!d.empty()) {
        const auto top = std::prev(d.end());
        const Weight k = top->first;
        const BigInt m = top->second;
        td.add(k, m);
        for (const auto& [w, mult] : delta_factors(k, ell)) {
            try {
                d.remove(w, mult * m);
            } catch (const std::domain_error&) {
                throw not_tilting_error("Delta-multiset is not that of a tilting module: removing T(" +
                                        std::to_string(k) + ") leaves a negative multiplicity at " +
                                        std::to_string(w));
            }
        }
    }
    return td;
}

/// Delta-factors of a tilting decomposition.
inline DeltaMultiset expand(const TiltingDecomposition& td) {
    DeltaMultiset out;
    for (const auto& [k, m] : td)
        for (const auto& [w, mult] : delta_factors(k, td.modulus())) out.add(w, mult * m);
    return out;
}

struct TensorPower {
    TiltingDecomposition tilting;
    DeltaMultiset weyl;  // also the characteristic-zero decomposition of T_C(k)^{(x)n}
};

/// Calls fn(n, power) for n = 0..n_max, folding one factor of T(k) per step.
inline void for_each_tensor_power(Weight k, std::size_t n_max, unsigned ell,
                                  const std::function<void(std::size_t, const TensorPower&)>& fn) {
    const auto factor = delta_factors(k, ell);
    DeltaMultiset weyl{{0, BigInt(1)}};
    for (std::size_t n = 0;; ++n) {
        fn(n, TensorPower{tilting_decompose(weyl, ell), weyl});
        if (n == n_max) break;
        weyl = cg_product(weyl, factor);
    }
}

/// T(k)^{(x)n} as both tilting decomposition and Delta-multiset.
inline TensorPower tensor_power(Weight k, std::size_t n, unsigned ell) {
    const auto factor = delta_factors(k, ell);
    DeltaMultiset weyl{{0, BigInt(1)}};
    for (std::size_t i = 0; i < n; ++i) weyl = cg_product(weyl, factor);
    return {tilting_decompose(weyl, ell), std::move(weyl)};
}

inline TiltingDecomposition tensor_product(Weight a, Weight b, unsigned ell) {
    return tilting_decompose(cg_product(delta_factors(a, ell), delta_factors(b, ell)), ell);
}

inline BigInt count_summands(const TiltingDecomposition& td) {
    BigInt s = 0;
    for (const auto& [k, m] : td) s += m;
    return s;
}

inline BigInt count_weyl(const DeltaMultiset& d) {
    BigInt s = 0;
    for (const auto& [k, m] : d) s += m;
    return s;
}

/// Summands T(k) with k + 1 = 0 (mod ell).
inline BigInt wall_summands(const TiltingDecomposition& td) {
    BigInt s = 0;
    for (const auto& [k, m] : td)
        if ((k + 1) % td.modulus() == 0) s += m;
    return s;
}

inline BigInt total_dimension(const TiltingDecomposition& td) {
    BigInt s = 0;
    for (const auto& [k, m] : td) s += m * dim_tilting(k, td.modulus());
    return s;
}

/// Characteristic-zero rate sqrt(6 / ((k^2 - 1) pi)) for V = T(k - 1); needs k >= 2.
inline double char_zero_rate_constant(std::uint64_t k) {
    if (k < 2) throw std::domain_error("the characteristic-zero rate needs k >= 2 (V = T(k-1) nontrivial)");
    const double kk = static_cast<double>(k);
    return std::sqrt(6.0 / ((kk * kk - 1.0) * std::numbers::pi));
}

struct BoundsRow {
    std::size_t n;
    BigInt summands;
    BigInt weyl;
    bool holds;                         // weyl/2 <= summands <= weyl
    std::optional<double> rate_ratio;   // weyl / (c n^{-1/2} dim^n), n >= 1 and rate defined
};

struct BoundsReport {
    Weight highest_weight;
    unsigned ell;
    BigInt dimension;
    std::optional<double> rate_constant;
    std::vector<BoundsRow> rows;

    bool all_hold() const {
        for (const auto& r : rows)
            if (!r.holds) return false;
        return true;
    }
};

/// Checks weyl/2 <= summands <= weyl for V = T(highest_weight) and n = 0..n_max.
inline BoundsReport bounds_check(Weight highest_weight, unsigned ell, std::size_t n_max) {
    BoundsReport rep{highest_weight, ell, dim_tilting(highest_weight, ell), std::nullopt, {}};
    if (highest_weight + 1 >= 2) rep.rate_constant = char_zero_rate_constant(highest_weight + 1);
    const double dim = static_cast<double>(rep.dimension);
    for_each_tensor_power(highest_weight, n_max, ell, [&](std::size_t n, const TensorPower& p) {
        BoundsRow row{n, count_summands(p.tilting), count_weyl(p.weyl), false, std::nullopt};
        row.holds = row.weyl <= 2 * row.summands && row.summands <= row.weyl;
        if (rep.rate_constant && n >= 1)
            row.rate_ratio = div_pow(row.weyl, dim, n) * std::sqrt(static_cast<double>(n)) / *rep.rate_constant;
        rep.rows.push_back(std::move(row));
    });
    return rep;
}

/// True iff every summand lies in the projective cone.
inline bool projective_closure_check(const TiltingDecomposition& td) {
    for (const auto& [k, m] : td)
        if (!is_projective(k, td.modulus())) return false;
    return true;
}

/// Decomposes T(a) (x) T(b) and checks it stays projective; a must be projective.
inline bool projective_closure_check(Weight a, Weight b, unsigned ell) {
    if (!is_projective(a, ell))
        throw std::invalid_argument("T(" + std::to_string(a) + ") is not projective for ell=" + std::to_string(ell));
    return projective_closure_check(tensor_product(a, b, ell));
}

}  // namespace tiltwalk::sl2
