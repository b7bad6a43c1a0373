#pragma once

// Half-line walks a_{n,m} and their mod-ell constrained variant b_{n,m}.
//
// a_{n,m} counts +-1 step paths of length n on Z>=0 from 0 to m. The modular
// table follows the three-way residue split
//
//   b_{n,m} = a_{n,m}                       m = ell-1 (mod ell)
//           = b_{n-1,m-1}                   m = ell-2 (mod ell)
//           = b_{n-1,m-1} + b_{n-1,m+1}     otherwise
//
// where the residue is taken in {0, ..., ell-1}. For ell = 2 the last case
// never applies. Column -1 always contributes 0.
//
// Memory: a dense table of order N holds ~N^2/2 integers of up to N bits, so
// roughly N^3/16 bytes; N around 5000 is the practical limit. RowStream keeps
// only two rows and is the tool for row sums at large n.

#include "tiltwalk/numeric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tiltwalk::walks {

struct TableKind {
    std::optional<unsigned> modulus;  // empty for the classical table

    static TableKind classical() { return {}; }
    static TableKind modular(unsigned ell) { return {ell}; }

    bool is_classical() const { return !modulus.has_value(); }
    bool operator==(const TableKind&) const = default;
};

inline void require_modulus(unsigned ell) {
    if (ell < 2) throw std::invalid_argument("modulus ell must be >= 2, got " + std::to_string(ell));
}

/// Triangular table of counts; row n has n+1 entries.
class CountTable {
public:
    CountTable(TableKind kind, std::vector<std::vector<BigInt>> rows)
        : kind_(kind), rows_(std::move(rows)) {
        if (rows_.empty() || rows_[0].size() != 1 || rows_[0][0] != 1)
            throw std::invalid_argument("count table must start with row [1]");
        for (std::size_t n = 0; n < rows_.size(); ++n) {
            if (rows_[n].size() != n + 1)
                throw std::invalid_argument("row " + std::to_string(n) + " must have " +
                                            std::to_string(n + 1) + " entries");
        }
    }

    std::size_t order() const { return rows_.size() - 1; }
    const TableKind& kind() const { return kind_; }

    std::span<const BigInt> row(std::size_t n) const {
        check_row(n);
        return rows_[n];
    }

    /// Entry (n, m); zero for m > n.
    BigInt at(std::size_t n, std::size_t m) const {
        check_row(n);
        return m <= n ? rows_[n][m] : BigInt(0);
    }

    const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

    bool operator==(const CountTable&) const = default;

private:
    void check_row(std::size_t n) const {
        if (n > order())
            throw std::out_of_range("row " + std::to_string(n) + " beyond truncation order " +
                                    std::to_string(order()));
    }

    TableKind kind_;
    std::vector<std::vector<BigInt>> rows_;
};

/// Values indexed by n with a provenance label (e.g. "b_n ell=5").
struct GrowthSequence {
    std::vector<BigInt> values;
    std::string label;

    std::size_t size() const { return values.size(); }
    const BigInt& operator[](std::size_t n) const { return values.at(n); }
};

enum class ResidueRule { copy_classical, left_only, both_neighbours };

inline ResidueRule residue_rule(std::size_t m, unsigned ell) {
    const auto r = m % ell;
    if (r == ell - 1) return ResidueRule::copy_classical;
    if (r == ell - 2) return ResidueRule::left_only;
    return ResidueRule::both_neighbours;
}

namespace detail {

// next[m] = prev[m-1] + prev[m+1]; next is resized to prev.size()+1.
inline void step_classical(const std::vector<BigInt>& prev, std::vector<BigInt>& next) {
    const std::size_t n = prev.size();
    next.resize(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        if (m >= 1) next[m] = prev[m - 1];
        else next[m] = 0;
        if (m + 1 < n) next[m] += prev[m + 1];
    }
}

inline void step_modular(const std::vector<BigInt>& prev, const std::vector<BigInt>& classical_next,
                         unsigned ell, std::vector<BigInt>& next) {
    const std::size_t n = prev.size();
    next.resize(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        switch (residue_rule(m, ell)) {
        case ResidueRule::copy_classical:
            next[m] = classical_next[m];
            break;
        case ResidueRule::left_only:
            if (m >= 1) next[m] = prev[m - 1];
            else next[m] = 0;
            break;
        case ResidueRule::both_neighbours:
            if (m >= 1) next[m] = prev[m - 1];
            else next[m] = 0;
            if (m + 1 < n) next[m] += prev[m + 1];
            break;
        }
    }
}

inline BigInt sum(std::span<const BigInt> row) {
    BigInt s = 0;
    for (const auto& v : row) s += v;
    return s;
}

}  // namespace detail

/// Two-row streaming generator of the classical and (optionally) modular rows.
class RowStream {
public:
    RowStream() : RowStream(std::nullopt) {}
    explicit RowStream(std::optional<unsigned> ell) : ell_(ell) {
        if (ell_) require_modulus(*ell_);
        a_ = {BigInt(1)};
        if (ell_) b_ = {BigInt(1)};
    }

    void advance() {
        detail::step_classical(a_, a_next_);
        if (ell_) {
            detail::step_modular(b_, a_next_, *ell_, b_next_);
            b_.swap(b_next_);
        }
        a_.swap(a_next_);
        ++n_;
    }

    std::size_t n() const { return n_; }
    std::optional<unsigned> modulus() const { return ell_; }
    std::span<const BigInt> classical_row() const { return a_; }
    std::span<const BigInt> modular_row() const {
        if (!ell_) throw std::logic_error("RowStream has no modulus");
        return b_;
    }

    BigInt classical_sum() const { return detail::sum(a_); }
    BigInt modular_sum() const { return detail::sum(modular_row()); }

    /// Sum of classical entries with m = r (mod modulus).
    BigInt classical_residue_sum(unsigned r, unsigned modulus) const {
        BigInt s = 0;
        for (std::size_t m = r; m < a_.size(); m += modulus) s += a_[m];
        return s;
    }

private:
    std::optional<unsigned> ell_;
    std::size_t n_ = 0;
    std::vector<BigInt> a_, a_next_, b_, b_next_;
};

inline CountTable classical_table(std::size_t order) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(order + 1);
    RowStream s;
    rows.emplace_back(s.classical_row().begin(), s.classical_row().end());
    for (std::size_t n = 1; n <= order; ++n) {
        s.advance();
        rows.emplace_back(s.classical_row().begin(), s.classical_row().end());
    }
    return CountTable(TableKind::classical(), std::move(rows));
}

/// The classical rows are built in lockstep since wall entries copy them.
inline CountTable modular_table(unsigned ell, std::size_t order) {
    require_modulus(ell);
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(order + 1);
    RowStream s(ell);
    rows.emplace_back(s.modular_row().begin(), s.modular_row().end());
    for (std::size_t n = 1; n <= order; ++n) {
        s.advance();
        rows.emplace_back(s.modular_row().begin(), s.modular_row().end());
    }
    return CountTable(TableKind::modular(ell), std::move(rows));
}

/// Ballot theorem: C(n, (n-m)/2) - C(n, (n-m)/2 - 1), zero off-parity or for m > n.
inline BigInt ballot_formula(std::size_t n, std::size_t m) {
    if (m > n || (n - m) % 2 != 0) return 0;
    const auto k = static_cast<std::ptrdiff_t>((n - m) / 2);
    return binomial(n, k) - binomial(n, k - 1);
}

inline BigInt row_sum(const CountTable& table, std::size_t n) { return detail::sum(table.row(n)); }

/// c_n^{(r)}: classical entries of row n whose endpoint is r mod ell.
inline BigInt residue_sum(const CountTable& table, std::size_t n, unsigned r, unsigned ell) {
    require_modulus(ell);
    if (!table.kind().is_classical())
        throw std::invalid_argument("residue_sum needs the classical table");
    if (r >= ell)
        throw std::out_of_range("residue " + std::to_string(r) + " not in [0, " + std::to_string(ell) + ")");
    const auto row = table.row(n);
    BigInt s = 0;
    for (std::size_t m = r; m < row.size(); m += ell) s += row[m];
    return s;
}

/// w_n = c_n^{(ell-1)}, streamed so no table is kept.
inline BigInt wall_count(unsigned ell, std::size_t n) {
    require_modulus(ell);
    RowStream s;
    while (s.n() < n) s.advance();
    return s.classical_residue_sum(ell - 1, ell);
}

/// a_n, b_n(ell) and w_n(ell) for n = 0..n_max in one streaming pass.
struct StreamedSequences {
    GrowthSequence a;
    GrowthSequence b;
    GrowthSequence walls;
};

inline StreamedSequences streamed_sequences(unsigned ell, std::size_t n_max) {
    require_modulus(ell);
    const auto tag = " ell=" + std::to_string(ell);
    StreamedSequences out{{{}, "a_n"}, {{}, "b_n" + tag}, {{}, "w_n" + tag}};
    out.a.values.reserve(n_max + 1);
    out.b.values.reserve(n_max + 1);
    out.walls.values.reserve(n_max + 1);
    RowStream s(ell);
    for (;;) {
        out.a.values.push_back(s.classical_sum());
        out.b.values.push_back(s.modular_sum());
        out.walls.values.push_back(s.classical_residue_sum(ell - 1, ell));
        if (s.n() == n_max) break;
        s.advance();
    }
    return out;
}

/// Row sums 0..n_max of the classical (no modulus) or modular table.
inline GrowthSequence row_sums(std::optional<unsigned> ell, std::size_t n_max) {
    RowStream s(ell);
    GrowthSequence seq{{}, ell ? "b_n ell=" + std::to_string(*ell) : "a_n"};
    seq.values.reserve(n_max + 1);
    for (;;) {
        seq.values.push_back(ell ? s.modular_sum() : s.classical_sum());
        if (s.n() == n_max) break;
        s.advance();
    }
    return seq;
}

/// c_n^{(r)} for n = 0..n_max.
inline GrowthSequence residue_sequence(unsigned r, unsigned ell, std::size_t n_max) {
    require_modulus(ell);
    if (r >= ell) throw std::out_of_range("residue out of range");
    RowStream s;
    GrowthSequence seq{{}, "c_n^(" + std::to_string(r) + ") ell=" + std::to_string(ell)};
    seq.values.reserve(n_max + 1);
    for (;;) {
        seq.values.push_back(s.classical_residue_sum(r, ell));
        if (s.n() == n_max) break;
        s.advance();
    }
    return seq;
}

}  // namespace tiltwalk::walks
