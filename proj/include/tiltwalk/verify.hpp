#pragma once

// Programmatic acceptance checks. Each check recomputes its quantities from
// scratch (apart from the shared n <= 2000 sequence cache) and reports PASS or
// FAIL together with the measured values.

#include "tiltwalk/asymptotics.hpp"
#include "tiltwalk/io.hpp"
#include "tiltwalk/roots.hpp"
#include "tiltwalk/series.hpp"
#include "tiltwalk/sl2_tilting.hpp"
#include "tiltwalk/walks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

namespace tiltwalk::verify {

enum class Profile { quick, full };

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;  // 0: no runtime bound
};

/// Exact b_n, a_n and w_n for ell = 2..9 up to kAsymptoticN, computed once.
class SequenceCache {
public:
    static constexpr std::size_t kAsymptoticN = 2000;

    const walks::StreamedSequences& get(unsigned ell) {
        std::call_once(once_, [this] {
            for (unsigned l = 2; l <= 9; ++l) data_.emplace(l, walks::streamed_sequences(l, kAsymptoticN));
        });
        return data_.at(ell);
    }

private:
    std::once_flag once_;
    std::map<unsigned, walks::StreamedSequences> data_;
};

struct Context {
    std::string fixture_dir;
    Profile profile = Profile::full;
    unsigned digits = asymptotics::kDefaultDigits;
    SequenceCache* cache = nullptr;
};

inline constexpr int kNumCriteria = 14;

inline std::vector<int> criteria_for(Profile p) {
    if (p == Profile::quick) return {1, 2, 3, 4, 5, 6, 7, 11, 12, 13};
    std::vector<int> all;
    for (int i = 1; i <= kNumCriteria; ++i) all.push_back(i);
    return all;
}

namespace detail {

inline std::string fmt(double v, int precision = 6) {
    std::ostringstream ss;
    ss.precision(precision);
    ss << v;
    return ss.str();
}

inline std::string fixture(const Context& ctx, const std::string& name) {
    return ctx.fixture_dir + "/" + name;
}

struct Outcome {
    bool pass;
    std::string detail;
};

// --- 1 ---------------------------------------------------------------------
inline Outcome golden_tables(const Context& ctx) {
    const auto printed_a = io::read_file(fixture(ctx, "golden_table_a.csv"));
    const auto printed_b = io::read_file(fixture(ctx, "golden_table_b.csv"));
    const bool a_ok = io::table_to_csv(walks::classical_table(15)) == printed_a;
    const bool b_ok = io::table_to_csv(walks::modular_table(4, 15)) == printed_b;
    std::string detail = std::string("classical N=15 ") + (a_ok ? "matches" : "DIFFERS") +
                         "; modular ell=4 N=15 " + (b_ok ? "matches" : "DIFFERS");
    if (!b_ok) {
        for (unsigned ell = 2; ell <= 9; ++ell) {
            if (io::table_to_csv(walks::modular_table(ell, 15)) == printed_b) {
                detail += " (printed right matrix equals modular ell=" + std::to_string(ell) + ")";
                break;
            }
        }
    }
    return {a_ok && b_ok, detail};
}

// --- 2 ---------------------------------------------------------------------
inline Outcome sequence_fixtures(const Context& ctx) {
    const auto rows = io::parse_csv_matrix(io::read_file(fixture(ctx, "example_b_sequences.csv")));
    if (rows.size() != 4) return {false, "fixture must hold 4 rows (ell=2..5)"};
    std::string bad;
    for (const auto& row : rows) {
        const auto ell = static_cast<unsigned>(row.at(0));
        const std::vector<BigInt> expected(row.begin() + 1, row.end());
        const auto got = walks::row_sums(ell, expected.size() - 1).values;
        if (got != expected) bad += " ell=" + std::to_string(ell);
    }
    return {bad.empty(), bad.empty() ? "ell=2..5, n=0..10 exact" : "mismatch for" + bad};
}

// --- 3 ---------------------------------------------------------------------
inline Outcome generating_functions(const Context&) {
    constexpr std::size_t order = 200;
    std::string bad;
    for (unsigned ell = 3; ell <= 9; ++ell) {
        const auto c = walks::residue_sequence(ell - 1, ell, order);
        const auto f = series::gf_b(ell, order, series::RationalSeries::from_integers(c.values, order));
        const auto b = walks::row_sums(ell, order);
        for (std::size_t n = 0; n <= order; ++n) {
            if (f[n] != Rational(b[n])) {
                bad += " ell=" + std::to_string(ell) + "@n=" + std::to_string(n);
                break;
            }
        }
    }
    // ell = 2: b_n = a_n (n odd), a_{n-1} (n even, n >= 2).
    const auto a = walks::row_sums(std::nullopt, order);
    const auto b2 = walks::row_sums(2u, order);
    for (std::size_t n = 1; n <= order; ++n) {
        const auto& want = n % 2 ? a[n] : a[n - 1];
        if (b2[n] != want) {
            bad += " ell=2@n=" + std::to_string(n);
            break;
        }
    }
    return {bad.empty(), bad.empty() ? "gf_b = row sums for ell=3..9, n<=200; ell=2 parity reduction holds"
                                     : "mismatch:" + bad};
}

// --- 4 ---------------------------------------------------------------------
inline Outcome ballot_equivalence(const Context&) {
    const auto t = walks::classical_table(200);
    for (std::size_t n = 0; n <= 200; ++n)
        for (std::size_t m = 0; m <= 200; ++m)
            if (walks::ballot_formula(n, m) != t.at(n, m))
                return {false, "mismatch at (" + std::to_string(n) + "," + std::to_string(m) + ")"};
    return {true, "all (n, m) with n, m <= 200"};
}

// --- 5 and 7 -----------------------------------------------------------------
struct CrossOracleResult {
    bool weights_match = true;
    bool dimension_ok = true;
    std::string where;
};

inline CrossOracleResult walk_tilting_cross(std::size_t n_max) {
    CrossOracleResult r;
    for (unsigned ell = 2; ell <= 9; ++ell) {
        walks::RowStream stream(ell);
        sl2::for_each_tensor_power(1, n_max, ell, [&](std::size_t n, const sl2::TensorPower& p) {
            while (stream.n() < n) stream.advance();
            const auto row = stream.modular_row();
            bool ok = p.tilting.size() <= row.size();
            for (std::size_t m = 0; ok && m < row.size(); ++m) ok = p.tilting.multiplicity(m) == row[m];
            if (!ok && r.weights_match) {
                r.weights_match = false;
                r.where += " weights ell=" + std::to_string(ell) + "@n=" + std::to_string(n);
            }
            if (sl2::total_dimension(p.tilting) != pow_int(BigInt(2), static_cast<unsigned>(n)) &&
                r.dimension_ok) {
                r.dimension_ok = false;
                r.where += " dimension ell=" + std::to_string(ell) + "@n=" + std::to_string(n);
            }
        });
    }
    return r;
}

inline std::size_t cross_oracle_n(const Context& ctx) { return ctx.profile == Profile::quick ? 200 : 500; }

inline Outcome cross_oracle(const Context& ctx) {
    const auto n = cross_oracle_n(ctx);
    const auto r = walk_tilting_cross(n);
    return {r.weights_match, r.weights_match ? "T(1)^n multiplicities = b_{n,m}(ell), ell=2..9, n<=" + std::to_string(n)
                                             : "mismatch:" + r.where};
}

// --- 6 ---------------------------------------------------------------------
inline Outcome worked_example(const Context&) {
    const auto p = sl2::tensor_power(3, 2, 3);
    sl2::TiltingDecomposition want_t(3);
    want_t.add(6, 1);
    want_t.add(4, 3);
    want_t.add(2, 1);
    want_t.add(0, 2);
    const sl2::DeltaMultiset want_d{{6, 1}, {4, 3}, {2, 4}, {0, 2}};
    const bool delta_ok = p.weyl == want_d;
    const bool tilt_ok = p.tilting == want_t;
    std::string detail = std::string("Delta {6:1,4:3,2:4,0:2} ") + (delta_ok ? "matches" : "DIFFERS");
    if (tilt_ok) return {delta_ok, detail + "; T(6)+3T(4)+T(2)+2T(0) matches"};
    std::string got;
    for (const auto& [k, m] : p.tilting) got = " " + m.str() + "T(" + std::to_string(k) + ")" + got;
    detail += "; expected T(6)+3T(4)+T(2)+2T(0) (dim " + sl2::total_dimension(want_t).str() +
              ", Delta-expansion differs), computed" + got + " (dim " + sl2::total_dimension(p.tilting).str() + ")";
    return {false, detail};
}

inline Outcome dimension_conservation(const Context& ctx) {
    const auto n = cross_oracle_n(ctx);
    const auto r = walk_tilting_cross(n);
    const auto p = sl2::tensor_power(3, 2, 3);
    const bool example_ok = sl2::total_dimension(p.tilting) == 36;  // dim T(3) = 6 at ell = 3
    const bool ok = r.dimension_ok && example_ok;
    return {ok, ok ? "sum mult*dim = dim^n for T(1), ell=2..9, n<=" + std::to_string(n) + " and T(3)^2 at ell=3 (36)"
                   : "violation:" + r.where + (example_ok ? "" : " T(3)^2")};
}

// --- 8 ---------------------------------------------------------------------
inline constexpr double kSharpRatioTol = 0.01;
inline constexpr std::size_t kEnvelopeLo = 200;

inline Outcome sharp_asymptotics(const Context& ctx) {
    const std::size_t n = SequenceCache::kAsymptoticN;
    bool ok = true;
    std::string detail;
    for (unsigned ell = 2; ell <= 9; ++ell) {
        const auto& seq = ctx.cache->get(ell);
        const auto approx = asymptotics::b_approximant(ell);
        const double ratio = asymptotics::normalized_exact(seq.b[n], n, approx) / approx.prefactor(n);
        const auto env = asymptotics::error_envelope(seq.b, approx, kEnvelopeLo, n);
        const bool this_ok = std::abs(ratio - 1) <= kSharpRatioTol && env.pass;
        ok = ok && this_ok;
        detail += " ell=" + std::to_string(ell) + ":ratio=" + fmt(ratio, 7) + ",C=" + fmt(env.constant, 4) +
                  ",trend=" + fmt(env.upper_half_max / env.lower_half_max, 4) + (this_ok ? "" : "(FAIL)");
    }
    return {ok, detail.substr(1)};
}

// --- 9 ---------------------------------------------------------------------
inline constexpr double kQuadratureRelTol = 1e-9;

inline Outcome quadrature_oracle(const Context& ctx) {
    const auto a = walks::row_sums(std::nullopt, asymptotics::kSpectralMaxN);
    double worst = 0;
    for (std::size_t n = 0; n <= asymptotics::kSpectralMaxN; ++n) {
        const HighFloat exact(a[n]);
        const HighFloat q = asymptotics::spectral_an(n, ctx.digits);
        worst = std::max(worst, static_cast<double>(abs(q - exact) / exact));
    }
    return {worst <= kQuadratureRelTol, "max relative error n<=60: " + fmt(worst, 3)};
}

// --- 10 --------------------------------------------------------------------
inline constexpr double kWallRatioTol = 0.02;

inline Outcome wall_summands(const Context& ctx) {
    bool counts_ok = true;
    std::string detail;
    for (unsigned ell = 2; ell <= 9; ++ell) {
        walks::RowStream stream;
        sl2::for_each_tensor_power(1, 200, ell, [&](std::size_t n, const sl2::TensorPower& p) {
            while (stream.n() < n) stream.advance();
            if (sl2::wall_summands(p.tilting) != stream.classical_residue_sum(ell - 1, ell) && counts_ok) {
                counts_ok = false;
                detail += " count mismatch ell=" + std::to_string(ell) + "@n=" + std::to_string(n);
            }
        });
    }
    bool limits_ok = true;
    const std::size_t n_even = SequenceCache::kAsymptoticN;
    for (unsigned ell = 2; ell <= 9; ++ell) {
        const auto& seq = ctx.cache->get(ell);
        std::vector<std::size_t> ns{n_even};
        if (ell % 2 == 0) ns.push_back(n_even - 1);
        for (auto n : ns) {
            const double ratio = to_double(Rational(seq.walls[n], seq.b[n]));
            const double limit = to_double(asymptotics::w_ratio_limit(ell, asymptotics::parity_of(n)));
            const bool ok = std::abs(ratio - limit) <= kWallRatioTol;
            limits_ok = limits_ok && ok;
            detail += " ell=" + std::to_string(ell) + "@" + std::to_string(n) + ":" + fmt(ratio, 5) + "/" +
                      fmt(limit, 5) + (ok ? "" : "(FAIL)");
        }
    }
    return {counts_ok && limits_ok, (counts_ok ? "wall counts agree n<=200;" : "") + detail};
}

// --- 11 --------------------------------------------------------------------
inline Outcome general_bounds(const Context&) {
    std::string bad;
    for (sl2::Weight v : {2u, 3u, 5u})
        for (unsigned ell : {3u, 4u, 5u}) {
            const auto rep = sl2::bounds_check(v, ell, 30);
            if (!rep.all_hold()) bad += " T(" + std::to_string(v) + ")@ell=" + std::to_string(ell);
        }
    return {bad.empty(), bad.empty() ? "weyl/2 <= summands <= weyl for V=T(2),T(3),T(5), ell=3..5, n<=30"
                                     : "violated:" + bad};
}

// --- 12 --------------------------------------------------------------------
inline Outcome rank2_constants(const Context&) {
    struct Row {
        const char* name;
        unsigned improved;
        unsigned plain;
    };
    const Row rows[] = {{"A2", 12, 27}, {"B2", 32, 256}, {"C2", 32, 256}, {"G2", 348, 46656}};
    std::string detail;
    bool ok = true;
    for (const auto& r : rows) {
        const auto s = roots::stats(r.name);
        const auto improved = roots::rank2_improved_bound(s);
        const auto plain = roots::projective_delta_bound(s, s.coxeter_number);
        const bool row_ok = improved == r.improved && plain == r.plain;
        ok = ok && row_ok;
        detail += std::string(" ") + r.name + ":" + std::to_string(improved) + "/" + plain.str();
    }
    return {ok, detail.substr(1)};
}

// --- 13 --------------------------------------------------------------------
inline Outcome mixed_factor(const Context&) {
    constexpr std::size_t order = 64;
    std::string bad;
    for (unsigned p = 2; p <= 7; ++p)
        for (unsigned ell = 2; ell <= 7; ++ell) {
            if (series::mixed_factor_limit(p, ell) != Rational(ell - 1, p - 1))
                bad += " limit(" + std::to_string(p) + "," + std::to_string(ell) + ")";
            const auto f = series::mixed_factor_series(p, ell, order);
            const auto den = series::RationalSeries::from_polynomial(
                series::detail::mixed_denominator(p, ell), order);
            const auto num = series::RationalSeries::from_polynomial(
                series::detail::mixed_numerator(p, ell), order);
            if (f * den != num) bad += " series(" + std::to_string(p) + "," + std::to_string(ell) + ")";
        }
    return {bad.empty(), bad.empty() ? "limits (ell-1)/(p-1) and cross-multiplication to w^64, p,ell=2..7"
                                     : "failed:" + bad};
}

// --- 14 --------------------------------------------------------------------
inline constexpr std::size_t kThetaLo = 50;

inline Outcome theta_envelope(const Context& ctx) {
    const auto a1 = roots::stats("A1");
    bool ok = true;
    std::string detail;
    for (unsigned ell = 2; ell <= 9; ++ell) {
        const auto env = roots::theta_envelope(a1, sl2::dim_tilting(1, ell), sl2::char_zero_rate_constant(2), ell);
        const auto& seq = ctx.cache->get(ell);
        double lo = 1e300, hi = 0;
        std::size_t lo_n = 0, outside = 0;
        for (std::size_t n = kThetaLo; n <= SequenceCache::kAsymptoticN; ++n) {
            const double v = div_pow2(seq.b[n], n) * std::sqrt(static_cast<double>(n));
            if (v < lo) lo = v, lo_n = n;
            hi = std::max(hi, v);
            if (v < env.lower_const || v > env.upper_const) ++outside;
        }
        ok = ok && outside == 0;
        detail += " ell=" + std::to_string(ell) + ":[" + fmt(lo / env.upper_const, 5) + "," +
                  fmt(hi / env.upper_const, 5) + "]" +
                  (outside ? "(FAIL " + std::to_string(outside) + " n outside, min at n=" + std::to_string(lo_n) + ")"
                           : "");
    }
    return {ok, "normalized b_n / upper_const vs [1/2, 1]:" + detail};
}

struct CheckSpec {
    int id;
    const char* name;
    double budget;
    Outcome (*run)(const Context&);
};

inline const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> specs{
        {1, "golden tables", 1.0, golden_tables},
        {2, "example sequences", 1.0, sequence_fixtures},
        {3, "generating-function oracle", 10.0, generating_functions},
        {4, "ballot/recursion equivalence", 5.0, ballot_equivalence},
        {5, "walk/tilting cross-oracle", 60.0, cross_oracle},
        {6, "worked example T(3)^2 at ell=3", 0.0, worked_example},
        {7, "dimension conservation", 0.0, dimension_conservation},
        {8, "sharp A1 asymptotics", 120.0, sharp_asymptotics},
        {9, "quadrature oracle", 30.0, quadrature_oracle},
        {10, "wall summands", 0.0, wall_summands},
        {11, "general tilting bounds", 0.0, general_bounds},
        {12, "rank-2 constants", 0.0, rank2_constants},
        {13, "mixed factor", 0.0, mixed_factor},
        {14, "Theta-envelope (A1)", 0.0, theta_envelope},
    };
    return specs;
}

}  // namespace detail

inline CheckResult run_check(int id, const Context& ctx) {
    const auto& specs = detail::registry();
    auto it = std::find_if(specs.begin(), specs.end(), [id](const auto& s) { return s.id == id; });
    if (it == specs.end()) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    CheckResult r{id, it->name, false, {}, 0, it->budget};
    SequenceCache local;
    Context c = ctx;
    if (!c.cache) c.cache = &local;
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto out = it->run(c);
        r.pass = out.pass;
        r.detail = out.detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
        r.pass = false;
        r.detail += " [runtime " + detail::fmt(r.seconds, 3) + " s exceeds " + detail::fmt(r.budget_seconds) + " s]";
    }
    return r;
}

/// Results are ordered by criterion id regardless of completion order.
inline std::vector<CheckResult> run_all(const Context& ctx, bool parallel = false) {
    SequenceCache cache;
    Context c = ctx;
    if (!c.cache) c.cache = &cache;
    const auto ids = criteria_for(c.profile);
    std::vector<CheckResult> out;
    if (!parallel) {
        for (int id : ids) out.push_back(run_check(id, c));
        return out;
    }
    std::vector<std::future<CheckResult>> jobs;
    for (int id : ids) jobs.push_back(std::async(std::launch::async, [id, &c] { return run_check(id, c); }));
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

inline std::string format(const CheckResult& r) {
    char head[64];
    std::snprintf(head, sizeof head, "[%s] AC%02d ", r.pass ? "PASS" : "FAIL", r.id);
    return head + r.name + " : " + r.detail + " (" + detail::fmt(r.seconds, 3) + " s)";
}

}  // namespace tiltwalk::verify
