#pragma once

// tiltwalk command-line front end. run_cli() is the whole program; main()
// only forwards argv and the standard streams, so tests drive it in-process.
//
// Exit codes: 0 success, 1 runtime or verification failure, 2 usage error.

#include "tiltwalk/tiltwalk.hpp"
#include "tiltwalk/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef TILTWALK_FIXTURE_DIR
#define TILTWALK_FIXTURE_DIR "tests/fixtures"
#endif

namespace tiltwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::string subcommand;
    std::optional<unsigned> ell;
    std::size_t order = 0;        // --n / --order / --n-max
    std::uint64_t k = 1;
    std::string format = "csv";
    std::string output;           // empty: stdout
    unsigned digits = asymptotics::kDefaultDigits;
    std::string profile = "quick";

    bool classical = false;
    bool sums_only = false;
    bool show_decomp = false;
    std::string op = "gf_b";
    unsigned p = 2;
    std::string report;
    std::string type = "A1";
    std::optional<std::string> dim;
    std::optional<double> char_zero_const;
    std::string fixtures = TILTWALK_FIXTURE_DIR;
    bool parallel = false;
};

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline unsigned require_ell(const RunConfig& c, unsigned min = 2) {
    if (!c.ell) throw usage_error("--ell is required");
    if (*c.ell < min) throw usage_error("--ell must be >= " + std::to_string(min));
    return *c.ell;
}

}  // namespace detail

inline int cmd_walk(const RunConfig& c, std::ostream& out) {
    if (c.format != "csv" && c.format != "json") throw usage_error("--format must be csv or json");
    std::optional<unsigned> ell;
    if (!c.classical) ell = detail::require_ell(c);
    if (c.sums_only) {
        const auto seq = walks::row_sums(ell, c.order);
        if (c.format == "json") {
            out << io::sequence_to_json(seq).dump() << '\n';
        } else {
            for (const auto& v : seq.values) out << v.str() << '\n';
        }
        return kExitOk;
    }
    const auto table = ell ? walks::modular_table(*ell, c.order) : walks::classical_table(c.order);
    if (c.format == "json") out << io::table_to_json(table).dump() << '\n';
    else out << io::table_to_csv(table);
    return kExitOk;
}

inline int cmd_series(const RunConfig& c, std::ostream& out) {
    series::RationalSeries s(0);
    if (c.op == "gf_b") {
        const auto ell = detail::require_ell(c, 3);
        const auto cs = walks::residue_sequence(ell - 1, ell, c.order);
        s = series::gf_b(ell, c.order, series::RationalSeries::from_integers(cs.values, c.order));
    } else if (c.op == "gf_a") {
        s = series::gf_a_half_line(c.order);
    } else if (c.op == "mixed") {
        const auto ell = detail::require_ell(c);
        if (c.p < 2) throw usage_error("--p must be >= 2");
        s = series::mixed_factor_series(c.p, ell, c.order);
    } else {
        throw usage_error("unknown --op '" + c.op + "' (expected gf_b, gf_a or mixed)");
    }
    out << io::series_to_json(s).dump() << '\n';
    return kExitOk;
}

inline int cmd_asympt(const RunConfig& c, std::ostream& out) {
    const auto ell = detail::require_ell(c);
    if (c.order < 1) throw usage_error("--n-max must be >= 1");
    const auto seqs = walks::streamed_sequences(ell, c.order);
    const auto approx = asymptotics::b_approximant(ell);
    const std::size_t lo = std::max<std::size_t>(1, c.order / 10);
    const auto env = asymptotics::error_envelope(seqs.b, approx, lo, c.order);

    nlohmann::json rows = nlohmann::json::array();
    out << "n,ratio,n_times_error\n";
    for (std::size_t n = 1; n <= c.order; ++n) {
        const double norm = asymptotics::normalized_exact(seqs.b[n], n, approx);
        const double ratio = norm / approx.prefactor(n);
        const double nte = static_cast<double>(n) * std::abs(norm - approx.prefactor(n));
        out << n << ',' << detail::fmt(ratio) << ',' << detail::fmt(nte) << '\n';
        rows.push_back({{"n", n}, {"ratio", ratio}, {"n_times_error", nte}});
    }
    if (!c.report.empty()) {
        nlohmann::json rep{{"ell", ell},
                           {"n_max", c.order},
                           {"label", approx.label},
                           {"envelope",
                            {{"window", {env.n_lo, env.n_hi}},
                             {"constant", env.constant},
                             {"lower_half_max", env.lower_half_max},
                             {"upper_half_max", env.upper_half_max},
                             {"pass", env.pass}}},
                           {"rows", std::move(rows)}};
        std::ofstream f(c.report);
        if (!(f << rep.dump(2) << '\n')) throw std::runtime_error("cannot write report " + c.report);
    }
    return kExitOk;
}

inline int cmd_tilt(const RunConfig& c, std::ostream& out) {
    if (c.format != "csv" && c.format != "json") throw usage_error("--format must be csv or json");
    const auto ell = detail::require_ell(c);
    if (c.show_decomp) {
        const auto p = sl2::tensor_power(c.k, c.order, ell);
        if (c.format == "json") {
            auto j = io::tensor_power_to_json(p);
            j["ell"] = ell;
            j["k"] = c.k;
            j["n"] = c.order;
            out << j.dump() << '\n';
            return kExitOk;
        }
        out << "weight,tilting,weyl\n";
        for (const auto& [w, m] : p.weyl)
            out << w << ',' << p.tilting.multiplicity(w).str() << ',' << m.str() << '\n';
        return kExitOk;
    }
    nlohmann::json rows = nlohmann::json::array();
    if (c.format == "csv") out << "n,summands,weyl,wall,dimension\n";
    sl2::for_each_tensor_power(c.k, c.order, ell, [&](std::size_t n, const sl2::TensorPower& p) {
        const auto s = sl2::count_summands(p.tilting).str();
        const auto w = sl2::count_weyl(p.weyl).str();
        const auto wall = sl2::wall_summands(p.tilting).str();
        const auto dim = sl2::total_dimension(p.tilting).str();
        if (c.format == "csv") out << n << ',' << s << ',' << w << ',' << wall << ',' << dim << '\n';
        else rows.push_back({{"n", n}, {"summands", s}, {"weyl", w}, {"wall", wall}, {"dimension", dim}});
    });
    if (c.format == "json") out << nlohmann::json{{"ell", ell}, {"k", c.k}, {"counts", rows}}.dump() << '\n';
    return kExitOk;
}

inline int cmd_bounds(const RunConfig& c, std::ostream& out) {
    const auto ell = detail::require_ell(c);
    roots::RootSystemStats s = [&] {
        try {
            return roots::stats(c.type);
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
    }();
    BigInt dim = 2;
    if (c.dim) dim = parse_bigint(*c.dim);
    double c0 = 1.0;
    std::string c0_source = "unit (constants relative to the characteristic-zero constant)";
    if (c.char_zero_const) {
        c0 = *c.char_zero_const;
        c0_source = "user";
    } else if (s.type == roots::CartanType::A && s.rank == 1) {
        // V = T(k-1) with k = dim for a simple A1 module.
        c0 = sl2::char_zero_rate_constant(static_cast<std::uint64_t>(dim));
        c0_source = "A1 built-in sqrt(6/((k^2-1)pi)), k=dim";
    }
    const auto env = roots::theta_envelope(s, dim, c0, ell);
    nlohmann::json j{{"type", s.name()},
                     {"ell", ell},
                     {"rank", s.rank},
                     {"num_positive_roots", s.num_positive_roots},
                     {"coxeter_number", s.coxeter_number},
                     {"steinberg_dim", roots::steinberg_dim(s, ell).str()},
                     {"projective_delta_bound", roots::projective_delta_bound(s, ell).str()},
                     {"envelope",
                      {{"tau", to_fraction_string(env.tau)},
                       {"beta", env.beta.str()},
                       {"lower_const", env.lower_const},
                       {"upper_const", env.upper_const},
                       {"divisor", env.divisor.str()},
                       {"char_zero_const_source", c0_source}}}};
    if (roots::is_rank2(s)) {
        j["rank2_improved_bound"] = roots::rank2_improved_bound(s);
        j["rank2_improved_applies"] = roots::rank2_admissible(s, ell);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

inline int cmd_plotdata(const RunConfig& c, std::ostream& out) {
    const auto ell = detail::require_ell(c);
    out << "n,ratio,limit\n";
    if (c.order == 0) return kExitOk;
    const auto b = walks::row_sums(ell, c.order);
    const auto a_approx = asymptotics::a_approximant();
    for (std::size_t n = 1; n <= c.order; ++n) {
        const double ratio = asymptotics::normalized_exact(b[n], n, a_approx) / asymptotics::kSqrtTwoOverPi;
        out << n << ',' << detail::fmt(ratio) << ',' << detail::fmt(asymptotics::b_prefactor(ell, n)) << '\n';
    }
    return kExitOk;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out) {
    verify::Context ctx;
    if (c.profile == "quick") ctx.profile = verify::Profile::quick;
    else if (c.profile == "full") ctx.profile = verify::Profile::full;
    else throw usage_error("--profile must be quick or full");
    ctx.fixture_dir = c.fixtures;
    ctx.digits = c.digits;
    const auto results = verify::run_all(ctx, c.parallel);
    bool ok = true;
    for (const auto& r : results) {
        out << verify::format(r) << '\n';
        ok = ok && r.pass;
    }
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.pass;
    out << passed << "/" << results.size() << " checks passed\n";
    return ok ? kExitOk : kExitFailure;
}

inline int dispatch(const RunConfig& c, std::ostream& out) {
    if (c.subcommand == "walk") return cmd_walk(c, out);
    if (c.subcommand == "series") return cmd_series(c, out);
    if (c.subcommand == "asympt") return cmd_asympt(c, out);
    if (c.subcommand == "tilt") return cmd_tilt(c, out);
    if (c.subcommand == "bounds") return cmd_bounds(c, out);
    if (c.subcommand == "plotdata") return cmd_plotdata(c, out);
    if (c.subcommand == "verify") return cmd_verify(c, out);
    throw usage_error("a subcommand is required");
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"tiltwalk: exact growth sequences of quantum SL2 tilting modules", "tiltwalk"};
    app.set_config("--config", "", "Read options from a TOML/INI file (command-line flags win)");
    app.require_subcommand(1);

    auto add_ell = [&](CLI::App* sub) { sub->add_option("--ell", c.ell, "Quantum characteristic ell"); };
    auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", c.output, "Write to file instead of stdout"); };

    auto* walk = app.add_subcommand("walk", "Emit the a_{n,m} or b_{n,m}(ell) table");
    add_ell(walk);
    walk->add_option("--n", c.order, "Truncation order N")->required();
    walk->add_flag("--classical", c.classical, "Classical half-line table a_{n,m}");
    walk->add_flag("--sums-only", c.sums_only, "Row sums only (streamed)");
    walk->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_output(walk);

    auto* ser = app.add_subcommand("series", "Emit a generating function as JSON fractions");
    ser->add_option("--op", c.op, "gf_b, gf_a or mixed");
    add_ell(ser);
    ser->add_option("--order", c.order, "Truncation order")->default_val(256);
    ser->add_option("--p", c.p, "Characteristic p for --op mixed");
    add_output(ser);

    auto* asy = app.add_subcommand("asympt", "Ratio table b_n / b_n^approx and error envelope");
    add_ell(asy);
    asy->add_option("--n-max", c.order, "Largest n")->required();
    asy->add_option("--report", c.report, "Write a JSON report to this path");
    add_output(asy);

    auto* tilt = app.add_subcommand("tilt", "Tilting decomposition of T(k)^{(x)n}");
    add_ell(tilt);
    tilt->add_option("--k", c.k, "Highest weight of the tensored module")->default_val(1);
    tilt->add_option("--n", c.order, "Tensor power")->required();
    tilt->add_flag("--show-decomp", c.show_decomp, "Print the decomposition of the n-th power");
    tilt->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_output(tilt);

    auto* bnd = app.add_subcommand("bounds", "Root-system constants and Theta-envelope");
    bnd->add_option("--type", c.type, "Root system, e.g. A2, G2")->default_val("A1");
    add_ell(bnd);
    bnd->add_option("--dim", c.dim, "Dimension of the tilting module");
    bnd->add_option("--c0", c.char_zero_const, "Characteristic-zero leading constant");
    add_output(bnd);

    auto* plot = app.add_subcommand("plotdata", "CSV of b_n / a_n^approx with the limiting prefactor");
    add_ell(plot);
    plot->add_option("--n", c.order, "Largest n")->required();
    add_output(plot);

    auto* ver = app.add_subcommand("verify", "Run the acceptance checks");
    ver->add_option("--profile", c.profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    ver->add_option("--fixtures", c.fixtures, "Directory holding the golden fixtures");
    ver->add_option("--digits", c.digits, "Quadrature accuracy in decimal digits")->envname("TILTWALK_PRECISION");
    ver->add_flag("--parallel", c.parallel, "Run independent checks on worker threads");
    add_output(ver);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();

    try {
        if (c.output.empty()) return dispatch(c, out);
        std::ostringstream buffer;
        const int code = dispatch(c, buffer);
        std::ofstream f(c.output, std::ios::binary);
        if (!(f << buffer.str())) {
            err << "error: cannot write " << c.output << '\n';
            return kExitFailure;
        }
        return code;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace tiltwalk::cli
