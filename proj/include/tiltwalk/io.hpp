#pragma once

// CSV / JSON encodings. Integers that may exceed 64 bits are written as
// decimal strings in JSON; CSV is unquoted with LF line endings.

#include "tiltwalk/numeric.hpp"
#include "tiltwalk/series.hpp"
#include "tiltwalk/sl2_tilting.hpp"
#include "tiltwalk/walks.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tiltwalk::io {

using nlohmann::json;

/// Square CSV: every row is zero-padded to order + 1 columns.
inline std::string table_to_csv(const walks::CountTable& t) {
    std::string out;
    const auto width = t.order() + 1;
    for (std::size_t n = 0; n <= t.order(); ++n) {
        const auto row = t.row(n);
        for (std::size_t m = 0; m < width; ++m) {
            if (m) out += ',';
            out += m < row.size() ? row[m].str() : "0";
        }
        out += '\n';
    }
    return out;
}

/// Parses an integer CSV matrix (no header).
inline std::vector<std::vector<BigInt>> parse_csv_matrix(const std::string& text) {
    std::vector<std::vector<BigInt>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<BigInt> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(parse_bigint(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Triangular rows of decimal strings.
inline json table_to_json(const walks::CountTable& t) {
    json rows = json::array();
    for (const auto& row : t.rows()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

inline walks::CountTable table_from_json(const json& j, walks::TableKind kind) {
    std::vector<std::vector<BigInt>> rows;
    for (const auto& r : j) {
        std::vector<BigInt> row;
        for (const auto& v : r) row.push_back(parse_bigint(v.get<std::string>()));
        rows.push_back(std::move(row));
    }
    return walks::CountTable(kind, std::move(rows));
}

inline json sequence_to_json(const walks::GrowthSequence& s) {
    json values = json::array();
    for (const auto& v : s.values) values.push_back(v.str());
    return values;
}

inline walks::GrowthSequence sequence_from_json(const json& j, std::string label = {}) {
    walks::GrowthSequence s{{}, std::move(label)};
    for (const auto& v : j) s.values.push_back(parse_bigint(v.get<std::string>()));
    return s;
}

inline json series_to_json(const series::RationalSeries& s) {
    json out = json::array();
    for (const auto& c : s.coeffs()) out.push_back(to_fraction_string(c));
    return out;
}

inline series::RationalSeries series_from_json(const json& j) {
    if (j.empty()) throw std::invalid_argument("series must have at least one coefficient");
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(parse_rational(v.get<std::string>()));
    const auto order = c.size() - 1;
    return series::RationalSeries(std::move(c), order);
}

template <class Map>
json multiplicity_map_to_json(const Map& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = v.str();
    return out;
}

inline sl2::DeltaMultiset delta_multiset_from_json(const json& j) {
    sl2::DeltaMultiset d;
    for (const auto& [k, v] : j.items()) d.add(std::stoull(k), parse_bigint(v.get<std::string>()));
    return d;
}

inline sl2::TiltingDecomposition tilting_from_json(const json& j, unsigned ell) {
    sl2::TiltingDecomposition td(ell);
    for (const auto& [k, v] : j.items()) td.add(std::stoull(k), parse_bigint(v.get<std::string>()));
    return td;
}

/// {"summands": {...}, "weyl": {...}, "counts": {...}}
inline json tensor_power_to_json(const sl2::TensorPower& p) {
    json counts = json::object();
    counts["summands"] = sl2::count_summands(p.tilting).str();
    counts["weyl"] = sl2::count_weyl(p.weyl).str();
    counts["wall"] = sl2::wall_summands(p.tilting).str();
    counts["dimension"] = sl2::total_dimension(p.tilting).str();
    return json{{"summands", multiplicity_map_to_json(p.tilting.entries())},
                {"weyl", multiplicity_map_to_json(p.weyl.entries())},
                {"counts", std::move(counts)}};
}

}  // namespace tiltwalk::io
