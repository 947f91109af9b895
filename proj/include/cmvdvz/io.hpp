#ifndef CMVDVZ_IO_HPP
#define CMVDVZ_IO_HPP

// JSON and CSV exchange formats.
//
//   sequence input   {"alphas": [...]} or
//                    {"family": "free"|"bernstein_szego"|"mass_point"|
//                               "second_kind", "params": {...}, "n": int}
//   tridiagonal dump {"n": N, "diag": [...], "offdiag": [...]}
//   banded dump      {"n": N, "bands": {"<offset>": [...]}}
//
// CSV floats are printed with 17 significant digits so a reparse reproduces
// the exact double.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "banded.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "measure.hpp"
#include "verblunsky.hpp"

namespace cmvdvz {

using json = nlohmann::json;

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline json tridiagonal_to_json(const SymTridiagonal& m) {
    return json{{"n", m.size()}, {"diag", m.diag()}, {"offdiag", m.off()}};
}

inline SymTridiagonal tridiagonal_from_json(const json& j) {
    if (!j.contains("diag") || !j.contains("offdiag"))
        throw DomainError("matrix JSON must contain 'diag' and 'offdiag'");
    std::vector<double> diag = j.at("diag").get<std::vector<double>>();
    std::vector<double> off = j.at("offdiag").get<std::vector<double>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != diag.size())
        throw DomainError("matrix JSON: 'n' does not match diagonal length");
    if (off.size() + 1 != diag.size())
        throw DomainError("matrix JSON: offdiagonal must have n-1 entries");
    const std::size_t n = diag.size();
    return SymTridiagonal(std::move(diag), std::move(off), n);
}

inline json banded_to_json(const BandedMatrix& m) {
    json bands = json::object();
    for (int off = m.lower(); off <= m.upper(); ++off) {
        std::vector<double> band;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const long j = static_cast<long>(i) + off;
            if (j < 0 || j >= static_cast<long>(m.size())) continue;
            band.push_back(m.at(i, static_cast<std::size_t>(j)));
        }
        bands[std::to_string(off)] = band;
    }
    return json{{"n", m.size()}, {"bands", bands}};
}

inline VerblunskySequence sequence_from_json(const json& j,
                                             std::size_t default_n = 32) {
    if (j.contains("alphas"))
        return VerblunskySequence(j.at("alphas").get<std::vector<double>>());
    if (!j.contains("family"))
        throw DomainError("sequence JSON needs 'alphas' or 'family'");
    const std::string family = j.at("family").get<std::string>();
    const std::size_t n = j.value("n", default_n);
    const json params = j.value("params", json::object());
    if (family == "free") return free_sequence(n);
    if (family == "bernstein_szego")
        return bernstein_szego_sequence(params.at("alpha").get<double>(), n);
    if (family == "mass_point" || family == "lebesgue_mass")
        return mass_point_sequence(params.at("m").get<double>(), n);
    if (family == "second_kind" || family == "second_kind_mass")
        return second_kind_sequence(params.at("m").get<double>(), n);
    throw DomainError("unknown family in sequence JSON: " + family);
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw DomainError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

// Coefficient table rows (n, j, c_j) for chi_0..chi_n.
inline std::string laurent_table_csv(const std::vector<LaurentPoly>& chis) {
    std::string out = "n,j,c\n";
    for (std::size_t n = 0; n < chis.size(); ++n)
        for (const auto& [j, c] : chis[n].coeffs())
            out += std::to_string(n) + "," + std::to_string(j) + "," +
                   format_double(c) + "\n";
    return out;
}

inline json line_measure_metadata(const LineMeasure& nu, double mass) {
    json segs = json::array();
    for (const auto& s : nu.segments())
        segs.push_back({{"lo", s.lo},
                        {"hi", s.hi},
                        {"edge_exp_lo", s.edge_exp_lo},
                        {"edge_exp_hi", s.edge_exp_hi}});
    json atoms = json::array();
    for (const auto& a : nu.atoms()) atoms.push_back({{"x", a.x}, {"mass", a.mass}});
    return json{{"segments", segs}, {"atoms", atoms}, {"total_mass", mass}};
}

} // namespace cmvdvz

#endif
