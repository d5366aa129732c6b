#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mbf/cohomology.hpp"
#include "mbf/obstruction.hpp"
#include "mbf/ppoly.hpp"
#include "mbf/rational.hpp"
#include "mbf/reference_table.hpp"
#include "mbf/weights.hpp"

namespace mbf {

// All numerals serialize as decimal strings: table entries already pass
// 10^11 at p = 13 and larger parameters exceed 64-bit consumers.
using Json = nlohmann::ordered_json;

inline Json to_json(const BigInt& v) { return v.str(); }
inline Json to_json(const Rational& v) { return v.str(); }

inline Json to_json(const PPoly& f) {
    Json arr = Json::array();
    for (const auto& c : f.coeff_strings()) arr.push_back(c);
    return arr;
}

template <class R>
Json series_to_json(const TruncSeries<R>& s) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < s.order(); ++i) arr.push_back(to_json(s.coeff(i)));
    return arr;
}

inline Json to_json(const SplittingType& st) {
    Json entries = Json::array();
    for (const auto& [twist, mult] : st.entries)
        entries.push_back(Json{{"twist", std::to_string(twist)}, {"multiplicity", mult.str()}});
    return Json{{"lowest", std::to_string(st.lowest)},
                {"highest", std::to_string(st.highest)},
                {"rank", st.rank().str()},
                {"entries", entries}};
}

inline Json to_json(const HodgeVector& hv) {
    Json values = Json::array();
    for (const auto& v : hv.values) values.push_back(v.str());
    return Json{{"n", std::to_string(hv.n)}, {"p", std::to_string(hv.p)}, {"values", values}};
}

inline Json to_json(const InvariantReport& rep) {
    Json out{{"dim_y", std::to_string(rep.dim_y)},
             {"g", std::to_string(rep.g)},
             {"m", std::to_string(rep.m)},
             {"omega_trivial", rep.omega_trivial},
             {"kodaira", kodaira_string(rep.kodaira, rep.fp.n)},
             {"h1", rep.h1.str()}};
    out["h2"] = rep.h2 ? Json(rep.h2->str()) : Json(nullptr);
    out["b1"] = rep.b1.str();
    out["b2"] = rep.b2.str();
    out["b_middle"] = rep.b_middle.str();
    return out;
}

inline Json to_json(const Verdict& v) {
    return Json{{"status", v.status == VerdictStatus::Obstructed ? "obstructed" : "inconclusive"},
                {"lambda", v.lambda_value.str()},
                {"chi", v.chi_value.str()},
                {"s_used", std::to_string(v.s_used)},
                {"conditions",
                 Json{{"prime", v.prime_ok}, {"dim_ok", v.dim_ok},
                      {"lambda_negative", v.lambda_negative}}}};
}

inline Json to_json(const WeightSet& w) {
    Json residues = Json::array();
    for (long long r : w.residues) residues.push_back(std::to_string(r));
    return Json{{"modulus", std::to_string(w.modulus)},
                {"w0", std::to_string(w.generator_weight)},
                {"residues", residues}};
}

inline Json to_json(const SupersingularWitness& w) {
    Json out{{"p", std::to_string(w.p)}, {"has_root_in_fp", w.has_root_in_fp}};
    out["lambda_in_base_field"] =
        w.lambda_in_base_field ? Json(std::to_string(*w.lambda_in_base_field)) : Json(nullptr);
    return out;
}

inline Json to_json(const TableReproduction& tr) {
    Json cells = Json::array();
    for (const auto& c : tr.cells)
        cells.push_back(Json{{"p", std::to_string(c.p)},
                             {"i", std::to_string(c.i)},
                             {"expected", c.expected.str()},
                             {"computed", c.computed.str()},
                             {"match", c.match}});
    return Json{{"all_match", tr.all_match}, {"cells", cells}};
}

inline Json to_json(const Lambda3Comparison& c) {
    return Json{{"d", std::to_string(c.d)},
                {"computed", to_json(c.computed)},
                {"published", to_json(c.published)},
                {"quadratic_match", c.quadratic_match},
                {"linear_match", c.linear_match},
                {"constant_match", c.constant_match}};
}

} // namespace mbf
