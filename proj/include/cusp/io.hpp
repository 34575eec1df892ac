#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "complex.hpp"
#include "curve.hpp"
#include "errors.hpp"
#include "obstruction.hpp"
#include "rational.hpp"
#include "semigroup.hpp"

namespace cusp {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Rationals: {"num": p, "den": q} in JSON, "p/q" (or "p") in text.
// ---------------------------------------------------------------------------

inline json rational_to_json(const Rational& r) {
  return json{{"num", r.numerator()}, {"den", r.denominator()}};
}

inline Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw Error("rational: expected an object with num and den");
  return Rational(j.at("num").get<long long>(), j.at("den").get<long long>());
}

// ---------------------------------------------------------------------------
// Complex files: generators as [grw2, grz2] pairs (doubled gradings),
// differential as a list of {from, to, monomials: [[a, b], ...]} entries,
// optional actions as a list of matrices in the same entry schema.
// Round-trips bit-exactly.
// ---------------------------------------------------------------------------

namespace detail {

inline json entries_to_json(const EntryMap& m) {
  json out = json::array();
  for (const auto& [k, sum] : m) {
    json mons = json::array();
    for (const auto& mon : sum) mons.push_back(json::array({mon.a, mon.b}));
    out.push_back(json{{"from", k.first}, {"to", k.second}, {"monomials", mons}});
  }
  return out;
}

inline EntryMap entries_from_json(const json& j, int n) {
  if (!j.is_array()) throw Error("complex file: entry list must be an array");
  EntryMap out;
  for (const auto& e : j) {
    int from = e.at("from").get<int>();
    int to = e.at("to").get<int>();
    if (from < 0 || from >= n || to < 0 || to >= n)
      throw Error("complex file: entry index out of range");
    const json& mons = e.at("monomials");
    if (!mons.is_array()) throw Error("complex file: monomials must be an array");
    for (const auto& mon : mons) {
      if (!mon.is_array() || mon.size() != 2)
        throw Error("complex file: each monomial must be an [a, b] pair");
      add_entry(out, from, to, mon[0].get<long long>(), mon[1].get<long long>());
    }
  }
  return out;
}

}  // namespace detail

inline json complex_to_json(const BigradedComplex& c,
                            const std::vector<Action>& actions = {}) {
  json out;
  json gens = json::array();
  for (const auto& g : c.gradings) gens.push_back(json::array({g[0], g[1]}));
  out["generators"] = std::move(gens);
  if (!c.labels.empty()) out["labels"] = c.labels;
  out["differential"] = detail::entries_to_json(c.diff);
  if (!actions.empty()) {
    json acts = json::array();
    for (const auto& a : actions) acts.push_back(detail::entries_to_json(a));
    out["actions"] = std::move(acts);
  }
  return out;
}

inline std::pair<BigradedComplex, std::vector<Action>> complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators"))
    throw Error("complex file: expected an object with a generators array");
  BigradedComplex c;
  for (const auto& g : j.at("generators")) {
    if (!g.is_array() || g.size() != 2)
      throw Error("complex file: each generator must be a [grw2, grz2] pair");
    c.gradings.push_back({g[0].get<long long>(), g[1].get<long long>()});
  }
  int n = c.size();
  if (j.contains("labels")) {
    c.labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(c.labels.size()) != n)
      throw Error("complex file: labels must match the generator count");
  }
  if (j.contains("differential"))
    c.diff = detail::entries_from_json(j.at("differential"), n);
  std::vector<Action> actions;
  if (j.contains("actions"))
    for (const auto& a : j.at("actions"))
      actions.push_back(detail::entries_from_json(a, n));
  return {std::move(c), std::move(actions)};
}

// ---------------------------------------------------------------------------
// Curve configuration files:
//   {"degree": d, "genus": g,
//    "cusps": [{"type": "torus_knot", "p": ..., "q": ...} |
//              {"type": "gaps", "gaps": [...]}],
//    "positive_tn": {"n": count, ...}, "negative_tn": {...},
//    "options": {"allow_genus_slack": bool}}
// ---------------------------------------------------------------------------

namespace detail {

inline std::map<long long, long long> link_map_from_json(const json& j,
                                                         const char* field) {
  std::map<long long, long long> out;
  if (!j.is_object())
    throw Error(std::string("config file: ") + field + " must be an object mapping n to a count");
  for (const auto& [key, value] : j.items()) {
    long long n = 0;
    try {
      n = std::stoll(key);
    } catch (const std::exception&) {
      throw Error(std::string("config file: ") + field + " key '" + key +
                  "' is not an integer");
    }
    long long count = value.get<long long>();
    if (count != 0) out[n] += count;
  }
  return out;
}

inline json link_map_to_json(const std::map<long long, long long>& m) {
  json out = json::object();
  for (const auto& [n, c] : m) out[std::to_string(n)] = c;
  return out;
}

}  // namespace detail

inline CurveConfig config_from_json(const json& j) {
  if (!j.is_object()) throw Error("config file: expected a JSON object");
  CurveConfig c;
  if (!j.contains("degree")) throw Error("config file: degree is required");
  c.degree = j.at("degree").get<long long>();
  c.genus = j.value("genus", 0LL);
  if (j.contains("cusps")) {
    if (!j.at("cusps").is_array()) throw Error("config file: cusps must be an array");
    for (const auto& cusp : j.at("cusps")) {
      std::string type = cusp.value("type", "");
      if (type == "torus_knot") {
        c.cusps.push_back(
            torus_knot_semigroup(cusp.at("p").get<long long>(), cusp.at("q").get<long long>()));
      } else if (type == "gaps") {
        c.cusps.push_back(
            semigroup_from_gaps(cusp.at("gaps").get<std::vector<long long>>()));
      } else {
        throw Error("config file: cusp type must be torus_knot or gaps");
      }
    }
  }
  if (j.contains("positive_tn"))
    c.positive_links = detail::link_map_from_json(j.at("positive_tn"), "positive_tn");
  if (j.contains("negative_tn"))
    c.negative_links = detail::link_map_from_json(j.at("negative_tn"), "negative_tn");
  if (j.contains("options"))
    c.allow_genus_slack = j.at("options").value("allow_genus_slack", false);
  return c;
}

inline json config_to_json(const CurveConfig& c) {
  json out;
  out["degree"] = c.degree;
  out["genus"] = c.genus;
  json cusps = json::array();
  for (const auto& s : c.cusps) {
    // Two-generator semigroups echo as torus knots, anything else as gaps.
    if (s.generators.size() == 2)
      cusps.push_back(json{{"type", "torus_knot"},
                           {"p", s.generators[0]},
                           {"q", s.generators[1]}});
    else
      cusps.push_back(json{{"type", "gaps"}, {"gaps", s.gaps}});
  }
  out["cusps"] = std::move(cusps);
  out["positive_tn"] = detail::link_map_to_json(c.positive_links);
  out["negative_tn"] = detail::link_map_to_json(c.negative_links);
  out["options"] = json{{"allow_genus_slack", c.allow_genus_slack}};
  return out;
}

// ---------------------------------------------------------------------------
// Obstruction reports.
// ---------------------------------------------------------------------------

inline json row_to_json(const ObstructionRow& r) {
  return json{{"k", r.k},     {"lhs1", r.lhs1},   {"rhs1", r.rhs1},
              {"pass1", r.pass1}, {"lhs2", r.lhs2}, {"rhs2", r.rhs2},
              {"pass2", r.pass2}};
}

inline json report_to_json(const ObstructionReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) rows.push_back(row_to_json(r));
  json witnesses = json::array();
  for (const auto& w : rep.witnesses)
    witnesses.push_back(json{{"k", w.k}, {"side", w.side}});
  return json{{"rows", std::move(rows)},
              {"verdict", rep.verdict()},
              {"witnesses", std::move(witnesses)}};
}

inline json cross_validation_to_json(const RowCrossValidation& cv) {
  return json{{"k", cv.spinc.k},
              {"m", rational_to_json(cv.spinc.m)},
              {"level", cv.spinc.level},
              {"v_top", rational_to_json(cv.v_top)},
              {"v_bot", rational_to_json(cv.v_bot)},
              {"d_top", rational_to_json(cv.d_top)},
              {"d_bot", rational_to_json(cv.d_bot)},
              {"lower_ok", cv.lower_ok},
              {"upper_ok", cv.upper_ok}};
}

}  // namespace cusp
