// Copyright 2026 The espwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON serialization of connection sets and reports.
//
// Connection-set file: {"n": int, "classes": ["1100", ...], "include_z": bool}.
// Reports carry a top-level "schema": 1 when emitted by the CLI.
#pragma once

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "espwalk/cayley.hpp"
#include "espwalk/confirm.hpp"
#include "espwalk/criteria.hpp"

namespace espwalk {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline json to_json(const ConnectionSet& c) {
  json classes = json::array();
  for (const auto& x : c.classes) classes.push_back(x.to_string());
  return {{"n", c.n}, {"classes", classes}, {"include_z", c.include_z}};
}

/// Parses a connection-set object. `source` prefixes error locations.
inline ConnectionSet connection_from_json(const json& j, const std::string& source = "connection") {
  if (!j.is_object()) throw ParseError(source, "expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError(source + ".n", "missing or not an integer");
  const int n = j["n"].get<int>();
  if (n < 1 || n > ExtraspecialGroup::kMaxN) throw ParseError(source + ".n", "out of range");
  if (!j.contains("classes") || !j["classes"].is_array())
    throw ParseError(source + ".classes", "missing or not an array");
  bool include_z = false;
  if (j.contains("include_z")) {
    if (!j["include_z"].is_boolean()) throw ParseError(source + ".include_z", "not a boolean");
    include_z = j["include_z"].get<bool>();
  }
  std::vector<GF2Vector> classes;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j["classes"].size(); ++i) {
    const std::string where = source + ".classes[" + std::to_string(i) + "]";
    const auto& e = j["classes"][i];
    if (!e.is_string()) throw ParseError(where, "not a string");
    const auto s = e.get<std::string>();
    if (!seen.insert(s).second) throw ParseError(where, "duplicate class '" + s + "'");
    GF2Vector v;
    try {
      v = GF2Vector::parse(s);
    } catch (const ParseError& err) {
      throw ParseError(where, err.what());
    }
    if (v.size() != static_cast<std::size_t>(2 * n))
      throw ParseError(where, "length " + std::to_string(v.size()) + " but 2n = " + std::to_string(2 * n));
    classes.push_back(v);
  }
  return {n, std::move(classes), include_z};
}

inline ConnectionSet parse_connection(std::string_view text, const std::string& source = "connection") {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ":byte " + std::to_string(e.byte), "malformed JSON");
  }
  return connection_from_json(j, source);
}

inline ConnectionSet load_connection_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_connection(ss.str(), path);
}

inline PartialSpread load_spread_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  return parse_spread(in, path);
}

// --- Reports ----------------------------------------------------------------------

inline json to_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

inline json to_json(const DyadicTime& t) {
  return {{"pi_multiple", t.to_string()}, {"numerator", t.numerator}, {"exponent", t.exponent},
          {"radians", t.radians()}};
}

template <typename T>
json to_json(const std::optional<T>& o) {
  return o ? to_json(*o) : json(nullptr);
}

inline json to_json(const SpectrumSummary& s) {
  json mults = json::array();
  for (const auto& [theta, m] : s.multiplicities) mults.push_back({{"eigenvalue", theta}, {"multiplicity", m}});
  return {{"degree", s.degree}, {"e_table", s.e_table}, {"eigenvalues", mults},
          {"nonlinear_eigenvalue", s.nonlinear_eigenvalue}};
}

inline json to_json(const PhiSets& p) {
  return {{"plus", p.plus}, {"minus", p.minus}, {"disjoint", p.disjoint}};
}

inline json to_json(const PstReport& r, std::size_t dimension) {
  json failure = nullptr;
  if (r.failure)
    failure = {{"y", GF2Vector(dimension, r.failure->y).to_string()},
               {"gap_valuation", to_json(r.failure->gap)},
               {"required_valuation", to_json(r.failure->required)}};
  return {{"admits", r.admits},
          {"failure", failure},
          {"min_time", to_json(r.min_time())},
          {"d_or_c", r.d_or_c},
          {"strongly_cospectral", r.strongly_cospectral},
          {"connected", r.connected}};
}

inline json to_json(const FrReport& r) {
  return {{"case", to_string(r.kind)},
          {"alpha", to_json(r.alpha)},
          {"threshold", to_json(r.threshold)},
          {"g", r.g},
          {"h", r.h ? json(*r.h) : json(nullptr)},
          {"fr_min_time", to_json(r.fr_min_time)},
          {"balanced_time", to_json(r.balanced_time)}};
}

inline json to_json(const MixingReport& r) {
  return {{"p", r.p},         {"n", r.n},         {"order", r.order}, {"min_support", r.min_support},
          {"bound", r.bound}, {"admits_possible", r.admits_possible}};
}

inline json to_json(const OracleCheck& c) {
  return {{"check", c.name},         {"time", to_json(c.time)}, {"expected", c.expected},
          {"observed", c.observed},  {"agree", c.agree()},      {"residual", c.residual},
          {"detail", c.detail}};
}

inline json to_json(const Confirmation& c) {
  json checks = json::array();
  for (const auto& k : c.checks) checks.push_back(to_json(k));
  return {{"agree", c.agree()}, {"checks", checks}};
}

/// Full analysis block for one connection set; `confirmation` may be null.
inline json analysis_json(const ConnectionSet& c, const Confirmation* confirmation) {
  json j = {{"connection", to_json(c)},
            {"spectrum", to_json(spectrum(c))},
            {"phi", to_json(phi_sets(c))},
            {"pst", to_json(pst_decision(c), c.dimension())},
            {"fr", to_json(fr_classify(c))},
            {"mixing", to_json(mixing_check(2, c.n))}};
  j["oracle"] = confirmation ? to_json(*confirmation) : json(nullptr);
  return j;
}

}  // namespace espwalk
