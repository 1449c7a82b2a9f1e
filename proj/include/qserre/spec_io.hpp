#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qserre/algebra.hpp"

namespace qserre {

/// Parse the algebra-spec document format:
/// { "vars": [...], "invertible": [...], "q": {"(j,i)": "ratf"},
///   "c": {"(j,i)": "element"}, "weights": [[1,0], ...] }
/// Pair keys are 1-based, matching the X_j X_i notation.
inline AlgebraSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw parse_error("spec document must be a JSON object");
  for (const char* key : {"vars", "invertible", "q", "weights"})
    if (!j.contains(key)) throw parse_error(std::string("spec document lacks \"") + key + "\"");
  const std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  const std::vector<bool> invertible = j.at("invertible").get<std::vector<bool>>();
  std::vector<std::array<int, 2>> weights;
  for (const auto& w : j.at("weights")) {
    if (!w.is_array() || w.size() != 2) throw parse_error("weights entries must be pairs");
    weights.push_back({w[0].get<int>(), w[1].get<int>()});
  }
  auto parse_key = [&](const std::string& key) {
    int a = 0, b = 0;
    char l = 0, m = 0, rpar = 0;
    std::istringstream in(key);
    if (!(in >> l >> a >> m >> b >> rpar) || l != '(' || m != ',' || rpar != ')')
      throw parse_error("bad pair key '" + key + "' (expected \"(j,i)\")");
    if (a < 1 || b < 1 || a <= b || a > static_cast<int>(vars.size()))
      throw parse_error("pair key '" + key + "' out of range (need j > i, 1-based)");
    return std::make_pair(a - 1, b - 1);
  };
  std::map<std::pair<int, int>, RatF> q;
  for (const auto& [key, val] : j.at("q").items())
    q[parse_key(key)] = parse_ratf(val.get<std::string>());
  // corrections parse against a correction-free spec with the same scalars
  AlgebraSpec base(vars, invertible, q, {}, weights);
  std::map<std::pair<int, int>, Element> c;
  if (j.contains("c"))
    for (const auto& [key, val] : j.at("c").items())
      c[parse_key(key)] = parse_element(base, val.get<std::string>());
  return AlgebraSpec(vars, invertible, q, c, weights);
}

inline nlohmann::ordered_json spec_to_json(const AlgebraSpec& s) {
  nlohmann::ordered_json j;
  j["vars"] = s.vars();
  j["invertible"] = s.invertible_flags();
  nlohmann::ordered_json q = nlohmann::ordered_json::object();
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  for (int jj = 1; jj < s.size(); ++jj)
    for (int i = 0; i < jj; ++i) {
      const std::string key = "(" + std::to_string(jj + 1) + "," + std::to_string(i + 1) + ")";
      q[key] = s.q(jj, i).str();
      if (!s.c(jj, i).is_zero()) c[key] = element_str(s, s.c(jj, i));
    }
  j["q"] = q;
  if (!c.empty()) j["c"] = c;
  nlohmann::ordered_json w = nlohmann::ordered_json::array();
  for (const auto& wi : s.weights()) w.push_back({wi[0], wi[1]});
  j["weights"] = w;
  return j;
}

struct IngestResult {
  AlgebraSpec spec;
  ConfluenceReport confluence;
};

inline IngestResult ingest_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open spec file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error("JSON error in '" + path + "': " + e.what());
  }
  AlgebraSpec spec = spec_from_json(j);
  ConfluenceReport conf = validate_spec(spec);
  return {std::move(spec), std::move(conf)};
}

}  // namespace qserre
