#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qserre {

/// Status of one verification record. A discrepancy is a verified mismatch
/// between a printed formula and the value forced by the definitions; it is
/// an expected finding, not a failure.
enum class CheckStatus { kPass, kFail, kDiscrepancy };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kDiscrepancy: return "discrepancy";
  }
  return "?";
}

struct CheckRecord {
  std::string id;
  std::string anchor;    // three to six verbatim words from the verified text
  CheckStatus status = CheckStatus::kFail;
  std::string residual;  // element-string, empty when zero
  std::string note;
};

struct Config {
  int degbound = 6;
  std::optional<int> window;  // per-suite default when unset
  int jobs = 1;
  unsigned seed = 20240901;
  std::optional<std::pair<mpq_class, mpq_class>> numeric_sample;

  int window_or(int fallback) const { return window ? *window : fallback; }
};

struct SuiteReport {
  std::string suite;
  Config config;
  std::vector<CheckRecord> checks;
  double wall_seconds = 0.0;  // console display only; never serialized

  bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::kFail) return false;
    return true;
  }
  size_t count(CheckStatus s) const {
    size_t n = 0;
    for (const auto& c : checks)
      if (c.status == s) ++n;
    return n;
  }
};

/// Deterministic serialization: stable key order, no timing, no timestamps.
inline nlohmann::ordered_json to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "report/v1";
  j["suite"] = r.suite;
  nlohmann::ordered_json cfg;
  cfg["degbound"] = r.config.degbound;
  if (r.config.window) cfg["window"] = *r.config.window;
  cfg["jobs"] = r.config.jobs;
  cfg["seed"] = r.config.seed;
  if (r.config.numeric_sample) {
    cfg["numeric_sample"] = {r.config.numeric_sample->first.get_str(),
                             r.config.numeric_sample->second.get_str()};
  }
  j["config"] = cfg;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["paper_anchor"] = c.anchor;
    jc["status"] = status_name(c.status);
    jc["residual"] = c.residual;
    jc["note"] = c.note;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  return j;
}

inline nlohmann::ordered_json to_json(const std::vector<SuiteReport>& rs) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : rs) j.push_back(to_json(r));
  return j;
}

inline std::string render_report(const std::vector<SuiteReport>& rs) {
  return to_json(rs).dump(2) + "\n";
}

/// 0 = all pass or discrepancy, 1 = any fail (2 is reserved for usage errors).
inline int report_exit_code(const std::vector<SuiteReport>& rs) {
  for (const auto& r : rs)
    if (!r.ok()) return 1;
  return 0;
}

}  // namespace qserre
