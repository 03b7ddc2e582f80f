#pragma once

// Verification reports and the compatibility ledger. Exact values are
// serialized as canonical rational strings, never floats. Reports are
// deterministic for fixed (params, bounds, version); the timestamp is
// opt-in so byte-identical replays stay the default.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "refosc/params.hpp"

namespace refosc {

inline constexpr const char* kToolVersion = "0.1.0";

struct CheckState {
  int m = -1;
  int n = -1;
};

struct Check {
  std::string id;
  std::string anchor;
  std::string status;  // pass | fail | deviation-documented
  std::string lhs;
  std::string rhs;
  std::optional<CheckState> state;
  std::string details;
};

struct ReportMeta {
  std::string tool = "refosc";
  std::string version = kToolVersion;
  std::string k, alpha, beta, omega;  // empty for grid runs
  std::string grid;                   // grid description for sweep runs
  int m_max = 0;
  int n_max = 0;
  std::vector<std::string> suites;
  std::string generated_at;  // optional
};

struct Report {
  ReportMeta meta;
  std::vector<Check> checks;

  bool all_passed() const;
  int count_status(const std::string& status) const;
  void sort_checks();

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
};

// Writes via a temporary file and rename.
void write_report_atomic(const Report& report, const std::string& path);

struct CompatEntry {
  std::string paper_location;
  std::string printed_form;
  std::string implemented_form;
  std::string oracle;
  std::string status;  // matches | corrected | unresolved
};

nlohmann::json compat_to_json(const std::vector<CompatEntry>& entries);
std::string compat_to_table(const std::vector<CompatEntry>& entries);

Check make_check(const std::string& id, const std::string& anchor, bool ok,
                 const std::string& lhs, const std::string& rhs,
                 std::optional<CheckState> state = std::nullopt,
                 const std::string& details = "");
Check make_deviation(const std::string& id, const std::string& anchor,
                     const std::string& lhs, const std::string& rhs,
                     const std::string& details);

}  // namespace refosc
