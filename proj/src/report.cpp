#include "refosc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "refosc/errors.hpp"

namespace refosc {

using nlohmann::json;

bool Report::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == "fail"; });
}

int Report::count_status(const std::string& status) const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(),
      [&](const Check& c) { return c.status == status; }));
}

void Report::sort_checks() {
  std::sort(checks.begin(), checks.end(),
            [](const Check& a, const Check& b) { return a.id < b.id; });
}

json Report::to_json() const {
  json m;
  m["tool"] = meta.tool;
  m["version"] = meta.version;
  if (!meta.k.empty()) {
    m["k"] = meta.k;
    m["alpha"] = meta.alpha;
    m["beta"] = meta.beta;
    m["omega"] = meta.omega;
  }
  if (!meta.grid.empty()) m["grid"] = meta.grid;
  m["m_max"] = meta.m_max;
  m["n_max"] = meta.n_max;
  m["suites"] = meta.suites;
  if (!meta.generated_at.empty()) m["generated_at"] = meta.generated_at;

  json arr = json::array();
  for (const Check& c : checks) {
    json jc;
    jc["id"] = c.id;
    jc["anchor"] = c.anchor;
    jc["status"] = c.status;
    jc["lhs"] = c.lhs;
    jc["rhs"] = c.rhs;
    if (c.state) jc["state"] = json{{"m", c.state->m}, {"n", c.state->n}};
    if (!c.details.empty()) jc["details"] = c.details;
    arr.push_back(std::move(jc));
  }
  return json{{"meta", std::move(m)}, {"checks", std::move(arr)}};
}

Report Report::from_json(const json& j) {
  Report r;
  const json& m = j.at("meta");
  r.meta.tool = m.value("tool", "");
  r.meta.version = m.value("version", "");
  r.meta.k = m.value("k", "");
  r.meta.alpha = m.value("alpha", "");
  r.meta.beta = m.value("beta", "");
  r.meta.omega = m.value("omega", "");
  r.meta.grid = m.value("grid", "");
  r.meta.m_max = m.value("m_max", 0);
  r.meta.n_max = m.value("n_max", 0);
  r.meta.suites = m.value("suites", std::vector<std::string>{});
  r.meta.generated_at = m.value("generated_at", "");
  for (const json& jc : j.at("checks")) {
    Check c;
    c.id = jc.at("id");
    c.anchor = jc.at("anchor");
    c.status = jc.at("status");
    c.lhs = jc.value("lhs", "");
    c.rhs = jc.value("rhs", "");
    if (jc.contains("state"))
      c.state =
          CheckState{jc["state"].value("m", -1), jc["state"].value("n", -1)};
    c.details = jc.value("details", "");
    r.checks.push_back(std::move(c));
  }
  return r;
}

void write_report_atomic(const Report& report, const std::string& path) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot open " + tmp + " for writing");
    out << report.to_json().dump(2) << "\n";
    if (!out) throw IoError("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename to " + path + " failed: " + ec.message());
}

json compat_to_json(const std::vector<CompatEntry>& entries) {
  json arr = json::array();
  for (const CompatEntry& e : entries) {
    arr.push_back(json{{"paper_location", e.paper_location},
                       {"printed_form", e.printed_form},
                       {"implemented_form", e.implemented_form},
                       {"oracle", e.oracle},
                       {"status", e.status}});
  }
  return arr;
}

std::string compat_to_table(const std::vector<CompatEntry>& entries) {
  std::ostringstream os;
  for (const CompatEntry& e : entries) {
    os << e.paper_location << "  [" << e.status << "]\n";
    os << "  printed:     " << e.printed_form << "\n";
    os << "  implemented: " << e.implemented_form << "\n";
    os << "  oracle:      " << e.oracle << "\n";
  }
  return os.str();
}

Check make_check(const std::string& id, const std::string& anchor, bool ok,
                 const std::string& lhs, const std::string& rhs,
                 std::optional<CheckState> state, const std::string& details) {
  return Check{id, anchor, ok ? "pass" : "fail", lhs, rhs, state, details};
}

Check make_deviation(const std::string& id, const std::string& anchor,
                     const std::string& lhs, const std::string& rhs,
                     const std::string& details) {
  return Check{id,  anchor,       "deviation-documented",
               lhs, rhs,          std::nullopt,
               details};
}

}  // namespace refosc
