#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "refosc/errors.hpp"
#include "refosc/report.hpp"

using namespace refosc;

namespace {

Report sample_report() {
  Report r;
  r.meta.k = "3/2";
  r.meta.alpha = "1/2";
  r.meta.beta = "-1/2";
  r.meta.omega = "1";
  r.meta.m_max = 4;
  r.meta.n_max = 8;
  r.meta.suites = {"ladders"};
  r.checks.push_back(make_check("b/second", "eq:3.23", true, "1", "1",
                                CheckState{1, 2}));
  r.checks.push_back(make_check("a/first", "eq:3.31", false, "2", "3",
                                std::nullopt, "mismatch"));
  r.checks.push_back(
      make_deviation("c/third", "sec:4.5", "x", "y", "printed form differs"));
  r.sort_checks();
  return r;
}

}  // namespace

TEST_CASE("status accounting") {
  Report r = sample_report();
  CHECK(!r.all_passed());
  CHECK(r.count_status("pass") == 1);
  CHECK(r.count_status("fail") == 1);
  CHECK(r.count_status("deviation-documented") == 1);
  CHECK(r.checks.front().id == "a/first");
}

TEST_CASE("json round-trip is byte-identical") {
  Report r = sample_report();
  std::string once = r.to_json().dump(2);
  Report parsed = Report::from_json(nlohmann::json::parse(once));
  std::string twice = parsed.to_json().dump(2);
  CHECK(once == twice);
  CHECK(parsed.checks.size() == 3);
  CHECK(parsed.checks[0].status == "fail");
  REQUIRE(parsed.checks[1].state.has_value());
  CHECK(parsed.checks[1].state->m == 1);
  CHECK(parsed.checks[1].state->n == 2);
}

TEST_CASE("atomic write leaves no temp file") {
  Report r = sample_report();
  auto dir = std::filesystem::temp_directory_path() / "refosc_report_test";
  std::filesystem::create_directories(dir);
  std::string path = (dir / "out.json").string();
  write_report_atomic(r, path);
  CHECK(std::filesystem::exists(path));
  CHECK(!std::filesystem::exists(path + ".tmp"));
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  Report parsed = Report::from_json(nlohmann::json::parse(ss.str()));
  CHECK(parsed.checks.size() == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("deviations do not fail a report") {
  Report r;
  r.checks.push_back(make_deviation("only", "sec:5", "a", "b", "note"));
  CHECK(r.all_passed());
}

TEST_CASE("compat serialization") {
  std::vector<CompatEntry> entries = {
      {"eq:9.9", "printed", "implemented", "oracle", "corrected"}};
  auto j = compat_to_json(entries);
  CHECK(j.size() == 1);
  CHECK(j[0]["status"] == "corrected");
  std::string table = compat_to_table(entries);
  CHECK(table.find("eq:9.9") != std::string::npos);
  CHECK(table.find("corrected") != std::string::npos);
}
