// Times the verification sweeps in the serial reference mode against the
// OpenMP path and checks that both produce identical reports.
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "refosc/suites.hpp"

using namespace refosc;

namespace {

double run_once(const VerifyOptions& opt, Report* out) {
  auto t0 = std::chrono::steady_clock::now();
  *out = run_verify(opt);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  bool tiny = argc > 1 && std::string(argv[1]) == "--tiny";

  int totalchecks = 0;
  double t_serial_total = 0, t_parallel_total = 0;
  bool ok = true;
  std::vector<std::string> ks = tiny ? std::vector<std::string>{"1"}
                                     : std::vector<std::string>{"1", "2",
                                                                "3/2", "2/3"};
  for (const std::string& k : ks) {
    VerifyOptions opt;
    opt.params = make_params(k, "1/2", "-1/2", "1");
    opt.suites = parse_suites(tiny ? "ladders" : "all");
    opt.bounds = tiny ? Bounds{2, 4} : Bounds{4, 8};

    Report serial_report, parallel_report;
    opt.mode = ExecMode::Serial;
    double ts = run_once(opt, &serial_report);
    opt.mode = ExecMode::Parallel;
    double tp = run_once(opt, &parallel_report);

    bool identical =
        serial_report.to_json().dump() == parallel_report.to_json().dump();
    std::cout << "k=" << k << ": " << serial_report.checks.size()
              << " checks, serial " << ts << " s, parallel " << tp
              << " s, identical " << (identical ? "yes" : "NO") << "\n";
    ok = ok && identical && serial_report.all_passed();
    totalchecks += static_cast<int>(serial_report.checks.size());
    t_serial_total += ts;
    t_parallel_total += tp;
  }
  std::cout << "total:   " << totalchecks << " checks\n"
            << "serial:  " << t_serial_total << " s\n"
            << "parallel:" << t_parallel_total << " s\n"
            << "speedup: "
            << (t_parallel_total > 0 ? t_serial_total / t_parallel_total : 0)
            << "x\n";
  return ok ? 0 : 1;
}
