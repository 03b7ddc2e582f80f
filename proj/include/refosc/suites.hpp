#pragma once

// Verification suite builders and the run orchestrator. Every check
// carries a stable id and an anchor tag naming the equation or section
// of the reference text it machine-checks.

#include <optional>
#include <string>
#include <vector>

#include "refosc/context.hpp"
#include "refosc/report.hpp"
#include "refosc/sweep.hpp"

namespace refosc {

struct Bounds {
  int m_max = 6;
  int n_max = 12;
};

enum class Suite {
  Orthopoly,
  Ladders,
  Integrals,
  Adjoint,
  Algebra,
  Appendix,
  Ccm,
};

std::vector<Suite> parse_suites(const std::string& name);
std::string suite_name(Suite s);

// Basis depth a suite may touch (sectors reached by ladder chains and the
// structure interpolation grid).
int required_depth(const Params& params, const std::vector<Suite>& suites,
                   const Bounds& bounds);

std::vector<CheckJob> build_suite_jobs(const ModelContext& ctx, Suite suite,
                                       const Bounds& bounds,
                                       const std::string& id_prefix = "");

struct VerifyOptions {
  std::optional<Params> params;  // empty: run the default parameter grid
  Bounds bounds;
  std::vector<Suite> suites;
  ExecMode mode = ExecMode::Parallel;
  int threads = 0;
  std::string generated_at;  // copied into meta when nonempty
};

Report run_verify(const VerifyOptions& opt);

// The default sweep grid: k in {1,2,3,1/2,3/2,2/3}, alpha and beta over
// the four-point set, omega = 1.
std::vector<Params> default_param_grid();

// The typo/convention ledger, with live oracles evaluated at the given
// parameters where that makes the entry concrete.
std::vector<CompatEntry> compat_entries(const Params& params);

}  // namespace refosc
