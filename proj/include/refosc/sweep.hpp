#pragma once

// Check execution engine. Each job is pure; results land in a
// preallocated slot indexed by job, so the merged output is identical
// whether the loop runs serially (reference path) or under OpenMP.

#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "refosc/report.hpp"

namespace refosc {

struct CheckJob {
  std::string id;
  std::string anchor;
  std::function<Check()> run;
};

enum class ExecMode { Serial, Parallel };

// Caps the OpenMP thread count for a scope; 0 leaves it untouched.
class ThreadLimit {
 public:
  explicit ThreadLimit(int threads) {
#ifdef _OPENMP
    if (threads > 0) {
      saved_ = omp_get_max_threads();
      omp_set_num_threads(threads);
    }
#else
    (void)threads;
#endif
  }
  ~ThreadLimit() {
#ifdef _OPENMP
    if (saved_ > 0) omp_set_num_threads(saved_);
#endif
  }
  ThreadLimit(const ThreadLimit&) = delete;
  ThreadLimit& operator=(const ThreadLimit&) = delete;

 private:
  int saved_ = 0;
};

inline std::vector<Check> run_jobs(const std::vector<CheckJob>& jobs,
                                   ExecMode mode) {
  std::vector<Check> out(jobs.size());
  auto run_one = [&](size_t i) {
    try {
      out[i] = jobs[i].run();
    } catch (const std::exception& e) {
      out[i] = Check{jobs[i].id, jobs[i].anchor, "fail", "", "",
                     std::nullopt, std::string("exception: ") + e.what()};
    }
    if (out[i].id.empty()) out[i].id = jobs[i].id;
    if (out[i].anchor.empty()) out[i].anchor = jobs[i].anchor;
  };
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(jobs.size()); ++i)
      run_one(static_cast<size_t>(i));
    return out;
  }
#else
  (void)mode;
#endif
  for (size_t i = 0; i < jobs.size(); ++i) run_one(i);
  return out;
}

}  // namespace refosc
