#pragma once

// Per-model cache: angular eigenpolynomials, eigenvalues and norm ratios
// for one (k, alpha, beta, omega). Grow the cache with ensure_depth()
// before any parallel sweep; lookups are then read-only and safe to
// share across threads.

#include <utility>
#include <vector>

#include "refosc/orthopoly.hpp"
#include "refosc/params.hpp"
#include "refosc/poly.hpp"

namespace refosc {

class ModelContext {
 public:
  explicit ModelContext(Params params) : params_(std::move(params)) {
    params_.validate();
  }

  const Params& params() const { return params_; }
  Rat k() const { return params_.k(); }

  void ensure_depth(int n);
  int depth() const { return static_cast<int>(pbasis_.size()) - 1; }

  // Monic angular eigenpolynomial P_n and its eigenvalue a_n.
  const Poly& P(int n) const;
  const Rat& a(int n) const;
  Rat abs_a(int n) const { return abs(a(n)); }
  // Radial exponent attached to sector n.
  Rat gamma_n(int n) const { return k() * abs_a(n); }
  // h_n / h_0.
  const Rat& norm_ratio(int n) const;

  // Exact expansion of a polynomial over the monic eigenbasis.
  std::vector<std::pair<int, Rat>> expand(const Poly& f) const;

 private:
  Params params_;
  std::vector<Poly> pbasis_;
  std::vector<Rat> a_;
  std::vector<Rat> hratio_;
};

}  // namespace refosc
