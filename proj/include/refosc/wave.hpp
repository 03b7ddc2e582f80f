#pragma once

// Finite combinations of product states, stored per angular sector: the
// entry at n carries the radial factor multiplying the eigenpolynomial
// P_n. Zero entries are dropped.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "refosc/context.hpp"
#include "refosc/radial.hpp"

namespace refosc {

class WaveVector {
 public:
  WaveVector() = default;

  bool is_zero() const { return entries_.empty(); }
  const std::map<int, RadialFunction>& entries() const { return entries_; }

  void add_term(int n, const RadialFunction& r);

  WaveVector operator+(const WaveVector& o) const;
  WaveVector operator-(const WaveVector& o) const;
  WaveVector scaled(const Rat& s) const;
  bool operator==(const WaveVector& o) const { return entries_ == o.entries_; }

  // The single (sector, radial) component, if there is exactly one.
  std::optional<std::pair<int, RadialFunction>> single() const;

  std::string str() const;

 private:
  std::map<int, RadialFunction> entries_;
};

// Eigenstate with quantum numbers (m, n): Y_m^{k|a_n|} times P_n.
WaveVector basis_state(const ModelContext& ctx, int m, int n);

}  // namespace refosc
