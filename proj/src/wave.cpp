#include "refosc/wave.hpp"

#include <sstream>

namespace refosc {

void WaveVector::add_term(int n, const RadialFunction& r) {
  if (r.is_zero()) return;
  auto it = entries_.find(n);
  if (it == entries_.end()) {
    entries_.emplace(n, r);
    return;
  }
  RadialFunction sum = it->second + r;
  if (sum.is_zero())
    entries_.erase(it);
  else
    it->second = sum;
}

WaveVector WaveVector::operator+(const WaveVector& o) const {
  WaveVector out = *this;
  for (const auto& [n, r] : o.entries_) out.add_term(n, r);
  return out;
}

WaveVector WaveVector::operator-(const WaveVector& o) const {
  return *this + o.scaled(Rat(-1));
}

WaveVector WaveVector::scaled(const Rat& s) const {
  WaveVector out;
  if (s == 0) return out;
  for (const auto& [n, r] : entries_) out.entries_.emplace(n, r.scaled(s));
  return out;
}

std::optional<std::pair<int, RadialFunction>> WaveVector::single() const {
  if (entries_.size() != 1) return std::nullopt;
  return *entries_.begin();
}

std::string WaveVector::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, r] : entries_) {
    if (!first) os << " + ";
    os << "[n=" << n << "] " << r.str();
    first = false;
  }
  return os.str();
}

WaveVector basis_state(const ModelContext& ctx, int m, int n) {
  WaveVector v;
  v.add_term(n, laguerre_state(m, ctx.gamma_n(n)));
  return v;
}

}  // namespace refosc
