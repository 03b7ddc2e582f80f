#include "refosc/spectrum.hpp"

#include <algorithm>
#include <map>

#include "refosc/errors.hpp"

namespace refosc {

Rat angular_eigenvalue(int n, const Rat& alpha, const Rat& beta) {
  if (n < 0) throw ParameterOutOfRange("n must be nonnegative");
  Rat mag = Rat(n) + (alpha + beta + 1) / 2;
  return n % 2 == 0 ? -mag : mag;
}

Rat energy(int m, int n, const Params& params) {
  if (m < 0 || n < 0) throw ParameterOutOfRange("indices must be nonnegative");
  Rat mag = Rat(n) + (params.alpha + params.beta + 1) / 2;
  return Rat(2) * params.omega * (Rat(2 * m) + params.k() * mag + 1);
}

std::vector<EnergyLevel> multiplets(const Params& params, int m_max,
                                    int n_max) {
  if (m_max < 0 || n_max < 0)
    throw ParameterOutOfRange("bounds must be nonnegative");
  std::map<Rat, std::vector<std::pair<int, int>>> groups;
  for (int m = 0; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      groups[energy(m, n, params)].emplace_back(m, n);
  std::vector<EnergyLevel> out;
  out.reserve(groups.size());
  for (auto& [e, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(EnergyLevel{e, std::move(members)});
  }
  return out;
}

Rat epsilon_of(int m, int n, const Params& params) {
  return Rat(m) + params.k() * Rat(n) / 2;
}

Rat epsilon_from_energy(const Rat& E, const Params& params) {
  const Rat w = params.omega;
  return (E - w * params.k() * (params.alpha + params.beta + 1) - 2 * w) /
         (4 * w);
}

Rat n_from_q(const Rat& a_value, bool even_branch, const Params& params) {
  Rat s = params.alpha + params.beta + 1;
  if (even_branch) return Rat(-(2 * a_value + s) / 2);
  return Rat((2 * a_value - s) / 2);
}

}  // namespace refosc
