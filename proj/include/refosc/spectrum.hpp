#pragma once

// Eigenvalue bookkeeping: angular eigenvalues, energies, and exact
// degeneracy grouping for rational k.

#include <vector>

#include "refosc/params.hpp"
#include "refosc/rational.hpp"

namespace refosc {

// a_n: -(n + (alpha+beta+1)/2) for even n, +(n + (alpha+beta+1)/2) for odd.
Rat angular_eigenvalue(int n, const Rat& alpha, const Rat& beta);

// E_{m,n} = 2 omega [2m + k(n + (alpha+beta+1)/2) + 1].
Rat energy(int m, int n, const Params& params);

struct EnergyLevel {
  Rat value;                                // exact E
  std::vector<std::pair<int, int>> members; // (m, n), sorted
};

// Groups all (m, n) with m <= m_max, n <= n_max by exact energy; levels
// come back ordered by increasing energy. Grouping keys on the exact
// value only, so parameter-driven coincidences surface as shared levels.
std::vector<EnergyLevel> multiplets(const Params& params, int m_max,
                                    int n_max);

// epsilon = m + k n / 2.
Rat epsilon_of(int m, int n, const Params& params);
// epsilon expressed through the energy: (E - w k(a+b+1) - 2w)/(4w).
Rat epsilon_from_energy(const Rat& E, const Params& params);
// n expressed through the angular eigenvalue, per parity branch:
// n = -(2a + alpha + beta + 1)/2 on the even branch,
// n = +(2a - alpha - beta - 1)/2 on the odd branch.
Rat n_from_q(const Rat& a_value, bool even_branch, const Params& params);

}  // namespace refosc
