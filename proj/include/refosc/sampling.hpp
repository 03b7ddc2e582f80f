#pragma once

// Floating-point evaluation of the full (ungauged) wave functions and
// plot-ready sampling. The only module that leaves exact arithmetic.

#include <vector>

#include "refosc/context.hpp"

namespace refosc {

// Normalization prefactor M_{m,n} N_n / N_0 with N_0 = BetaEven^(-1/2).
double psi_prefactor(const ModelContext& ctx, int m, int n);

// Gauged route: (polynomial eigenfunctions) x (gauge factor).
double eval_psi_gauged(const ModelContext& ctx, int m, int n, double r,
                       double theta);
// Direct route: the closed-form product expression evaluated factor by
// factor. Algebraically identical to the gauged route.
double eval_psi_direct(const ModelContext& ctx, int m, int n, double r,
                       double theta);

// Throws GridSingularity when the gauge factor is singular at the point
// (sin(k theta) = 0 with alpha != 0, cos(k theta) = 0 with beta != 0).
void check_grid_point(const ModelContext& ctx, double theta);

struct SamplePoint {
  double r, theta, psi;
};

struct SampleGrid {
  double r_min = 0.1, r_max = 3.0;
  int r_count = 30;
  double theta_min, theta_max;  // defaults to the open angular domain
  int theta_count = 30;
};

SampleGrid default_grid(const ModelContext& ctx);

// Samples the wave function over the grid; every point is cross-checked
// between the two evaluation routes to 1e-10 relative.
std::vector<SamplePoint> sample_wavefunction(const ModelContext& ctx, int m,
                                             int n, const SampleGrid& grid);

// Float quadrature of <Psi_{m,n}, Psi_{m,n}> under the separated measure
// r dr dphi; approaches 1 for normalized states.
double norm_quadrature(const ModelContext& ctx, int m, int n);

}  // namespace refosc
