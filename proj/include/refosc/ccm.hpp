#pragma once

// Coupling constant metamorphosis: trading the energy of the oscillator
// family against the coupling of a Coulomb-type family. The mapped
// eigenproblem stays rational because 2*sqrt(-E~) is tracked as the
// explicit scale of the mapped radial variable.

#include "refosc/context.hpp"
#include "refosc/operators.hpp"
#include "refosc/rational.hpp"

namespace refosc {

struct CoulombModel {
  Params source;  // oscillator-side parameters (omega unused by the map)
  Rat g;          // Coulomb coupling; attractive branch uses -|g|

  Rat half_k() const { return source.k() / 2; }
};

CoulombModel ccm_map(const Params& params, const Rat& g);

// Scale s = 2 sqrt(-E~) of the mapped radial variable for state (m, n),
// obtained by solving the eigenproblem exactly: s = 2|g|/(2m + k|a_n| + 1).
Rat coulomb_scale(const CoulombModel& cm, int m, int n);

// Bound-state energy E~ = -s^2/4 = -g^2/(2m + k|a_n| + 1)^2, the value
// that passes the exact eigen-check.
Rat coulomb_energy_derived(const CoulombModel& cm, int m, int n);
// Value obtained by solving the printed quantization condition
// (-4g = 2 sqrt(-E~) (2m + (k/2)|a_n| + 1)): -16 g^2/(4m + k|a_n| + 2)^2.
Rat coulomb_energy_quantization_printed(const CoulombModel& cm, int m, int n);
// Value printed outright: -8 g^2/(4m + k|a_n| + 2)^2.
Rat coulomb_energy_printed(const CoulombModel& cm, int m, int n);

// The Coulomb Hamiltonian in the scaled variable:
//   -s^2 (d2 + (1/y~) d - (k^2/4) Qt^2 / y~^2) - |g| s / y~.
// On the mapped state of (m, n) (same radial index k|a_n| and angular
// sector) it acts with exact eigenvalue coulomb_energy_derived.
Op coulomb_hamiltonian(const ModelContext& ctx, const Rat& s, const Rat& g);

// Exact eigen-check of the mapped state (m, n) against a candidate
// energy; returns the residual wave vector (zero iff the check passes).
WaveVector coulomb_eigen_residual(const ModelContext& ctx,
                                  const CoulombModel& cm, int m, int n,
                                  const Rat& candidate_energy);

// Round trip: the mapped state is the oscillator eigenstate of the model
// with omega = s, and its oscillator energy equals 4|g|. Returns the
// residual of that equation.
WaveVector ccm_round_trip_residual(const CoulombModel& cm, int m, int n);

}  // namespace refosc
