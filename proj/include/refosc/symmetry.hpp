#pragma once

// The two higher-order constants of motion and the algebra they close.
// Xi1 composes q angular double-steps (J- J+ blocks) with the p-fold
// +kQ radial ladder; Xi2 is the mirror. Their basis action is a single
// state scaled by the ladder coefficients below.

#include <optional>
#include <utility>
#include <vector>

#include "refosc/operators.hpp"
#include "refosc/structure.hpp"

namespace refosc {

// Parameter-independent constants of motion (Hamiltonian-substituted
// radial ladders).
Op xi1_op(const ModelContext& ctx);
Op xi2_op(const ModelContext& ctx);
// Energy-constant route: valid on eigenstates of energy E_{m,n}.
WaveVector xi1_on_basis_e(const ModelContext& ctx, int m, int n);
WaveVector xi2_on_basis_e(const ModelContext& ctx, int m, int n);

// One angular ladder step as the tabulated coefficient (exact; the n = 0
// raising coefficient is identically zero).
Rat j_plus_step_coeff(const ModelContext& ctx, int n);
Rat j_minus_step_coeff(const ModelContext& ctx, int n);

struct Transition {
  Rat coeff;   // 0 when annihilated
  int m = -1;  // target indices; meaningful when coeff != 0
  int n = -1;
};

// Expected single-target action computed by chaining the tabulated
// one-step coefficients (defined for every state).
Transition xi1_expected(const ModelContext& ctx, int m, int n);
Transition xi2_expected(const ModelContext& ctx, int m, int n);

// Closed-form expansion coefficients. Empty when the printed denominator
// Pochhammer vanishes (the step-product form remains the defined value).
std::optional<Rat> ell_minus_closed(const ModelContext& ctx, int m, int n);
std::optional<Rat> ell_minus_tilde_closed(const ModelContext& ctx, int m,
                                          int n);
Rat ell_plus_closed(const ModelContext& ctx, int m, int n);

// Both exact sides of the mutual-adjointness ratio identity. Empty when
// the transition is annihilated (vacuous case). first = norm-ratio side,
// second = coefficient-ratio side.
std::optional<std::pair<Rat, Rat>> adjoint_ratio_sides(const ModelContext& ctx,
                                                       int m, int n);

struct StructureResult {
  BiPoly commutator;      // in (H, Q)
  BiPoly anticommutator;  // in (H, Q)
  bool parity_consistent_comm = false;
  bool parity_consistent_anti = false;
  int grid_states = 0;
};

// Interpolates the diagonal action of [Xi1,Xi2] and {Xi1,Xi2} over the
// basis grid into exact (H, Q) polynomials. Throws NonDiagonal if any
// tested action has an off-diagonal component, VerificationFailure if
// the interpolated degree exceeds its bound. grid bounds below the
// required interpolation support raise InterpolationUnderdetermined.
StructureResult structure_polynomial(const ModelContext& ctx,
                                     int grid_m_max = -1, int grid_n_max = -1);

// Diagonal eigenvalue of an operator on a basis state; throws NonDiagonal
// when the action is not a multiple of the input state.
Rat diagonal_value(const ModelContext& ctx, const Op& op, int m, int n);

// Printed k=1 structure relations, encoded verbatim as (H, Q)
// polynomials for the term-level comparison.
BiPoly k1_printed_commutator(const Params& params);
BiPoly k1_printed_anticommutator(const Params& params);

struct TermDiff {
  int h = 0, qpow = 0;
  Rat lhs, rhs;  // interpolated vs printed
};
std::vector<TermDiff> term_diff(const BiPoly& a, const BiPoly& b);

}  // namespace refosc
