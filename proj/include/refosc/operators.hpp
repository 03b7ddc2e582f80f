#pragma once

// Exact linear operators on wave vectors, built as immutable composition
// closures. Angular factors act on the eigenpolynomial of each sector and
// are re-expanded over the eigenbasis; radial factors act on the
// quasi-polynomial part. Application is pure.

#include <functional>

#include "refosc/context.hpp"
#include "refosc/wave.hpp"

namespace refosc {

using PolyFn = std::function<Poly(const Poly&)>;
using Op = std::function<WaveVector(const WaveVector&)>;

Op op_identity();
Op op_compose(Op after, Op first);
Op op_add(Op a, Op b);
Op op_scale(const Rat& s, Op a);
Op op_commutator(Op a, Op b);
Op op_anticommutator(Op a, Op b);
Op op_power(Op a, int n);

// Sector-wise angular action with exact eigenbasis re-expansion.
Op angular_op(const ModelContext& ctx, PolyFn f);
// Sector-wise radial primitives.
Op radial_d_dy();
Op radial_mul_y();
Op radial_div_y();

// c0 + c1*Qt as a polynomial transform.
PolyFn affine_q(const ModelContext& ctx, const Rat& c0, const Rat& c1);

Op q_tilde_op(const ModelContext& ctx);

// omega(-4 y d2/dy2 - 4 d/dy + y + k^2 Qt^2 / y)
Op hamiltonian_y(const ModelContext& ctx);

// Angular ladder operators and the degree-(+-2) blocks they compose to.
Op j_plus_op(const ModelContext& ctx);
Op j_minus_op(const ModelContext& ctx);
// (J- J+)^ell: lowers even n by 2ell, raises odd n.
Op j_power_minus(const ModelContext& ctx, int ell);
// (J+ J-)^ell: raises even n by 2ell, lowers odd n.
Op j_power_plus(const ModelContext& ctx, int ell);

// Radial ladders with the angular operator substituted for the exponent.
// PlusKQ carries +kQt, MinusKQ carries -kQt. The sign on the energy term
// is fixed so the single-step actions hold (see the compat report).
enum class KSign { PlusKQ, MinusKQ };

// Single ladder factor at shift 2j with an explicit energy constant.
Op k_factor_e(const ModelContext& ctx, KSign sign, int j, const Rat& energy);
// p-fold ladder with the energy constant held fixed across factors.
Op k_power_e(const ModelContext& ctx, KSign sign, int p, const Rat& energy);
// p-fold ladder with the energy pushed right and replaced by the
// Hamiltonian (parameter-independent form).
Op k_power_h(const ModelContext& ctx, KSign sign, int p);
// Closed form of the ell-th factor (1-based) such that
// K^ell = factor(ell) o K^(ell-1) as operators on the basis.
Op k_factor_closed(const ModelContext& ctx, KSign sign, int ell);

// Explicit-exponent single ladder steps on radial functions.
RadialFunction k_step_explicit(const Rat& gamma_coeff, const Rat& energy,
                               const Rat& omega, const RadialFunction& f);

}  // namespace refosc
