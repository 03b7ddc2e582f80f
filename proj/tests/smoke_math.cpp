// Development smoke driver: exercises the operator algebra end to end and
// prints what it finds. Superseded by the doctest suites.
#include <iostream>

#include "refosc/ccm.hpp"
#include "refosc/operators.hpp"
#include "refosc/spectrum.hpp"
#include "refosc/symmetry.hpp"

using namespace refosc;

int main() {
  // k=1, alpha=beta=0
  ModelContext ctx(make_params("1", "0", "0", "1"));
  ctx.ensure_depth(25);

  std::cout << "P1 = " << ctx.P(1).str() << "\n";
  std::cout << "P2 = " << ctx.P(2).str() << "\n";
  std::cout << "a0,a1,a2 = " << to_string(ctx.a(0)) << ", "
            << to_string(ctx.a(1)) << ", " << to_string(ctx.a(2)) << "\n";

  // H eigen check
  Op h = hamiltonian_y(ctx);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 5; ++n) {
      WaveVector psi = basis_state(ctx, m, n);
      WaveVector res = h(psi) - psi.scaled(energy(m, n, ctx.params()));
      if (!res.is_zero()) {
        std::cout << "H eigen FAIL at " << m << "," << n << "\n";
        return 1;
      }
    }
  std::cout << "H eigen ok; E(0,0) = " << to_string(energy(0, 0, ctx.params()))
            << "\n";

  // J actions
  Op jp = j_plus_op(ctx);
  WaveVector p1 = basis_state(ctx, 0, 1);
  auto jp1 = jp(p1).single();
  std::cout << "J+ P1 -> sector " << jp1->first << "\n";

  // Xi actions: honest vs expected vs closed form
  Op x1 = xi1_op(ctx), x2 = xi2_op(ctx);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 6; ++n) {
      WaveVector w = x1(basis_state(ctx, m, n));
      Transition t = xi1_expected(ctx, m, n);
      WaveVector expect = t.coeff == 0
                              ? WaveVector()
                              : basis_state(ctx, t.m, t.n).scaled(t.coeff);
      if (!(w == expect)) {
        std::cout << "Xi1 mismatch at (" << m << "," << n << ")\n got     "
                  << w.str() << "\n expect " << expect.str() << "\n";
        return 1;
      }
      WaveVector we = xi1_on_basis_e(ctx, m, n);
      if (!(we == w)) {
        std::cout << "Xi1 E-route mismatch at (" << m << "," << n << ")\n";
        return 1;
      }
    }
  std::cout << "Xi1 honest == expected == E-route on grid\n";

  // closed forms vs step products (n even: ell_minus; n odd: ell_plus)
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 6; ++n) {
      Transition t = xi1_expected(ctx, m, n);
      if (n % 2 == 0) {
        auto lm = ell_minus_closed(ctx, m, n);
        if (lm && !(*lm == t.coeff)) {
          std::cout << "ell- closed mismatch at (" << m << "," << n << "): "
                    << to_string(*lm) << " vs " << to_string(t.coeff) << "\n";
          return 1;
        }
      } else if (t.coeff != 0) {
        Rat lp = ell_plus_closed(ctx, m, n);
        if (!(lp == t.coeff)) {
          std::cout << "ell+ closed mismatch at (" << m << "," << n << ")\n";
          return 1;
        }
      }
    }
  std::cout << "closed-form coefficients match step products\n";
  std::cout << "ell+(0,1) = " << to_string(ell_plus_closed(ctx, 0, 1))
            << " (expect 96)\n";

  // [Xi, H] = 0
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 4; ++n) {
      WaveVector psi = basis_state(ctx, m, n);
      WaveVector r1 = x1(h(psi)) - h(x1(psi));
      WaveVector r2 = x2(h(psi)) - h(x2(psi));
      if (!r1.is_zero() || !r2.is_zero()) {
        std::cout << "[Xi,H] != 0 at (" << m << "," << n << ")\n"
                  << r1.str() << "\n";
        return 1;
      }
    }
  std::cout << "[Xi1,H] = [Xi2,H] = 0 on grid\n";

  // [Xi, Q]
  Op qt = q_tilde_op(ctx);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 4; ++n) {
      WaveVector psi = basis_state(ctx, m, n);
      WaveVector lhs = x1(qt(psi)) - qt(x1(psi));
      WaveVector rhs = x1(psi).scaled(Rat(-2 * ctx.params().q));
      if (!(lhs == rhs)) {
        std::cout << "[Xi1,Q] mismatch at (" << m << "," << n << ")\n";
        return 1;
      }
    }
  std::cout << "[Xi1,Q] = -2q Xi1 on grid\n";

  // adjointness
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 5; ++n) {
      auto sides = adjoint_ratio_sides(ctx, m, n);
      if (!sides) continue;
      if (!(sides->first == sides->second)) {
        std::cout << "adjoint ratio FAIL at (" << m << "," << n << "): "
                  << to_string(sides->first) << " vs "
                  << to_string(sides->second) << "\n";
        return 1;
      }
    }
  std::cout << "adjointness ratios ok\n";

  // structure polynomial
  StructureResult sr = structure_polynomial(ctx);
  std::cout << "comm degrees (H,Q) = " << sr.commutator.degree_x() << ","
            << sr.commutator.degree_y() << " parity "
            << sr.parity_consistent_comm << "\n";
  std::cout << "anti degrees (H,Q) = " << sr.anticommutator.degree_x() << ","
            << sr.anticommutator.degree_y() << " parity "
            << sr.parity_consistent_anti << "\n";
  std::cout << "comm = " << sr.commutator.str("H", "Q") << "\n";
  // re-predict
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 8; ++n) {
      Rat d = diagonal_value(
          ctx, op_commutator(x1, x2), m, n);
      Rat pred = sr.commutator.eval(energy(m, n, ctx.params()), ctx.a(n));
      if (!(d == pred)) {
        std::cout << "re-prediction FAIL at (" << m << "," << n << ")\n";
        return 1;
      }
    }
  std::cout << "structure re-prediction ok\n";

  // lemmas
  const Rat w = ctx.params().omega;
  const Rat k2 = ctx.k() * ctx.k();
  for (int ell = 1; ell <= 3; ++ell) {
    Op jpl = j_power_plus(ctx, ell);
    Op rhs_factor = angular_op(ctx, affine_q(ctx, Rat(ell) * ell, Rat(-ell)));
    Op rhs = op_scale(Rat(-4) * w * k2,
                      op_compose(jpl, op_compose(rhs_factor, radial_div_y())));
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 4; ++n) {
        WaveVector psi = basis_state(ctx, m, n);
        WaveVector lhs = jpl(h(psi)) - h(jpl(psi));
        if (!(lhs == rhs(psi))) {
          std::cout << "Lemma1 FAIL l=" << ell << " at (" << m << "," << n
                    << ")\n";
          return 1;
        }
      }
  }
  std::cout << "Lemma 1 ok (l=1..3)\n";

  for (int ell = 1; ell <= 3; ++ell) {
    Op kl = k_power_h(ctx, KSign::PlusKQ, ell);
    Op rhs_factor = angular_op(
        ctx, affine_q(ctx, Rat(ell) * ell, Rat(ell) * ctx.k()));
    Op rhs = op_scale(Rat(4) * w,
                      op_compose(op_compose(rhs_factor, radial_div_y()), kl));
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 4; ++n) {
        WaveVector psi = basis_state(ctx, m, n);
        WaveVector lhs = kl(h(psi)) - h(kl(psi));
        if (!(lhs == rhs(psi))) {
          std::cout << "Lemma2 FAIL l=" << ell << " at (" << m << "," << n
                    << ")\n";
          return 1;
        }
      }
  }
  std::cout << "Lemma 2 ok (l=1..3)\n";

  // factorized form
  for (int ell = 1; ell <= 3; ++ell) {
    Op full = k_power_h(ctx, KSign::PlusKQ, ell);
    Op prev = k_power_h(ctx, KSign::PlusKQ, ell - 1);
    Op fact = k_factor_closed(ctx, KSign::PlusKQ, ell);
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 4; ++n) {
        WaveVector psi = basis_state(ctx, m, n);
        if (!(full(psi) == fact(prev(psi)))) {
          std::cout << "factor form FAIL l=" << ell << " at (" << m << ","
                    << n << ")\n";
          return 1;
        }
      }
  }
  std::cout << "factorized ladder form ok (l=1..3)\n";

  // CCM
  ModelContext cctx(make_params("2", "1/2", "1/2", "1"));
  cctx.ensure_depth(8);
  CoulombModel cm = ccm_map(cctx.params(), Rat(1));
  std::cout << "E~ derived (0,0) = "
            << to_string(coulomb_energy_derived(cm, 0, 0)) << "  printed-quant "
            << to_string(coulomb_energy_quantization_printed(cm, 0, 0)) << "\n";
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 4; ++n) {
      WaveVector res = coulomb_eigen_residual(cctx, cm, m, n,
                                              coulomb_energy_derived(cm, m, n));
      if (!res.is_zero()) {
        std::cout << "coulomb eigen FAIL at (" << m << "," << n << ")\n";
        return 1;
      }
      WaveVector rt = ccm_round_trip_residual(cm, m, n);
      if (!rt.is_zero()) {
        std::cout << "round trip FAIL at (" << m << "," << n << ")\n";
        return 1;
      }
    }
  std::cout << "coulomb eigen + round trip ok\n";
  WaveVector bad = coulomb_eigen_residual(
      cctx, cm, 0, 0, coulomb_energy_quantization_printed(cm, 0, 0));
  std::cout << "printed-quantization eigen residual zero? " << bad.is_zero()
            << " (expect 0 = false)\n";

  std::cout << "ALL SMOKE CHECKS PASSED\n";
  return 0;
}
