#include "refosc/operators.hpp"

namespace refosc {

Op op_identity() {
  return [](const WaveVector& v) { return v; };
}

Op op_compose(Op after, Op first) {
  return [after = std::move(after), first = std::move(first)](
             const WaveVector& v) { return after(first(v)); };
}

Op op_add(Op a, Op b) {
  return [a = std::move(a), b = std::move(b)](const WaveVector& v) {
    return a(v) + b(v);
  };
}

Op op_scale(const Rat& s, Op a) {
  return [s, a = std::move(a)](const WaveVector& v) { return a(v).scaled(s); };
}

Op op_commutator(Op a, Op b) {
  return [a = std::move(a), b = std::move(b)](const WaveVector& v) {
    return a(b(v)) - b(a(v));
  };
}

Op op_anticommutator(Op a, Op b) {
  return [a = std::move(a), b = std::move(b)](const WaveVector& v) {
    return a(b(v)) + b(a(v));
  };
}

Op op_power(Op a, int n) {
  Op out = op_identity();
  for (int i = 0; i < n; ++i) out = op_compose(a, out);
  return out;
}

Op angular_op(const ModelContext& ctx, PolyFn f) {
  return [&ctx, f = std::move(f)](const WaveVector& v) {
    WaveVector out;
    for (const auto& [n, rad] : v.entries()) {
      Poly g = f(ctx.P(n));
      for (const auto& [j, c] : ctx.expand(g)) out.add_term(j, rad.scaled(c));
    }
    return out;
  };
}

namespace {

Op radial_map(RadialFunction (RadialFunction::*method)() const) {
  return [method](const WaveVector& v) {
    WaveVector out;
    for (const auto& [n, rad] : v.entries()) out.add_term(n, (rad.*method)());
    return out;
  };
}

}  // namespace

Op radial_d_dy() { return radial_map(&RadialFunction::d_dy); }
Op radial_mul_y() { return radial_map(&RadialFunction::times_y); }
Op radial_div_y() { return radial_map(&RadialFunction::div_y); }

PolyFn affine_q(const ModelContext& ctx, const Rat& c0, const Rat& c1) {
  const Rat alpha = ctx.params().alpha;
  const Rat beta = ctx.params().beta;
  return [alpha, beta, c0, c1](const Poly& f) {
    return f.scaled(c0) + apply_q_tilde(alpha, beta, f).scaled(c1);
  };
}

Op q_tilde_op(const ModelContext& ctx) {
  return angular_op(ctx, affine_q(ctx, Rat(0), Rat(1)));
}

Op hamiltonian_y(const ModelContext& ctx) {
  const Rat omega = ctx.params().omega;
  const Rat k2 = ctx.k() * ctx.k();
  Op d = radial_d_dy();
  Op qt2 = angular_op(ctx, [&ctx](const Poly& f) {
    const Rat alpha = ctx.params().alpha;
    const Rat beta = ctx.params().beta;
    return apply_q_tilde(alpha, beta, apply_q_tilde(alpha, beta, f));
  });
  Op sum = op_scale(Rat(-4), op_compose(radial_mul_y(), op_compose(d, d)));
  sum = op_add(std::move(sum), op_scale(Rat(-4), d));
  sum = op_add(std::move(sum), radial_mul_y());
  sum = op_add(std::move(sum), op_scale(k2, op_compose(radial_div_y(), qt2)));
  return op_scale(omega, std::move(sum));
}

Op j_plus_op(const ModelContext& ctx) {
  const Rat alpha = ctx.params().alpha;
  const Rat beta = ctx.params().beta;
  return angular_op(ctx, [alpha, beta](const Poly& f) {
    Poly u = apply_q_tilde(alpha, beta, f).scaled(Rat(2)) + f;
    Poly v = Poly::monomial(1) * u +
             (Poly::constant(Rat(1)) - Poly::monomial(1)) * u.reflected();
    return v + f.scaled(alpha + beta);
  });
}

Op j_minus_op(const ModelContext& ctx) {
  const Rat alpha = ctx.params().alpha;
  const Rat beta = ctx.params().beta;
  return angular_op(ctx, [alpha, beta](const Poly& f) {
    Poly u = apply_q_tilde(alpha, beta, f).scaled(Rat(2)) - f;
    Poly v = Poly::monomial(1) * u -
             (Poly::constant(Rat(1)) - Poly::monomial(1)) * u.reflected();
    return v + f.scaled(alpha - beta);
  });
}

Op j_power_minus(const ModelContext& ctx, int ell) {
  Op block = op_compose(j_minus_op(ctx), j_plus_op(ctx));
  return op_power(block, ell);
}

Op j_power_plus(const ModelContext& ctx, int ell) {
  Op block = op_compose(j_plus_op(ctx), j_minus_op(ctx));
  return op_power(block, ell);
}

namespace {

Rat ksign_value(KSign s) { return s == KSign::PlusKQ ? Rat(1) : Rat(-1); }

// The energy-free part of the ladder factor at shift 2j:
//   (1 + s kQ + 2j) d/dy - (1/2y)(s kQ + 2j)(s kQ + 2j + 1)
Op k_factor_body(const ModelContext& ctx, KSign sign, int j) {
  Rat sk = ksign_value(sign) * ctx.k();
  Op first = op_compose(angular_op(ctx, affine_q(ctx, Rat(1 + 2 * j), sk)),
                        radial_d_dy());
  PolyFn b1 = affine_q(ctx, Rat(2 * j), sk);
  PolyFn b2 = affine_q(ctx, Rat(2 * j + 1), sk);
  Op second = op_compose(
      radial_div_y(),
      angular_op(ctx, [b1, b2](const Poly& f) { return b1(b2(f)); }));
  return op_add(std::move(first), op_scale(rat(-1, 2), std::move(second)));
}

}  // namespace

Op k_factor_e(const ModelContext& ctx, KSign sign, int j, const Rat& energy) {
  Rat e = energy / (Rat(4) * ctx.params().omega);
  return op_add(k_factor_body(ctx, sign, j), op_scale(e, op_identity()));
}

Op k_power_e(const ModelContext& ctx, KSign sign, int p, const Rat& energy) {
  Op out = op_identity();
  for (int j = 0; j < p; ++j)
    out = op_compose(k_factor_e(ctx, sign, j, energy), out);
  return out;
}

Op k_power_h(const ModelContext& ctx, KSign sign, int p) {
  // Expand prod_j (A_j + E/4w) over subsets of factors taking the energy
  // term, push the scalar to the right, then substitute the Hamiltonian.
  const Rat inv4w = Rat(1) / (Rat(4) * ctx.params().omega);
  Op h = hamiltonian_y(ctx);
  Op sum = [](const WaveVector&) { return WaveVector(); };
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    int taken = __builtin_popcount(mask);
    Op term = op_power(h, taken);
    for (int j = 0; j < p; ++j) {
      if (mask & (1u << j)) continue;
      term = op_compose(k_factor_body(ctx, sign, j), term);
    }
    sum = op_add(std::move(sum), op_scale(pow_rat(inv4w, taken), term));
  }
  return sum;
}

Op k_factor_closed(const ModelContext& ctx, KSign sign, int ell) {
  // (s kQ + 2l - 1) d/dy + H/4w
  //   - (1/2y)[k^2 Q^2 + (2l-1) s kQ + 2l(l-1)]
  const Rat sk = ksign_value(sign) * ctx.k();
  const Rat inv4w = Rat(1) / (Rat(4) * ctx.params().omega);
  Op first = op_compose(angular_op(ctx, affine_q(ctx, Rat(2 * ell - 1), sk)),
                        radial_d_dy());
  Op hterm = op_scale(inv4w, hamiltonian_y(ctx));
  const Rat c0 = Rat(2 * ell) * Rat(ell - 1);
  const Rat c1 = Rat(2 * ell - 1) * sk;
  const Rat c2 = sk * sk;
  Op poly_part = angular_op(ctx, [&ctx, c0, c1, c2](const Poly& f) {
    const Rat alpha = ctx.params().alpha;
    const Rat beta = ctx.params().beta;
    Poly qf = apply_q_tilde(alpha, beta, f);
    Poly qqf = apply_q_tilde(alpha, beta, qf);
    return f.scaled(c0) + qf.scaled(c1) + qqf.scaled(c2);
  });
  Op second = op_compose(radial_div_y(), std::move(poly_part));
  return op_add(op_add(std::move(first), std::move(hterm)),
                op_scale(rat(-1, 2), std::move(second)));
}

RadialFunction k_step_explicit(const Rat& gamma_coeff, const Rat& energy,
                               const Rat& omega, const RadialFunction& f) {
  // (1+g) d/dy + E/(4w) - (1/2y) g(1+g), applied with explicit exponent
  // label g in place of the angular operator.
  RadialFunction out = f.d_dy().scaled(Rat(1) + gamma_coeff);
  out = out + f.scaled(energy / (Rat(4) * omega));
  out = out - f.div_y().scaled(gamma_coeff * (Rat(1) + gamma_coeff) / 2);
  return out;
}

}  // namespace refosc
