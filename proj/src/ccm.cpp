#include "refosc/ccm.hpp"

#include "refosc/errors.hpp"
#include "refosc/spectrum.hpp"

namespace refosc {

CoulombModel ccm_map(const Params& params, const Rat& g) {
  params.validate();
  if (g == 0) throw ParameterOutOfRange("coupling g must be nonzero");
  return CoulombModel{params, g};
}

namespace {

Rat abs_g(const CoulombModel& cm) { return abs(cm.g); }

Rat k_abs_a(const CoulombModel& cm, int n) {
  return cm.source.k() *
         abs(angular_eigenvalue(n, cm.source.alpha, cm.source.beta));
}

}  // namespace

Rat coulomb_scale(const CoulombModel& cm, int m, int n) {
  return Rat(2) * abs_g(cm) / (Rat(2 * m) + k_abs_a(cm, n) + 1);
}

Rat coulomb_energy_derived(const CoulombModel& cm, int m, int n) {
  Rat s = coulomb_scale(cm, m, n);
  return -s * s / 4;
}

Rat coulomb_energy_quantization_printed(const CoulombModel& cm, int m, int n) {
  Rat d = Rat(4 * m) + k_abs_a(cm, n) + 2;
  return Rat(-16) * cm.g * cm.g / (d * d);
}

Rat coulomb_energy_printed(const CoulombModel& cm, int m, int n) {
  Rat d = Rat(4 * m) + k_abs_a(cm, n) + 2;
  return Rat(-8) * cm.g * cm.g / (d * d);
}

Op coulomb_hamiltonian(const ModelContext& ctx, const Rat& s, const Rat& g) {
  const Rat s2 = s * s;
  const Rat quarter_k2 = ctx.k() * ctx.k() / 4;
  Op d = radial_d_dy();
  Op qt = q_tilde_op(ctx);
  Op sum = op_compose(d, d);
  sum = op_add(std::move(sum), op_compose(radial_div_y(), d));
  sum = op_add(std::move(sum),
               op_scale(-quarter_k2,
                        op_compose(radial_div_y(),
                                   op_compose(radial_div_y(),
                                              op_compose(qt, qt)))));
  Op out = op_scale(-s2, std::move(sum));
  // attractive branch: coupling -|g|
  out = op_add(std::move(out), op_scale(-abs(g) * s, radial_div_y()));
  return out;
}

WaveVector coulomb_eigen_residual(const ModelContext& ctx,
                                  const CoulombModel& cm, int m, int n,
                                  const Rat& candidate_energy) {
  Rat s = coulomb_scale(cm, m, n);
  Op h = coulomb_hamiltonian(ctx, s, cm.g);
  WaveVector psi = basis_state(ctx, m, n);
  return h(psi) - psi.scaled(candidate_energy);
}

WaveVector ccm_round_trip_residual(const CoulombModel& cm, int m, int n) {
  // The mapped state, read back in the oscillator picture, belongs to the
  // model with omega equal to the scale; its energy must equal 4|g|.
  Params back = cm.source;
  back.omega = coulomb_scale(cm, m, n);
  ModelContext ctx(back);
  ctx.ensure_depth(n);
  WaveVector psi = basis_state(ctx, m, n);
  Op h = hamiltonian_y(ctx);
  return h(psi) - psi.scaled(Rat(4) * abs_g(cm));
}

}  // namespace refosc
