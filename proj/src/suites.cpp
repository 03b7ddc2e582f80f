#include "refosc/suites.hpp"

#include <memory>
#include <sstream>

#include "refosc/ccm.hpp"
#include "refosc/errors.hpp"
#include "refosc/operators.hpp"
#include "refosc/radial.hpp"
#include "refosc/spectrum.hpp"
#include "refosc/symmetry.hpp"

namespace refosc {

std::vector<Suite> parse_suites(const std::string& name) {
  if (name == "all")
    return {Suite::Orthopoly, Suite::Ladders, Suite::Integrals, Suite::Adjoint,
            Suite::Algebra, Suite::Appendix, Suite::Ccm};
  if (name == "orthopoly") return {Suite::Orthopoly};
  if (name == "ladders") return {Suite::Ladders};
  if (name == "integrals") return {Suite::Integrals};
  if (name == "adjoint") return {Suite::Adjoint};
  if (name == "algebra") return {Suite::Algebra};
  if (name == "appendix") return {Suite::Appendix};
  if (name == "ccm") return {Suite::Ccm};
  throw ParameterOutOfRange("unknown suite: " + name);
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Orthopoly: return "orthopoly";
    case Suite::Ladders: return "ladders";
    case Suite::Integrals: return "integrals";
    case Suite::Adjoint: return "adjoint";
    case Suite::Algebra: return "algebra";
    case Suite::Appendix: return "appendix";
    case Suite::Ccm: return "ccm";
  }
  return "?";
}

int required_depth(const Params& params, const std::vector<Suite>& suites,
                   const Bounds& bounds) {
  const int p = static_cast<int>(params.p);
  const int q = static_cast<int>(params.q);
  int depth = bounds.n_max + 2;
  for (Suite s : suites) {
    if (s == Suite::Algebra) {
      int grid_n = 2 * (2 * p + 4 * q) + 1;
      depth = std::max(depth, std::max(bounds.n_max, grid_n) + 2 * q + 2);
    }
    if (s == Suite::Appendix || s == Suite::Ladders)
      depth = std::max(depth, bounds.n_max + 2 * std::max(q, 3) + 2);
    if (s == Suite::Adjoint) depth = std::max(depth, bounds.n_max + 2 * q + 2);
  }
  return depth;
}

namespace {

std::string rs(const Rat& r) { return to_string(r); }

std::string wv_str(const WaveVector& w) { return w.str(); }

CheckState st(int m, int n) { return CheckState{m, n}; }

// ---------------------------------------------------------------- orthopoly

void jobs_orthopoly(const ModelContext& ctx, const Bounds& bounds,
                    const std::string& pre, std::vector<CheckJob>& out) {
  const Rat alpha = ctx.params().alpha, beta = ctx.params().beta;
  for (int n = 0; n <= bounds.n_max; ++n) {
    out.push_back(
        {pre + "orthopoly/qtilde-eigen/n=" + std::to_string(n), "eq:3.23",
         [&ctx, alpha, beta, n]() {
           Poly lhs = apply_q_tilde(alpha, beta, ctx.P(n));
           Rat an = angular_eigenvalue(n, alpha, beta);
           Poly rhs = ctx.P(n).scaled(an);
           return make_check("", "", lhs == rhs, lhs.str(),
                             rs(an) + " * P_" + std::to_string(n),
                             st(-1, n));
         }});
  }
  int agree_max = std::min(bounds.n_max, 8);
  for (int n = 0; n <= agree_max; ++n) {
    out.push_back(
        {pre + "orthopoly/construction-agreement/n=" + std::to_string(n),
         "eq:3.25",
         [&ctx, alpha, beta, n]() {
           Poly viaM = little_jacobi_via_moments(n, alpha, beta);
           bool ok = viaM == ctx.P(n);
           return make_check("", "", ok, viaM.str(), ctx.P(n).str(),
                             st(-1, n));
         }});
  }
  for (int n = 0; n <= std::min(bounds.n_max, 9); ++n) {
    out.push_back(
        {pre + "orthopoly/series-crosscheck/n=" + std::to_string(n),
         n % 2 == 0 ? "eq:3.25" : "eq:3.26",
         [&ctx, alpha, beta, n]() {
           Poly series = little_jacobi_series_printed(n, alpha, beta);
           bool same = series == ctx.P(n);
           if (n % 2 == 0 || same)
             return make_check("", "", same, series.str(), ctx.P(n).str(),
                               st(-1, n));
           // Known odd-branch misprint: keep the delta on record without
           // failing the run.
           Check c = make_deviation(
               "", "", series.str(), ctx.P(n).str(),
               "printed odd-degree series is not the monic eigenpolynomial");
           c.state = st(-1, n);
           return c;
         }});
  }
  for (int m = 0; m <= bounds.m_max + 2; ++m) {
    out.push_back(
        {pre + "orthopoly/laguerre-ode/m=" + std::to_string(m), "eq:3.12",
         [&ctx, m]() {
           Rat gamma = ctx.gamma_n(1);
           Poly L = laguerre(m, gamma);
           Poly y = Poly::monomial(1);
           Poly lhs = y * L.derivative().derivative() +
                      (Poly::constant(gamma + 1) - y) * L.derivative() +
                      L.scaled(Rat(m));
           return make_check("", "", lhs.is_zero(), lhs.str("y"), "0",
                             st(m, -1));
         }});
  }
}

// ---------------------------------------------------------------- integrals

void jobs_integrals(const ModelContext& ctx, const Bounds& bounds,
                    const std::string& pre, std::vector<CheckJob>& out) {
  const Rat alpha = ctx.params().alpha, beta = ctx.params().beta;
  const Rat omega = ctx.params().omega;
  out.push_back({pre + "integrals/moment-mu0", "eq:3.28", [alpha, beta]() {
                   Amount mu0 = weight_moment(0, alpha, beta);
                   Amount expect = Amount::symbol(Sym{SymKind::BetaEven, Rat(0)});
                   return make_check("", "", mu0 == expect, mu0.str(),
                                     expect.str());
                 }});
  out.push_back({pre + "integrals/moment-mu1", "eq:3.28", [alpha, beta]() {
                   Amount mu1 = weight_moment(1, alpha, beta);
                   Amount expect =
                       Amount::symbol(Sym{SymKind::BetaEven, Rat(0)},
                                      (alpha + 1) / (alpha + beta + 2));
                   return make_check("", "", mu1 == expect, mu1.str(),
                                     expect.str());
                 }});
  int orth_max = std::min(bounds.n_max, 10);
  for (int m = 0; m < orth_max; ++m)
    for (int n = m + 1; n <= orth_max; ++n) {
      out.push_back(
          {pre + "integrals/p-orthogonality/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "eq:3.28",
           [&ctx, alpha, beta, m, n]() {
             Amount ip = angular_inner(ctx.P(m), ctx.P(n), alpha, beta);
             return make_check("", "", ip.is_zero(), ip.str(), "0", st(m, n));
           }});
    }
  for (int n = 0; n <= orth_max; ++n) {
    out.push_back(
        {pre + "integrals/norm-ratio/n=" + std::to_string(n), "eq:Nn",
         [&ctx, alpha, beta, n]() {
           Rat lhs = ctx.norm_ratio(n);
           Rat rhs = norm_ratio_closed_form(n, alpha, beta);
           return make_check("", "", lhs == rhs, rs(lhs), rs(rhs), st(-1, n));
         }});
  }
  int rad_max = std::min(bounds.m_max + 2, 8);
  for (int m = 0; m <= rad_max; ++m)
    for (int mp = m + 1; mp <= rad_max; ++mp) {
      out.push_back(
          {pre + "integrals/radial-orthogonality/m=" + std::to_string(m) +
               "/m2=" + std::to_string(mp),
           "eq:3.38",
           [&ctx, m, mp]() {
             Rat gamma = ctx.gamma_n(2);
             Amount ip = radial_inner(laguerre_state(m, gamma),
                                      laguerre_state(mp, gamma));
             return make_check("", "", ip.is_zero(), ip.str(), "0",
                               st(m, mp));
           }});
    }
  for (int m = 0; m <= rad_max; ++m) {
    out.push_back(
        {pre + "integrals/radial-norm/m=" + std::to_string(m), "eq:3.39",
         [&ctx, omega, m]() {
           Rat gamma = ctx.gamma_n(1);
           Amount ip = radial_inner(laguerre_state(m, gamma),
                                    laguerre_state(m, gamma));
           // norm^2 * M^2 must equal 2*omega exactly
           Amount m2 = radial_norm_sq(m, gamma, omega);
           auto ips = ip.single();
           auto m2s = m2.single();
           bool ok = false;
           std::string lhs = "?";
           if (ips && m2s) {
             // the Gamma parts cancel: either both sides reduced to plain
             // rationals (integer gamma) or Gamma(t) pairs with 1/Gamma(t)
             bool cancel =
                 (ips->first.kind == SymKind::One &&
                  m2s->first.kind == SymKind::One) ||
                 (ips->first.kind == SymKind::Gamma &&
                  m2s->first.kind == SymKind::GammaInv &&
                  ips->first.tag == m2s->first.tag);
             ok = cancel && ips->second * m2s->second == 2 * omega;
             lhs = rs(Rat(ips->second * m2s->second));
           }
           return make_check("", "", ok, lhs, rs(Rat(2 * omega)), st(m, -1));
         }});
  }
  out.push_back(
      {pre + "integrals/x0-norm-convention", "eq:3.36", [alpha, beta]() {
         double b = Amount::symbol(Sym{SymKind::BetaEven, Rat(0)})
                        .to_double(to_double(alpha), to_double(beta));
         double printed =
             std::exp(std::lgamma(to_double(alpha) / 2 +
                                  to_double(beta) / 2 + 1) -
                      std::lgamma(to_double(alpha) / 2 + 1) -
                      std::lgamma(to_double(beta) / 2 + 1));
         std::ostringstream lhs, rhs;
         lhs << "N0^2 printed = " << printed;
         rhs << "N0^2 unit-norm = " << 1.0 / b;
         return make_deviation(
             "", "", lhs.str(), rhs.str(),
             "printed normalization does not give a unit-norm ground angular "
             "state; the Beta-based value is used and only ratios enter "
             "verification");
       }});
  // the two printed closed forms of the energy differ by a halved
  // parameter shift; the eigen-checked form is the authority
  out.push_back({pre + "integrals/energy-forms", "sec:4", [&ctx]() {
                   const Params& p = ctx.params();
                   bool ok = true;
                   for (int m = 0; m <= 9 && ok; ++m)
                     for (int n = 0; n <= 9 && ok; ++n) {
                       Rat e1 = energy(m, n, p);
                       Rat e2 = (2 * p.omega / Rat(p.q)) *
                                (Rat(2 * m * p.q) + Rat(p.p) * n +
                                 Rat(p.p) * (p.alpha + p.beta + 1) / 2 +
                                 p.q);
                       ok = e1 == e2;
                     }
                   return make_check("", "", ok,
                                     "2w[2m + k(n+(a+b+1)/2) + 1]",
                                     "(2w/q)(2mq + pn + p(a+b+1)/2 + q)", {},
                                     "the printed display carries p(a+b+1) "
                                     "unhalved; the halved form matches the "
                                     "eigen-checked spectrum");
                 }});
}

// ------------------------------------------------------------------ ladders

void jobs_ladders(const ModelContext& ctx, const Bounds& bounds,
                  const std::string& pre, std::vector<CheckJob>& out) {
  const Rat omega = ctx.params().omega;
  for (int n = 0; n <= bounds.n_max; ++n) {
    out.push_back(
        {pre + "ladders/jplus-action/n=" + std::to_string(n), "sec:4.2",
         [&ctx, n]() {
           WaveVector got = j_plus_op(ctx)(basis_state(ctx, 0, n));
           Rat c = j_plus_step_coeff(ctx, n);
           int tgt = n % 2 == 0 ? n - 1 : n + 1;
           WaveVector expect;
           if (c != 0)
             expect.add_term(tgt, laguerre_state(0, ctx.gamma_n(n)).scaled(c));
           return make_check("", "", got == expect, wv_str(got),
                             wv_str(expect), st(0, n));
         }});
    out.push_back(
        {pre + "ladders/jminus-action/n=" + std::to_string(n), "sec:4.2",
         [&ctx, n]() {
           WaveVector got = j_minus_op(ctx)(basis_state(ctx, 0, n));
           Rat c = j_minus_step_coeff(ctx, n);
           int tgt = n % 2 == 0 ? n + 1 : n - 1;
           WaveVector expect;
           if (c != 0)
             expect.add_term(tgt, laguerre_state(0, ctx.gamma_n(n)).scaled(c));
           return make_check("", "", got == expect, wv_str(got),
                             wv_str(expect), st(0, n));
         }});
    out.push_back(
        {pre + "ladders/j-anticommutator/n=" + std::to_string(n), "eq:JpmQ",
         [&ctx, n]() {
           Op qt = q_tilde_op(ctx);
           Op jp = j_plus_op(ctx), jm = j_minus_op(ctx);
           WaveVector psi = basis_state(ctx, 0, n);
           WaveVector lp = op_anticommutator(jp, qt)(psi) + jp(psi);
           WaveVector lm = op_anticommutator(jm, qt)(psi) - jm(psi);
           bool ok = lp.is_zero() && lm.is_zero();
           return make_check("", "", ok, wv_str(lp) + " ; " + wv_str(lm),
                             "0 ; 0", st(0, n));
         }});
  }
  // one-step radial ladders against their tabulated actions
  for (int m = 0; m <= bounds.m_max; ++m)
    for (int n = 0; n <= std::min(bounds.n_max, 5); ++n) {
      out.push_back(
          {pre + "ladders/k-step-raise-gamma/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "sec:4.1",
           [&ctx, omega, m, n]() {
             Rat gamma = ctx.gamma_n(n);
             Rat e = energy(m, n, ctx.params());
             RadialFunction got =
                 k_step_explicit(gamma, e, omega, laguerre_state(m, gamma));
             RadialFunction expect =
                 m == 0 ? RadialFunction::zero()
                        : laguerre_state(m - 1, gamma + 2).scaled(Rat(-1));
             return make_check("", "", got == expect, got.str(), expect.str(),
                               st(m, n),
                               "energy term enters with +E/(4w); the printed "
                               "sign fails this action");
           }});
      out.push_back(
          {pre + "ladders/k-step-lower-gamma/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "sec:4.1",
           [&ctx, omega, m, n]() {
             Rat gamma = ctx.gamma_n(n);
             Rat e = energy(m, n, ctx.params());
             RadialFunction got =
                 k_step_explicit(-gamma, e, omega, laguerre_state(m, gamma));
             RadialFunction expect =
                 RadialFunction(gamma - 2, laguerre_series(m + 1, gamma - 2))
                     .scaled(-Rat(m + 1) * (gamma + m));
             return make_check("", "", got == expect, got.str(), expect.str(),
                               st(m, n));
           }});
    }
  out.push_back(
      {pre + "ladders/k-step-printed-sign", "sec:4.1", [&ctx, omega]() {
         // the ladder with -E/(4w), applied at m=0: does not annihilate
         Rat gamma = ctx.gamma_n(1);
         Rat e = energy(0, 1, ctx.params());
         RadialFunction f = laguerre_state(0, gamma);
         RadialFunction printed = f.d_dy().scaled(Rat(1) + gamma) -
                                  f.scaled(e / (4 * omega)) -
                                  f.div_y().scaled(gamma * (1 + gamma) / 2);
         return make_deviation(
             "", "", printed.str(), "0",
             "raising ladder as printed does not annihilate the bottom "
             "state; the +E/(4w) convention does");
       }});
  // branch selection of the operator-substituted ladder
  for (int m = 0; m <= std::min(bounds.m_max, 3); ++m)
    for (int n = 0; n <= std::min(bounds.n_max, 5); ++n) {
      out.push_back(
          {pre + "ladders/k-branch/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "eq:kQ",
           [&ctx, omega, m, n]() {
             Rat e = energy(m, n, ctx.params());
             WaveVector got =
                 k_factor_e(ctx, KSign::PlusKQ, 0, e)(basis_state(ctx, m, n));
             Rat gamma = ctx.gamma_n(n);
             Rat coeff_sign = n % 2 == 0 ? -gamma : gamma;
             RadialFunction expect = k_step_explicit(
                 coeff_sign, e, omega, laguerre_state(m, gamma));
             WaveVector ew;
             ew.add_term(n, expect);
             return make_check("", "", got == ew, wv_str(got), wv_str(ew),
                               st(m, n));
           }});
    }
  // p-fold ladder actions and the two routes to the H-substituted power
  for (int m = 0; m <= std::min(bounds.m_max, 4); ++m)
    for (int n = 0; n <= std::min(bounds.n_max, 5); ++n)
      for (KSign sign : {KSign::PlusKQ, KSign::MinusKQ}) {
        std::string sname = sign == KSign::PlusKQ ? "pluskq" : "minuskq";
        out.push_back(
            {pre + "ladders/k-power-action/" + sname +
                 "/m=" + std::to_string(m) + "/n=" + std::to_string(n),
             "sec:4.1",
             [&ctx, sign, m, n]() {
               const int p = ctx.params().p;
               Rat e = energy(m, n, ctx.params());
               WaveVector got =
                   k_power_e(ctx, sign, p, e)(basis_state(ctx, m, n));
               Rat gamma = ctx.gamma_n(n);
               bool lowers_m = (sign == KSign::PlusKQ) == (n % 2 != 0);
               WaveVector expect;
               if (lowers_m) {
                 if (m >= p)
                   expect.add_term(
                       n, laguerre_state(m - p, gamma + 2 * p)
                              .scaled(pow_rat(rat(-1), p)));
               } else {
                 Rat coeff = pow_rat(rat(-1), p) * pochhammer(Rat(m + 1), p) *
                             pochhammer(gamma + m - p + 1, p);
                 expect.add_term(
                     n, RadialFunction(gamma - 2 * p,
                                       laguerre_series(m + p, gamma - 2 * p))
                            .scaled(coeff));
               }
               return make_check("", "", got == expect, wv_str(got),
                                 wv_str(expect), st(m, n));
             }});
        out.push_back(
            {pre + "ladders/k-route-equivalence/" + sname +
                 "/m=" + std::to_string(m) + "/n=" + std::to_string(n),
             "eq:kQH",
             [&ctx, sign, m, n]() {
               const int p = ctx.params().p;
               Rat e = energy(m, n, ctx.params());
               WaveVector psi = basis_state(ctx, m, n);
               WaveVector via_e = k_power_e(ctx, sign, p, e)(psi);
               WaveVector via_h = k_power_h(ctx, sign, p)(psi);
               return make_check("", "", via_e == via_h, wv_str(via_e),
                                 wv_str(via_h), st(m, n));
             }});
      }
  // eigen-exactness of the y-form Hamiltonian
  for (int m = 0; m <= bounds.m_max; ++m)
    for (int n = 0; n <= bounds.n_max; ++n) {
      out.push_back(
          {pre + "ladders/h-eigen/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "eq:3.31",
           [&ctx, m, n]() {
             WaveVector psi = basis_state(ctx, m, n);
             Rat e = energy(m, n, ctx.params());
             WaveVector res = hamiltonian_y(ctx)(psi) - psi.scaled(e);
             return make_check("", "", res.is_zero(), wv_str(res), "0",
                               st(m, n), "E = " + rs(e));
           }});
    }
}

// ------------------------------------------------------------------ adjoint

void jobs_adjoint(const ModelContext& ctx, const Bounds& bounds,
                  const std::string& pre, std::vector<CheckJob>& out) {
  for (int m = 0; m <= bounds.m_max; ++m)
    for (int n = 0; n <= bounds.n_max; ++n) {
      out.push_back(
          {pre + "adjoint/ratio/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "sec:4.3",
           [&ctx, m, n]() {
             auto sides = adjoint_ratio_sides(ctx, m, n);
             if (!sides) {
               Check c = make_check("", "", true, "0", "0", st(m, n),
                                    "vacuous: transition annihilated");
               return c;
             }
             return make_check("", "", sides->first == sides->second,
                               rs(sides->first), rs(sides->second), st(m, n));
           }});
    }
}

// ------------------------------------------------------------------ algebra

void jobs_algebra(const ModelContext& ctx, const Bounds& bounds,
                  const std::string& pre, std::vector<CheckJob>& out) {
  const int q = ctx.params().q;
  for (int m = 0; m <= bounds.m_max; ++m)
    for (int n = 0; n <= bounds.n_max; ++n) {
      out.push_back(
          {pre + "algebra/xi-action/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "eq:xidef",
           [&ctx, m, n]() {
             WaveVector w1 = xi1_op(ctx)(basis_state(ctx, m, n));
             WaveVector w2 = xi2_op(ctx)(basis_state(ctx, m, n));
             Transition t1 = xi1_expected(ctx, m, n);
             Transition t2 = xi2_expected(ctx, m, n);
             WaveVector e1 = t1.coeff == 0
                                 ? WaveVector()
                                 : basis_state(ctx, t1.m, t1.n).scaled(t1.coeff);
             WaveVector e2 = t2.coeff == 0
                                 ? WaveVector()
                                 : basis_state(ctx, t2.m, t2.n).scaled(t2.coeff);
             bool ok = w1 == e1 && w2 == e2;
             return make_check("", "", ok, wv_str(w1) + " ; " + wv_str(w2),
                               wv_str(e1) + " ; " + wv_str(e2), st(m, n),
                               "Xi1 pairs the +kQ ladder with the (J-J+)^q "
                               "block (the displayed pairing is swapped)");
           }});
      out.push_back(
          {pre + "algebra/xi-coefficient-closed/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "eq:lm",
           [&ctx, m, n]() {
             Transition t1 = xi1_expected(ctx, m, n);
             Transition t2 = xi2_expected(ctx, m, n);
             bool even = n % 2 == 0;
             std::optional<Rat> c1 =
                 even ? ell_minus_closed(ctx, m, n)
                      : std::optional<Rat>(ell_plus_closed(ctx, m, n));
             std::optional<Rat> c2 =
                 even ? std::optional<Rat>(ell_plus_closed(ctx, m, n))
                      : ell_minus_tilde_closed(ctx, m, n);
             // closed forms give the coefficient of an in-range target;
             // out-of-range targets are annihilated by the chain itself
             bool ok = true;
             std::ostringstream lhs, rhs;
             if (c1 && t1.coeff != 0) {
               ok = ok && *c1 == t1.coeff;
               lhs << rs(*c1);
               rhs << rs(t1.coeff);
             }
             lhs << " ; ";
             rhs << " ; ";
             if (c2 && t2.coeff != 0) {
               ok = ok && *c2 == t2.coeff;
               lhs << rs(*c2);
               rhs << rs(t2.coeff);
             }
             std::string note =
                 (!c1 || !c2) ? "denominator Pochhammer vanishes; compared "
                                "where defined"
                              : "";
             return make_check("", "", ok, lhs.str(), rhs.str(), st(m, n),
                               note);
           }});
      out.push_back(
          {pre + "algebra/xi-energy-preservation/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "sec:4",
           [&ctx, m, n]() {
             Transition t1 = xi1_expected(ctx, m, n);
             Transition t2 = xi2_expected(ctx, m, n);
             Rat e = energy(m, n, ctx.params());
             bool ok = (t1.coeff == 0 ||
                        energy(t1.m, t1.n, ctx.params()) == e) &&
                       (t2.coeff == 0 ||
                        energy(t2.m, t2.n, ctx.params()) == e);
             return make_check("", "", ok, rs(e), rs(e), st(m, n));
           }});
      out.push_back(
          {pre + "algebra/q-commutator/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "sec:4.4",
           [&ctx, q, m, n]() {
             Op qt = q_tilde_op(ctx);
             Op x1 = xi1_op(ctx), x2 = xi2_op(ctx);
             WaveVector psi = basis_state(ctx, m, n);
             WaveVector r1 =
                 op_commutator(x1, qt)(psi) - x1(psi).scaled(Rat(-2 * q));
             WaveVector r2 =
                 op_commutator(x2, qt)(psi) - x2(psi).scaled(Rat(2 * q));
             bool ok = r1.is_zero() && r2.is_zero();
             return make_check("", "", ok, wv_str(r1) + " ; " + wv_str(r2),
                               "0 ; 0", st(m, n));
           }});
    }
  // multiplet closure under the (m+p, n-2q) shift
  out.push_back({pre + "algebra/multiplet-shift", "eq:mpmp", [&ctx, bounds]() {
                   const int p = ctx.params().p, q2 = 2 * ctx.params().q;
                   auto levels =
                       multiplets(ctx.params(), bounds.m_max + p, bounds.n_max);
                   bool ok = true;
                   for (const auto& lev : levels)
                     for (auto [m, n] : lev.members) {
                       if (n < q2 || m + p > bounds.m_max + p) continue;
                       auto probe = std::make_pair(m + p, n - q2);
                       bool found = false;
                       for (auto mn : lev.members)
                         if (mn == probe) found = true;
                       ok = ok && found;
                     }
                   return make_check("", "", ok, "shift closure", "holds");
                 }});

  // Structure polynomials are computed here, at build time: the grid
  // evaluation is itself an OpenMP kernel and runs best outside the job
  // sweep. Jobs share the result.
  struct Memo {
    std::optional<StructureResult> result;
    std::string error;
  };
  auto memo = std::make_shared<Memo>();
  try {
    memo->result = structure_polynomial(ctx);
  } catch (const std::exception& e) {
    memo->error = e.what();
  }
  auto get_sr = [memo]() -> const StructureResult& {
    if (!memo->result) throw VerificationFailure(memo->error);
    return *memo->result;
  };

  out.push_back(
      {pre + "algebra/structure-interpolation", "eq:x1x2e", [&ctx, get_sr]() {
         const StructureResult& sr = get_sr();
         const int p = ctx.params().p, q2 = ctx.params().q;
         bool ok = sr.parity_consistent_comm && sr.parity_consistent_anti &&
                   sr.commutator.degree_x() <= 2 * p &&
                   sr.commutator.degree_y() <= 2 * p + 4 * q2 &&
                   sr.anticommutator.degree_x() <= 2 * p &&
                   sr.anticommutator.degree_y() <= 2 * p + 4 * q2;
         std::ostringstream lhs;
         lhs << "deg_H=" << sr.commutator.degree_x()
             << " deg_Q=" << sr.commutator.degree_y()
             << " parity=" << sr.parity_consistent_comm << " ; anti deg_H="
             << sr.anticommutator.degree_x()
             << " deg_Q=" << sr.anticommutator.degree_y()
             << " parity=" << sr.parity_consistent_anti;
         return make_check("", "", ok, lhs.str(),
                           "deg_H <= 2p, deg_Q <= 2p+4q, branches agree");
       }});
  for (int m = 0; m <= std::min(bounds.m_max, 4); ++m)
    for (int n = 0; n <= std::min(bounds.n_max, 8); ++n) {
      out.push_back(
          {pre + "algebra/structure-predict/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "eq:x1x2",
           [&ctx, get_sr, m, n]() {
             const StructureResult& sr = get_sr();
             Op x1 = xi1_op(ctx), x2 = xi2_op(ctx);
             Rat dc = diagonal_value(ctx, op_commutator(x1, x2), m, n);
             Rat da = diagonal_value(ctx, op_anticommutator(x1, x2), m, n);
             Rat e = energy(m, n, ctx.params());
             Rat an = ctx.a(n);
             Rat pc = sr.commutator.eval(e, an);
             Rat pa = sr.anticommutator.eval(e, an);
             bool ok = dc == pc && da == pa;
             return make_check("", "", ok, rs(dc) + " ; " + rs(da),
                               rs(pc) + " ; " + rs(pa), st(m, n));
           }});
    }
  if (ctx.params().p == 1 && ctx.params().q == 1) {
    out.push_back(
        {pre + "algebra/structure-k1-printed", "sec:4.5", [&ctx, get_sr]() {
           const StructureResult& sr = get_sr();
           auto dc = term_diff(sr.commutator, k1_printed_commutator(ctx.params()));
           auto da = term_diff(sr.anticommutator,
                               k1_printed_anticommutator(ctx.params()));
           if (dc.empty() && da.empty())
             return make_check("", "", true, "printed forms match", "match");
           std::ostringstream os;
           os << "commutator diffs (H^i Q^j: derived vs printed):";
           for (const auto& d : dc)
             os << " [H^" << d.h << " Q^" << d.qpow << ": " << rs(d.lhs)
                << " vs " << rs(d.rhs) << "]";
           os << " ; anticommutator diffs:";
           for (const auto& d : da)
             os << " [H^" << d.h << " Q^" << d.qpow << ": " << rs(d.lhs)
                << " vs " << rs(d.rhs) << "]";
           return make_deviation("", "", sr.commutator.str("H", "Q"),
                                 k1_printed_commutator(ctx.params()).str("H", "Q"),
                                 os.str());
         }});
  }
}

// ----------------------------------------------------------------- appendix

void jobs_appendix(const ModelContext& ctx, const Bounds& bounds,
                   const std::string& pre, std::vector<CheckJob>& out) {
  const Rat w = ctx.params().omega;
  const Rat k2 = ctx.k() * ctx.k();
  const int p = ctx.params().p, q = ctx.params().q;
  for (int n = 0; n <= std::min(bounds.n_max, 6); ++n) {
    out.push_back(
        {pre + "appendix/al1/n=" + std::to_string(n), "eq:al1", [&ctx, n]() {
           // [J^{+,2}, Q^2] = -4 J^{+,2} (1 - Q) on the angular factor
           Op jp2 = j_power_plus(ctx, 1);
           Op qt = q_tilde_op(ctx);
           Op q2 = op_compose(qt, qt);
           WaveVector psi = basis_state(ctx, 0, n);
           WaveVector lhs = op_commutator(jp2, q2)(psi);
           WaveVector rhs = op_scale(
               Rat(-4),
               op_compose(jp2, angular_op(ctx, affine_q(ctx, Rat(1), Rat(-1)))))(
               psi);
           return make_check("", "", lhs == rhs, wv_str(lhs), wv_str(rhs),
                             st(0, n));
         }});
  }
  int am = std::min(bounds.m_max, 3), an = std::min(bounds.n_max, 5);
  for (int ell = 1; ell <= 3; ++ell)
    for (int m = 0; m <= am; ++m)
      for (int n = 0; n <= an; ++n) {
        out.push_back(
            {pre + "appendix/lemma1/plus/l=" + std::to_string(ell) +
                 "/m=" + std::to_string(m) + "/n=" + std::to_string(n),
             "lemma:A.1",
             [&ctx, w, k2, ell, m, n]() {
               Op jp = j_power_plus(ctx, ell);
               Op h = hamiltonian_y(ctx);
               WaveVector psi = basis_state(ctx, m, n);
               WaveVector lhs = op_commutator(jp, h)(psi);
               Op factor =
                   angular_op(ctx, affine_q(ctx, Rat(ell) * ell, Rat(-ell)));
               WaveVector rhs = op_scale(
                   Rat(-4) * w * k2,
                   op_compose(jp, op_compose(factor, radial_div_y())))(psi);
               return make_check("", "", lhs == rhs, wv_str(lhs), wv_str(rhs),
                                 st(m, n));
             }});
        out.push_back(
            {pre + "appendix/lemma1/minus/l=" + std::to_string(ell) +
                 "/m=" + std::to_string(m) + "/n=" + std::to_string(n),
             "lemma:A.1",
             [&ctx, w, k2, ell, m, n]() {
               // mirror identity for the (J-J+) blocks entering Xi1
               Op jm = j_power_minus(ctx, ell);
               Op h = hamiltonian_y(ctx);
               WaveVector psi = basis_state(ctx, m, n);
               WaveVector lhs = op_commutator(jm, h)(psi);
               Op factor =
                   angular_op(ctx, affine_q(ctx, Rat(ell) * ell, Rat(ell)));
               WaveVector rhs = op_scale(
                   Rat(-4) * w * k2,
                   op_compose(jm, op_compose(factor, radial_div_y())))(psi);
               return make_check("", "", lhs == rhs, wv_str(lhs), wv_str(rhs),
                                 st(m, n));
             }});
        for (KSign sign : {KSign::PlusKQ, KSign::MinusKQ}) {
          std::string sname = sign == KSign::PlusKQ ? "pluskq" : "minuskq";
          out.push_back(
              {pre + "appendix/lemma2/" + sname + "/l=" + std::to_string(ell) +
                   "/m=" + std::to_string(m) + "/n=" + std::to_string(n),
               "eq:indk",
               [&ctx, w, sign, ell, m, n]() {
                 Op kl = k_power_h(ctx, sign, ell);
                 Op h = hamiltonian_y(ctx);
                 WaveVector psi = basis_state(ctx, m, n);
                 WaveVector lhs = op_commutator(kl, h)(psi);
                 Rat sgn = sign == KSign::PlusKQ ? ctx.k() : -ctx.k();
                 Op factor = angular_op(
                     ctx, affine_q(ctx, Rat(ell) * ell, Rat(ell) * sgn));
                 WaveVector rhs = op_scale(
                     Rat(4) * w,
                     op_compose(op_compose(factor, radial_div_y()), kl))(psi);
                 return make_check("", "", lhs == rhs, wv_str(lhs),
                                   wv_str(rhs), st(m, n));
               }});
          out.push_back(
              {pre + "appendix/kqlh-factor/" + sname +
                   "/l=" + std::to_string(ell) + "/m=" + std::to_string(m) +
                   "/n=" + std::to_string(n),
               "eq:kqlh",
               [&ctx, sign, ell, m, n]() {
                 Op full = k_power_h(ctx, sign, ell);
                 Op prev = k_power_h(ctx, sign, ell - 1);
                 Op fact = k_factor_closed(ctx, sign, ell);
                 WaveVector psi = basis_state(ctx, m, n);
                 WaveVector lhs = full(psi);
                 WaveVector rhs = fact(prev(psi));
                 return make_check("", "", lhs == rhs, wv_str(lhs),
                                   wv_str(rhs), st(m, n),
                                   "factor numerator k2Q2+(2l-1)kQ+2l(l-1) "
                                   "with +H/(4w); the printed numerator "
                                   "fails already at l=1");
               }});
        }
      }
  for (int m = 0; m <= am; ++m)
    for (int n = 0; n <= an; ++n) {
      out.push_back(
          {pre + "appendix/theorem-termwise/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "thm:A.1",
           [&ctx, w, k2, p, q, m, n]() {
             // [Xi1,H] = J^{-,2q}[K^p,H] + [J^{-,2q},H]K^p; both terms
             // reduce via the lemmas and cancel exactly
             Op h = hamiltonian_y(ctx);
             Op jm = j_power_minus(ctx, q);
             Op kp = k_power_h(ctx, KSign::PlusKQ, p);
             WaveVector psi = basis_state(ctx, m, n);
             WaveVector term1 = jm(op_commutator(kp, h)(psi));
             WaveVector term2 = op_commutator(jm, h)(kp(psi));
             WaveVector lemma1 = op_scale(
                 Rat(4) * w,
                 op_compose(jm, op_compose(angular_op(ctx,
                                                      affine_q(ctx, Rat(p) * p,
                                                               Rat(p) * ctx.k())),
                                           radial_div_y())))(kp(psi));
             WaveVector lemma2 = op_scale(
                 Rat(-4) * w * k2,
                 op_compose(jm, op_compose(angular_op(ctx,
                                                      affine_q(ctx, Rat(q) * q,
                                                               Rat(q))),
                                           radial_div_y())))(kp(psi));
             bool ok = (term1 + term2).is_zero() && term1 == lemma1 &&
                       term2 == lemma2;
             return make_check("", "", ok, wv_str(term1 + term2), "0",
                               st(m, n));
           }});
      out.push_back(
          {pre + "appendix/xi-conservation/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "thm:A.1",
           [&ctx, m, n]() {
             Op h = hamiltonian_y(ctx);
             WaveVector psi = basis_state(ctx, m, n);
             WaveVector r1 = op_commutator(xi1_op(ctx), h)(psi);
             WaveVector r2 = op_commutator(xi2_op(ctx), h)(psi);
             bool ok = r1.is_zero() && r2.is_zero();
             return make_check("", "", ok, wv_str(r1) + " ; " + wv_str(r2),
                               "0 ; 0", st(m, n));
           }});
    }
}

// ---------------------------------------------------------------------- ccm

void jobs_ccm(const ModelContext& ctx, const Bounds& bounds,
              const std::string& pre, std::vector<CheckJob>& out) {
  const Rat g = Rat(1);
  CoulombModel cm = ccm_map(ctx.params(), g);
  int cm_max = std::min(bounds.m_max, 2), cn_max = std::min(bounds.n_max, 4);
  for (int m = 0; m <= cm_max; ++m)
    for (int n = 0; n <= cn_max; ++n) {
      out.push_back(
          {pre + "ccm/eigen-derived/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "sec:5",
           [&ctx, cm, m, n]() {
             Rat e = coulomb_energy_derived(cm, m, n);
             WaveVector res = coulomb_eigen_residual(ctx, cm, m, n, e);
             return make_check("", "", res.is_zero(), wv_str(res), "0",
                               st(m, n), "E~ = " + rs(e));
           }});
      out.push_back(
          {pre + "ccm/round-trip/m=" + std::to_string(m) +
               "/n=" + std::to_string(n),
           "sec:5",
           [cm, m, n]() {
             WaveVector res = ccm_round_trip_residual(cm, m, n);
             return make_check("", "", res.is_zero(), wv_str(res), "0",
                               st(m, n));
           }});
    }
  out.push_back(
      {pre + "ccm/printed-energy-forms", "sec:5", [&ctx, cm]() {
         Rat derived = coulomb_energy_derived(cm, 0, 0);
         Rat quant = coulomb_energy_quantization_printed(cm, 0, 0);
         Rat printed = coulomb_energy_printed(cm, 0, 0);
         WaveVector res_quant = coulomb_eigen_residual(ctx, cm, 0, 0, quant);
         WaveVector res_printed =
             coulomb_eigen_residual(ctx, cm, 0, 0, printed);
         std::ostringstream os;
         os << "derived " << rs(derived)
            << " passes the exact eigen-check; printed -8g^2 form gives "
            << rs(printed) << " (residual nonzero: " << !res_printed.is_zero()
            << "); solving the printed quantization gives " << rs(quant)
            << " (residual nonzero: " << !res_quant.is_zero()
            << "); the mapped radial index is k|a_n|, not (k/2)|a_n|";
         return make_deviation("", "", rs(derived),
                               rs(printed) + " / " + rs(quant), os.str());
       }});
  out.push_back(
      {pre + "ccm/degeneracy-preserved", "eq:mpmp", [&ctx, cm, cm_max, cn_max]() {
         // states share E_osc iff they share E~
         bool ok = true;
         for (int m1 = 0; m1 <= cm_max && ok; ++m1)
           for (int n1 = 0; n1 <= cn_max && ok; ++n1)
             for (int m2 = 0; m2 <= cm_max && ok; ++m2)
               for (int n2 = 0; n2 <= cn_max && ok; ++n2) {
                 bool osc = energy(m1, n1, ctx.params()) ==
                            energy(m2, n2, ctx.params());
                 bool cou = coulomb_energy_derived(cm, m1, n1) ==
                            coulomb_energy_derived(cm, m2, n2);
                 ok = osc == cou;
               }
         return make_check("", "", ok, "oscillator multiplets",
                           "coulomb multiplets");
       }});
  out.push_back({pre + "ccm/angular-unchanged", "sec:5", [&ctx]() {
                   // the map relabels the angular argument; sectors keep
                   // their eigenpolynomials
                   bool ok = ctx.P(3) ==
                             little_jacobi(3, ctx.params().alpha,
                                           ctx.params().beta);
                   return make_check("", "", ok, "X_n", "X_n");
                 }});
}

}  // namespace

std::vector<CheckJob> build_suite_jobs(const ModelContext& ctx, Suite suite,
                                       const Bounds& bounds,
                                       const std::string& id_prefix) {
  std::vector<CheckJob> out;
  switch (suite) {
    case Suite::Orthopoly:
      jobs_orthopoly(ctx, bounds, id_prefix, out);
      break;
    case Suite::Ladders:
      jobs_ladders(ctx, bounds, id_prefix, out);
      break;
    case Suite::Integrals:
      jobs_integrals(ctx, bounds, id_prefix, out);
      break;
    case Suite::Adjoint:
      jobs_adjoint(ctx, bounds, id_prefix, out);
      break;
    case Suite::Algebra:
      jobs_algebra(ctx, bounds, id_prefix, out);
      break;
    case Suite::Appendix:
      jobs_appendix(ctx, bounds, id_prefix, out);
      break;
    case Suite::Ccm:
      jobs_ccm(ctx, bounds, id_prefix, out);
      break;
  }
  return out;
}

std::vector<Params> default_param_grid() {
  std::vector<Params> grid;
  const std::vector<std::pair<long, long>> ks = {{1, 1}, {2, 1}, {3, 1},
                                                 {1, 2}, {3, 2}, {2, 3}};
  const std::vector<Rat> abs = {rat(-1, 2), Rat(0), rat(1, 2), rat(5, 2)};
  for (auto [p, q] : ks)
    for (const Rat& a : abs)
      for (const Rat& b : abs) {
        Params prm;
        prm.p = p;
        prm.q = q;
        prm.alpha = a;
        prm.beta = b;
        prm.omega = Rat(1);
        grid.push_back(prm);
      }
  return grid;
}

Report run_verify(const VerifyOptions& opt) {
  Report report;
  report.meta.m_max = opt.bounds.m_max;
  report.meta.n_max = opt.bounds.n_max;
  for (Suite s : opt.suites) report.meta.suites.push_back(suite_name(s));
  report.meta.generated_at = opt.generated_at;

  std::vector<Params> models;
  if (opt.params) {
    models.push_back(*opt.params);
    report.meta.k = std::to_string(opt.params->p) + "/" +
                    std::to_string(opt.params->q);
    report.meta.alpha = to_string(opt.params->alpha);
    report.meta.beta = to_string(opt.params->beta);
    report.meta.omega = to_string(opt.params->omega);
  } else {
    models = default_param_grid();
    report.meta.grid =
        "k in {1,2,3,1/2,3/2,2/3} x alpha,beta in {-1/2,0,1/2,5/2}, omega=1";
  }

  ThreadLimit limit(opt.mode == ExecMode::Serial ? 1 : opt.threads);

  std::vector<std::unique_ptr<ModelContext>> contexts;
  std::vector<CheckJob> jobs;
  for (const Params& prm : models) {
    auto ctx = std::make_unique<ModelContext>(prm);
    ctx->ensure_depth(required_depth(prm, opt.suites, opt.bounds));
    std::string prefix =
        models.size() == 1 ? "" : "[" + prm.str() + "] ";
    for (Suite s : opt.suites) {
      auto sj = build_suite_jobs(*ctx, s, opt.bounds, prefix);
      jobs.insert(jobs.end(), std::make_move_iterator(sj.begin()),
                  std::make_move_iterator(sj.end()));
    }
    contexts.push_back(std::move(ctx));
  }

  report.checks = run_jobs(jobs, opt.mode);
  report.sort_checks();
  return report;
}

std::vector<CompatEntry> compat_entries(const Params& params) {
  params.validate();
  const Rat a = params.alpha, b = params.beta;
  std::vector<CompatEntry> out;

  out.push_back(
      {"eq:2.1", "potential term omega^2 r",
       "omega^2 r^2 (as in the separated radial form)",
       "dimensional consistency; exact eigen-check of the full solution",
       "corrected"});
  out.push_back({"eq:3.6", "Gaussian factor exp(-omega^2 r^2 / 2)",
                 "exp(-omega r^2 / 2), i.e. exp(-y/2) with y = omega r^2",
                 "change of variable y = omega r^2; exact radial eigen-check",
                 "corrected"});

  {
    Poly printed = little_jacobi_series_printed(1, a, b);
    Poly eigen = little_jacobi(1, a, b);
    out.push_back({"eq:3.26", "P_1 from the printed odd series: " +
                                  printed.str(),
                   "P_1 = " + eigen.str(),
                   "eigenproblem of the angular operator and "
                   "moment-orthogonality, which agree with each other",
                   "corrected"});
  }
  out.push_back(
      {"eq:3.27", "odd-branch leading constant chi_n",
       "leading constant fixed by monicity of the eigenpolynomial",
       "monic eigen-construction (exact)", "corrected"});
  out.push_back(
      {"eq:3.28", "weight |x|^a (1-x^2)^((b+1)/2) (1+x)",
       "|x|^a (1-x^2)^((b-1)/2) (1+x), the weight the eigenpolynomials are "
       "orthogonal against",
       "exact moment-based orthogonality of the eigenpolynomials",
       "corrected"});
  out.push_back(
      {"eq:3.34", "measure factor sqrt(1-x^2)",
       "(1-x^2)^((b-1)/2), consistent with dphi = dx/sqrt(1-x^2)",
       "norm ratios against the closed form, exact for n <= 10",
       "corrected"});
  out.push_back(
      {"eq:3.36", "N_0 = [Gamma(a/2+b/2+1)/(Gamma(a/2+1)Gamma(b/2+1))]^(1/2)",
       "N_0 = B((a+1)/2,(b+1)/2)^(-1/2), which gives the ground angular "
       "state unit norm",
       "unit-norm requirement; only norm ratios enter any verification",
       "corrected"});

  {
    bool match = true;
    for (int n = 0; n <= 8 && match; ++n)
      match = norm_ratio(n, a, b) == norm_ratio_closed_form(n, a, b);
    out.push_back({"eq:Nn", "normalization-constant ratios",
                   "identical ratio structure",
                   "moment-based norms, exact for n <= 8 at these parameters",
                   match ? "matches" : "corrected"});
  }
  {
    bool match = true;
    for (int n = 0; n <= 8 && match; ++n) {
      Poly pn = little_jacobi(n, a, b);
      match = apply_q_tilde(a, b, pn) == pn.scaled(angular_eigenvalue(n, a, b));
    }
    out.push_back({"eq:3.23", "angular eigenvalues a_n",
                   "as printed",
                   "exact eigen-check for n <= 8 at these parameters",
                   match ? "matches" : "corrected"});
  }

  {
    Params k1 = params;
    // energy display of the rational-k section vs the eigen-checked form
    Rat lhs = energy(1, 1, k1);
    Rat rhs = (2 * k1.omega / Rat(k1.q)) *
              (Rat(2 * k1.q) + Rat(k1.p) + Rat(k1.p) * (a + b + 1) + k1.q);
    out.push_back(
        {"sec:4 energy display",
         "E = (2w/q)(2mq + pn + p(a+b+1) + q): at (m,n)=(1,1) gives " +
             to_string(rhs),
         "E = (2w/q)(2mq + pn + p(a+b+1)/2 + q) = " + to_string(lhs),
         "exact eigen-check of the y-form Hamiltonian", "corrected"});
  }

  out.push_back(
      {"sec:4.1", "radial ladders carry -E/(4w)",
       "+E/(4w) in both ladders, under which both tabulated actions hold "
       "verbatim",
       "symbolic application to Y_m^gamma (both branches fail as printed, "
       "e.g. the raising ladder does not annihilate m=0)",
       "corrected"});
  out.push_back(
      {"eq:xidef", "Xi1 = (J+J-)^q K^p_{kQ,H}, Xi2 = (J-J+)^q K^p_{-kQ,H}",
       "Xi1 = (J-J+)^q K^p_{kQ,H}, Xi2 = (J+J-)^q K^p_{-kQ,H}",
       "energy preservation and the displayed action tables (the printed "
       "pairing raises m and n together, changing the energy)",
       "corrected"});
  out.push_back(
      {"eq:kqlh",
       "factor numerator k^2Q^2 - (6l-5)kQ - 2(3l-2)(l-1) with -H/(4w)",
       "k^2Q^2 + (2l-1)kQ + 2l(l-1) with +H/(4w)",
       "exact equality of factor(l) o K^(l-1) with K^l on the basis; the "
       "printed numerator fails already at l=1 against the definition",
       "corrected"});
  out.push_back(
      {"sec:4.5 ladder display",
       "angular factors (x +- sqrt(1-x^2) R) and a (2Q+2) first factor",
       "gauged blocks (x +- (1-x) R)(2Q +- 1) + (a +- b) as in the ladder "
       "section",
       "comparison target only; the gauged blocks reproduce the action "
       "tables exactly",
       "unresolved"});

  {
    Params k1 = params;
    k1.p = 1;
    k1.q = 1;
    ModelContext ctx(k1);
    ctx.ensure_depth(required_depth(k1, {Suite::Algebra}, Bounds{2, 4}));
    StructureResult sr = structure_polynomial(ctx);
    auto dc = term_diff(sr.commutator, k1_printed_commutator(k1));
    auto da = term_diff(sr.anticommutator, k1_printed_anticommutator(k1));
    std::ostringstream os;
    os << dc.size() << " commutator and " << da.size()
       << " anticommutator terms differ at k=1 with these (alpha, beta, "
          "omega)";
    out.push_back({"sec:4.5 structure relations",
                   "printed degree-4/6 displays",
                   "interpolated: [Xi1,Xi2] = " + sr.commutator.str("H", "Q"),
                   "exact interpolation from the diagonal basis action, "
                   "re-predicted on held-out states; " + os.str(),
                   dc.empty() && da.empty() ? "matches" : "corrected"});
  }

  {
    CoulombModel cmodel = ccm_map(params, Rat(1));
    out.push_back(
        {"sec:5",
         "E~ = -8g^2/(4m+k|a_n|+2)^2, radial label (k/2)|a_n|; the displayed "
         "quantization solves to -16g^2/(4m+k|a_n|+2)^2",
         "E~ = -g^2/(2m+k|a_n|+1)^2 with radial index k|a_n| (at (0,0): " +
             to_string(coulomb_energy_derived(cmodel, 0, 0)) + ")",
         "exact eigen-check of the mapped state and round trip to the "
         "oscillator equation; neither printed value passes",
         "corrected"});
  }

  return out;
}

}  // namespace refosc
