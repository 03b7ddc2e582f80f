#include "refosc/symmetry.hpp"

#include "refosc/errors.hpp"
#include "refosc/spectrum.hpp"

namespace refosc {

Op xi1_op(const ModelContext& ctx) {
  return op_compose(j_power_minus(ctx, ctx.params().q),
                    k_power_h(ctx, KSign::PlusKQ, ctx.params().p));
}

Op xi2_op(const ModelContext& ctx) {
  return op_compose(j_power_plus(ctx, ctx.params().q),
                    k_power_h(ctx, KSign::MinusKQ, ctx.params().p));
}

WaveVector xi1_on_basis_e(const ModelContext& ctx, int m, int n) {
  Rat e = energy(m, n, ctx.params());
  Op op = op_compose(j_power_minus(ctx, ctx.params().q),
                     k_power_e(ctx, KSign::PlusKQ, ctx.params().p, e));
  return op(basis_state(ctx, m, n));
}

WaveVector xi2_on_basis_e(const ModelContext& ctx, int m, int n) {
  Rat e = energy(m, n, ctx.params());
  Op op = op_compose(j_power_plus(ctx, ctx.params().q),
                     k_power_e(ctx, KSign::MinusKQ, ctx.params().p, e));
  return op(basis_state(ctx, m, n));
}

Rat j_plus_step_coeff(const ModelContext& ctx, int n) {
  const Rat a = ctx.params().alpha, b = ctx.params().beta;
  if (n % 2 == 0) {
    if (n == 0) return Rat(0);
    return Rat(-2 * n) * (a + b + n) / (a + b + 2 * n);
  }
  return Rat(2) * (a + b + 2 * n + 2);
}

Rat j_minus_step_coeff(const ModelContext& ctx, int n) {
  const Rat a = ctx.params().alpha, b = ctx.params().beta;
  if (n % 2 == 0) return Rat(-2) * (a + b + 2 * n + 2);
  return Rat(2) * (a + n) * (b + n) / (a + b + 2 * n);
}

namespace {

// K-chain coefficient: p raising-in-m steps (-(m'+1)(m'+gamma')) or p
// lowering-in-m steps (-1 each, annihilating past m' = 0).
Rat k_chain_coeff(const ModelContext& ctx, int m, int n, bool raise_m, int p) {
  Rat gamma = ctx.k() * abs(angular_eigenvalue(n, ctx.params().alpha,
                                               ctx.params().beta));
  if (!raise_m) return m >= p ? pow_rat(rat(-1), p) : Rat(0);
  Rat coeff(1);
  for (int j = 0; j < p; ++j) coeff *= -(Rat(m + j + 1)) * (Rat(m) + gamma - j);
  return coeff;
}

// q applications of (J- J+) or (J+ J-), tracking the moving sector.
Rat j_chain_coeff(const ModelContext& ctx, int n, bool plus_first, int q,
                  int* n_out) {
  Rat coeff(1);
  int cur = n;
  for (int t = 0; t < q && coeff != 0; ++t) {
    Rat c1 = plus_first ? j_plus_step_coeff(ctx, cur)
                        : j_minus_step_coeff(ctx, cur);
    int mid = (plus_first == (cur % 2 == 0)) ? cur - 1 : cur + 1;
    if (c1 == 0) return Rat(0);
    Rat c2 = plus_first ? j_minus_step_coeff(ctx, mid)
                        : j_plus_step_coeff(ctx, mid);
    if (c2 == 0) return Rat(0);
    int next = (plus_first == (cur % 2 == 0)) ? mid - 1 : mid + 1;
    coeff *= c1 * c2;
    cur = next;
  }
  *n_out = cur;
  return coeff;
}

}  // namespace

Transition xi1_expected(const ModelContext& ctx, int m, int n) {
  const int p = ctx.params().p, q = ctx.params().q;
  const bool even = n % 2 == 0;
  // +kQ ladder: raising in m on even sectors, lowering on odd.
  Rat kc = k_chain_coeff(ctx, m, n, even, p);
  if (kc == 0) return Transition{Rat(0)};
  int n_out = -1;
  Rat jc = j_chain_coeff(ctx, n, /*plus_first=*/true, q, &n_out);
  if (jc == 0) return Transition{Rat(0)};
  return Transition{kc * jc, even ? m + p : m - p, n_out};
}

Transition xi2_expected(const ModelContext& ctx, int m, int n) {
  const int p = ctx.params().p, q = ctx.params().q;
  const bool even = n % 2 == 0;
  // -kQ ladder: lowering in m on even sectors, raising on odd.
  Rat kc = k_chain_coeff(ctx, m, n, !even, p);
  if (kc == 0) return Transition{Rat(0)};
  int n_out = -1;
  Rat jc = j_chain_coeff(ctx, n, /*plus_first=*/false, q, &n_out);
  if (jc == 0) return Transition{Rat(0)};
  return Transition{kc * jc, even ? m - p : m + p, n_out};
}

namespace {

Rat minus_sixteen_pow(int q) { return pow_rat(rat(-16), q); }

Rat k_part_closed(const ModelContext& ctx, int m, int n) {
  const int p = ctx.params().p;
  Rat gamma = ctx.k() * abs(angular_eigenvalue(n, ctx.params().alpha,
                                               ctx.params().beta));
  return pow_rat(rat(-1), p) * pochhammer(Rat(m + 1), p) *
         pochhammer(gamma + m - p + 1, p);
}

}  // namespace

std::optional<Rat> ell_minus_closed(const ModelContext& ctx, int m, int n) {
  const int q = ctx.params().q;
  const Rat a = ctx.params().alpha, b = ctx.params().beta;
  Rat den = pochhammer(-(a + b) / 2 - n, 2 * q);
  if (den == 0) return std::nullopt;
  Rat num = minus_sixteen_pow(q) * k_part_closed(ctx, m, n) *
            pochhammer(Rat(-n) / 2, q) * pochhammer(-(a + b + n) / 2, q) *
            pochhammer((1 - a - n) / 2, q) * pochhammer((1 - b - n) / 2, q);
  return num / den;
}

std::optional<Rat> ell_minus_tilde_closed(const ModelContext& ctx, int m,
                                          int n) {
  const int q = ctx.params().q;
  const Rat a = ctx.params().alpha, b = ctx.params().beta;
  Rat den = pochhammer(-(a + b) / 2 - n, 2 * q);
  if (den == 0) return std::nullopt;
  Rat num = minus_sixteen_pow(q) * k_part_closed(ctx, m, n) *
            pochhammer((Rat(1) - n) / 2, q) *
            pochhammer((1 - a - b - n) / 2, q) *
            pochhammer(-(a + n) / 2, q) * pochhammer(-(b + n) / 2, q);
  return num / den;
}

Rat ell_plus_closed(const ModelContext& ctx, int m, int n) {
  (void)m;
  const int p = ctx.params().p, q = ctx.params().q;
  const Rat a = ctx.params().alpha, b = ctx.params().beta;
  return pow_rat(rat(-1), p) * minus_sixteen_pow(q) *
         pochhammer((a + b) / 2 + n + 1, 2 * q);
}

std::optional<std::pair<Rat, Rat>> adjoint_ratio_sides(const ModelContext& ctx,
                                                       int m, int n) {
  const int p = ctx.params().p, q = ctx.params().q;
  const Rat w = ctx.params().omega;
  Transition t1 = xi1_expected(ctx, m, n);
  if (t1.coeff == 0) return std::nullopt;
  Transition t2 = xi2_expected(ctx, t1.m, t1.n);
  if (t2.coeff == 0 || t2.m != m || t2.n != n)
    throw VerificationFailure("adjoint partner does not return to (m,n)");
  Rat rhs = t2.coeff / t1.coeff;
  Amount m2_here = radial_norm_sq(m, ctx.gamma_n(n), w);
  Amount m2_there = radial_norm_sq(t1.m, ctx.gamma_n(t1.n), w);
  auto m2_ratio = Amount::ratio(m2_here, m2_there);
  if (!m2_ratio)
    throw VerificationFailure("radial norm ratio did not reduce");
  // (N_n/N_n')^2 = h_n'/h_n
  Rat lhs = (ctx.norm_ratio(t1.n) / ctx.norm_ratio(n)) * *m2_ratio;
  (void)p;
  (void)q;
  return std::make_pair(lhs, rhs);
}

namespace {

Rat proportionality(const RadialFunction& r, const RadialFunction& base,
                    const char* what) {
  if (r.is_zero()) return Rat(0);
  if (!(r.gamma() == base.gamma()))
    throw NonDiagonal(std::string(what) + ": exponent moved from " +
                      to_string(base.gamma()) + " to " + to_string(r.gamma()));
  int d = *base.poly().degree();
  if (*r.poly().degree() != d)
    throw NonDiagonal(std::string(what) + ": polynomial degree changed");
  Rat c = r.poly().coeff(d) / base.poly().coeff(d);
  if (!(r.poly() == base.poly().scaled(c)))
    throw NonDiagonal(std::string(what) + ": not proportional to the state");
  return c;
}

}  // namespace

Rat diagonal_value(const ModelContext& ctx, const Op& op, int m, int n) {
  WaveVector psi = basis_state(ctx, m, n);
  WaveVector w = op(psi);
  if (w.is_zero()) return Rat(0);
  auto one = w.single();
  if (!one || one->first != n)
    throw NonDiagonal("action leaves sector " + std::to_string(n));
  return proportionality(one->second, psi.entries().begin()->second,
                         "diagonal action");
}

StructureResult structure_polynomial(const ModelContext& ctx, int grid_m_max,
                                     int grid_n_max) {
  const int p = ctx.params().p, q = ctx.params().q;
  const int need_m = 2 * p + 1;
  const int need_n = 2 * (2 * p + 4 * q) + 1;
  if (grid_m_max < 0) grid_m_max = need_m;
  if (grid_n_max < 0) grid_n_max = need_n;
  if (grid_m_max < need_m || grid_n_max < need_n)
    throw InterpolationUnderdetermined(
        "structure grid must reach m=" + std::to_string(need_m) +
        ", n=" + std::to_string(need_n));

  Op x1 = xi1_op(ctx);
  Op x2 = xi2_op(ctx);

  const int eps_deg = 2 * p;
  const int n_deg = 2 * p + 4 * q;

  StructureResult res;
  BiPoly comm_branch[2], anti_branch[2];
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<int> ns;
    for (int n = parity; ns.size() < static_cast<size_t>(n_deg + 1);
         n += 2) {
      if (n > grid_n_max)
        throw InterpolationUnderdetermined("not enough sectors of parity " +
                                           std::to_string(parity));
      ns.push_back(n);
    }
    // Diagonal values over the (sector, m) grid. The cells are
    // independent, so the loop runs under OpenMP; a nested or serial
    // context degrades to the reference loop with identical results.
    const int scount = static_cast<int>(ns.size());
    const int mcount = grid_m_max + 1;
    std::vector<Rat> dcs(scount * mcount), das(scount * mcount);
    std::string first_error;
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic)
#endif
    for (int s = 0; s < scount; ++s) {
      for (int m = 0; m < mcount; ++m) {
        try {
          int n = ns[s];
          WaveVector psi = basis_state(ctx, m, n);
          WaveVector w12 = x1(x2(psi));
          WaveVector w21 = x2(x1(psi));
          const RadialFunction& base = psi.entries().begin()->second;
          WaveVector cw = w12 - w21;
          WaveVector aw = w12 + w21;
          Rat dc(0), da(0);
          if (!cw.is_zero()) {
            auto one = cw.single();
            if (!one || one->first != n)
              throw NonDiagonal("[Xi1,Xi2] leaves sector " +
                                std::to_string(n) +
                                " at m=" + std::to_string(m));
            dc = proportionality(one->second, base, "[Xi1,Xi2]");
          }
          if (!aw.is_zero()) {
            auto one = aw.single();
            if (!one || one->first != n)
              throw NonDiagonal("{Xi1,Xi2} leaves sector " +
                                std::to_string(n) +
                                " at m=" + std::to_string(m));
            da = proportionality(one->second, base, "{Xi1,Xi2}");
          }
          dcs[s * mcount + m] = std::move(dc);
          das[s * mcount + m] = std::move(da);
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
          if (first_error.empty()) first_error = e.what();
        }
      }
    }
    if (!first_error.empty()) throw NonDiagonal(first_error);
    res.grid_states += scount * mcount;

    // Per sector: interpolate in epsilon, then each epsilon-coefficient
    // across sectors in n.
    std::vector<std::vector<Rat>> ccoef(ns.size()), acoef(ns.size());
    for (size_t s = 0; s < ns.size(); ++s) {
      int n = ns[s];
      std::vector<std::pair<Rat, Rat>> cpts, apts;
      for (int m = 0; m <= grid_m_max; ++m) {
        Rat eps = epsilon_of(m, n, ctx.params());
        cpts.emplace_back(eps, dcs[s * mcount + m]);
        apts.emplace_back(eps, das[s * mcount + m]);
      }
      Poly cp = interpolate(cpts);
      Poly ap = interpolate(apts);
      if ((cp.degree() && *cp.degree() > eps_deg) ||
          (ap.degree() && *ap.degree() > eps_deg))
        throw VerificationFailure("epsilon-degree bound exceeded in sector " +
                                  std::to_string(n));
      ccoef[s].resize(eps_deg + 1);
      acoef[s].resize(eps_deg + 1);
      for (int i = 0; i <= eps_deg; ++i) {
        ccoef[s][i] = cp.coeff(i);
        acoef[s][i] = ap.coeff(i);
      }
    }
    BiPoly cbi, abi;
    for (int i = 0; i <= eps_deg; ++i) {
      std::vector<std::pair<Rat, Rat>> cpts, apts;
      for (size_t s = 0; s < ns.size(); ++s) {
        cpts.emplace_back(Rat(ns[s]), ccoef[s][i]);
        apts.emplace_back(Rat(ns[s]), acoef[s][i]);
      }
      Poly cn = interpolate(cpts);
      Poly an = interpolate(apts);
      for (int j = 0; j <= n_deg; ++j) {
        cbi.set(i, j, cn.coeff(j));
        abi.set(i, j, an.coeff(j));
      }
    }
    // epsilon = (H - w k(a+b+1) - 2w)/(4w); n = -(2Q+a+b+1)/2 on the even
    // branch, (2Q-a-b-1)/2 on the odd branch.
    const Params& prm = ctx.params();
    const Rat w = prm.omega;
    Poly eps_sub({-(w * prm.k() * (prm.alpha + prm.beta + 1) + 2 * w) / (4 * w),
                  Rat(1) / (4 * w)});
    Poly n_sub = parity == 0
                     ? Poly({-(prm.alpha + prm.beta + 1) / 2, Rat(-1)})
                     : Poly({-(prm.alpha + prm.beta + 1) / 2, Rat(1)});
    comm_branch[parity] = cbi.substitute(eps_sub, n_sub);
    anti_branch[parity] = abi.substitute(eps_sub, n_sub);
  }

  res.parity_consistent_comm = comm_branch[0] == comm_branch[1];
  res.parity_consistent_anti = anti_branch[0] == anti_branch[1];
  res.commutator = comm_branch[0];
  res.anticommutator = anti_branch[0];
  if (res.commutator.degree_x() > 2 * p || res.commutator.degree_y() > n_deg ||
      res.anticommutator.degree_x() > 2 * p ||
      res.anticommutator.degree_y() > n_deg)
    throw VerificationFailure("structure polynomial degree bound exceeded");
  return res;
}

BiPoly k1_printed_commutator(const Params& prm) {
  const Rat a = prm.alpha, b = prm.beta, w = prm.omega;
  const Rat w2 = w * w;
  BiPoly r;
  r.set(0, 4, Rat(48));
  r.set(2, 3, Rat(-8) / w2);
  r.set(0, 3, Rat(-16) * (a * a + b * b - 9));
  r.set(0, 2, Rat(-3) * a * b);
  r.set(2, 1, Rat(2) * (a * a + b * b - 3) / w2);
  r.set(0, 1, (b - a - 3) * (b + a - 3) * (b - a + 3) * (b + a + 3) - 3);
  r.set(2, 0, a * b / w2);
  r.set(0, 0, Rat(-4) * a * b);
  return r;
}

BiPoly k1_printed_anticommutator(const Params& prm) {
  const Rat a = prm.alpha, b = prm.beta, w = prm.omega;
  const Rat w2 = w * w;
  const Rat a2 = a * a, b2 = b * b;
  const Rat c9 = (a2 - b2) * (a2 - b2) - 10 * (a2 + b2) + 9;
  BiPoly r;
  r.set(0, 6, Rat(-8));
  r.set(2, 4, Rat(2) / w2);
  r.set(0, 4, Rat(4) * (a2 + b2) - 116);
  r.set(0, 3, Rat(8) * a * b);
  r.set(1, 2, -(a2 + b2 - 11) / w2);
  r.set(0, 2, -((a2 - b2) * (a2 - b2) - 50 * (a2 + b2) + 193) / 2);
  r.set(2, 1, Rat(-8) * a * b / (3 * w2));
  r.set(0, 1, Rat(32) * a * b);
  r.set(2, 0, c9 / (8 * w2));
  r.set(0, 0, -c9 / (2 * w));
  return r;
}

std::vector<TermDiff> term_diff(const BiPoly& a, const BiPoly& b) {
  std::vector<TermDiff> out;
  std::map<std::pair<int, int>, bool> keys;
  for (const auto& [ij, v] : a.terms()) keys[ij] = true;
  for (const auto& [ij, v] : b.terms()) keys[ij] = true;
  for (const auto& [ij, unused] : keys) {
    Rat l = a.coeff(ij.first, ij.second);
    Rat r = b.coeff(ij.first, ij.second);
    if (l != r) out.push_back(TermDiff{ij.first, ij.second, l, r});
  }
  return out;
}

}  // namespace refosc
