#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "refosc/operators.hpp"
#include "refosc/spectrum.hpp"

using namespace refosc;

namespace {

WaveVector random_vector(const ModelContext& ctx, testutil::Rng& rng,
                         int n_max, int m_max) {
  WaveVector v;
  for (int t = 0; t < 3; ++t) {
    int n = rng.integer(0, n_max);
    int m = rng.integer(0, m_max);
    v = v + basis_state(ctx, m, n).scaled(rng.rational());
  }
  return v;
}

}  // namespace

TEST_CASE("angular operator spot actions") {
  Rat a(0), b(0);
  // on 1: the ground eigenvalue
  CHECK(apply_q_tilde(a, b, Poly::constant(rat(1))) ==
        Poly::constant(-(a + b + 1) / 2));
  // on x at alpha = beta = 0: (3/2)x - 1
  CHECK(apply_q_tilde(a, b, Poly::monomial(1)) ==
        Poly({rat(-1), rat(3, 2)}));
  // degree never grows
  testutil::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    Poly f = rng.poly(20);
    Poly qf = apply_q_tilde(rat(1, 2), rat(5, 2), f);
    if (!qf.is_zero()) CHECK(*qf.degree() <= (f.is_zero() ? 0 : *f.degree()));
  }
}

TEST_CASE("operators are linear") {
  ModelContext ctx(make_params("3/2", "1/2", "-1/2", "1"));
  ctx.ensure_depth(14);
  testutil::Rng rng(17);
  std::vector<Op> ops = {q_tilde_op(ctx), hamiltonian_y(ctx), j_plus_op(ctx),
                         j_minus_op(ctx),
                         k_power_h(ctx, KSign::PlusKQ, ctx.params().p)};
  for (const Op& op : ops)
    for (int i = 0; i < 6; ++i) {
      WaveVector u = random_vector(ctx, rng, 6, 3);
      WaveVector v = random_vector(ctx, rng, 6, 3);
      Rat c = rng.rational();
      CHECK(op(u.scaled(c) + v) == op(u).scaled(c) + op(v));
    }
}

TEST_CASE("hamiltonian eigen-exactness") {
  SUBCASE("spot value 18 at k=2, alpha=beta=1/2, (m,n)=(1,2)") {
    ModelContext ctx(make_params("2", "1/2", "1/2", "1"));
    ctx.ensure_depth(4);
    CHECK(energy(1, 2, ctx.params()) == 18);
    WaveVector psi = basis_state(ctx, 1, 2);
    CHECK(hamiltonian_y(ctx)(psi) == psi.scaled(Rat(18)));
  }
  SUBCASE("ground energy 2w(k(a+b+1)/2 + 1)") {
    ModelContext ctx(make_params("1", "0", "0", "1"));
    ctx.ensure_depth(2);
    CHECK(energy(0, 0, ctx.params()) == 3);
    WaveVector psi = basis_state(ctx, 0, 0);
    CHECK(hamiltonian_y(ctx)(psi) == psi.scaled(Rat(3)));
  }
  SUBCASE("grid") {
    ModelContext ctx(make_params("2/3", "5/2", "-1/2", "3/2"));
    ctx.ensure_depth(8);
    Op h = hamiltonian_y(ctx);
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 8; ++n) {
        WaveVector psi = basis_state(ctx, m, n);
        CHECK(h(psi) == psi.scaled(energy(m, n, ctx.params())));
      }
  }
}

TEST_CASE("applying the angular operator twice squares the eigenvalue") {
  ModelContext ctx(make_params("1", "1/2", "5/2", "1"));
  ctx.ensure_depth(10);
  Op qt = q_tilde_op(ctx);
  for (int n = 0; n <= 10; ++n) {
    WaveVector psi = basis_state(ctx, 0, n);
    CHECK(qt(qt(psi)) == psi.scaled(Rat(ctx.a(n) * ctx.a(n))));
  }
}

TEST_CASE("angular ladder actions match the tables") {
  ModelContext ctx(make_params("1", "1/2", "-1/2", "1"));
  ctx.ensure_depth(10);
  const Rat a = ctx.params().alpha, b = ctx.params().beta;
  Op jp = j_plus_op(ctx), jm = j_minus_op(ctx);
  SUBCASE("J+ annihilates the ground sector") {
    CHECK(jp(basis_state(ctx, 0, 0)).is_zero());
  }
  SUBCASE("J+ P_1 = 2(a+b+4) P_2") {
    WaveVector got = jp(basis_state(ctx, 0, 1));
    WaveVector expect = basis_state(ctx, 0, 1);
    expect = WaveVector();
    expect.add_term(2, laguerre_state(0, ctx.gamma_n(1)).scaled(2 * (a + b + 4)));
    CHECK(got == expect);
  }
  SUBCASE("J- P_0 = -2(a+b+2) P_1") {
    WaveVector got = jm(basis_state(ctx, 0, 0));
    WaveVector expect;
    expect.add_term(1,
                    laguerre_state(0, ctx.gamma_n(0)).scaled(-2 * (a + b + 2)));
    CHECK(got == expect);
  }
  SUBCASE("anticommutators with the angular operator") {
    Op qt = q_tilde_op(ctx);
    for (int n = 0; n <= 6; ++n) {
      WaveVector psi = basis_state(ctx, 0, n);
      CHECK(op_anticommutator(jp, qt)(psi) == jp(psi).scaled(Rat(-1)));
      CHECK(op_anticommutator(jm, qt)(psi) == jm(psi));
    }
  }
}

TEST_CASE("double-step block coefficients") {
  Rat a = rat(1, 2), b = rat(5, 2);
  ModelContext ctx(make_params("1", "1/2", "5/2", "1"));
  ctx.ensure_depth(12);
  auto block_coeff = [&](const Op& op, int n, int target) {
    WaveVector w = op(basis_state(ctx, 0, n));
    if (w.is_zero()) return Rat(0);
    auto one = w.single();
    REQUIRE(one.has_value());
    REQUIRE(one->first == target);
    RadialFunction base = laguerre_state(0, ctx.gamma_n(n));
    return Rat(one->second.poly().coeff(0) / base.poly().coeff(0));
  };
  SUBCASE("(J-J+) annihilates even sectors below the step") {
    CHECK(j_power_minus(ctx, 1)(basis_state(ctx, 0, 0)).is_zero());
  }
  SUBCASE("(J-J+) on odd sectors raises with d_n") {
    Rat d1 = rat(-16) * pochhammer((a + b) / 2 + 2, 2);
    CHECK(block_coeff(j_power_minus(ctx, 1), 1, 3) == d1);
  }
  SUBCASE("(J+J-) on even sectors raises with the same d_n") {
    Rat d0 = rat(-16) * pochhammer((a + b) / 2 + 1, 2);
    CHECK(block_coeff(j_power_plus(ctx, 1), 0, 2) == d0);
  }
  SUBCASE("(J-J+) on even sectors lowers with c_n") {
    Rat c2 = rat(-16) * pochhammer(rat(-1), 1) *
             pochhammer(-(a + b + 2) / 2, 1) *
             pochhammer((1 - a - 2) / 2, 1) * pochhammer((1 - b - 2) / 2, 1) /
             pochhammer(-(a + b) / 2 - 2, 2);
    CHECK(block_coeff(j_power_minus(ctx, 1), 2, 0) == c2);
  }
}

TEST_CASE("single radial ladder steps") {
  const Rat w = rat(3, 2);
  ModelContext ctx(make_params("2", "0", "1/2", "3/2"));
  ctx.ensure_depth(6);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 3; ++n) {
      Rat g = ctx.gamma_n(n);
      Rat e = energy(m, n, ctx.params());
      SUBCASE("") {}
      // raising in gamma lowers m, annihilating the bottom state
      RadialFunction up = k_step_explicit(g, e, w, laguerre_state(m, g));
      if (m == 0) {
        CHECK(up.is_zero());
      } else {
        CHECK(up == laguerre_state(m - 1, g + 2).scaled(rat(-1)));
      }
      // lowering in gamma raises m with -(m+1)(m+gamma)
      RadialFunction down = k_step_explicit(-g, e, w, laguerre_state(m, g));
      RadialFunction expect =
          RadialFunction(g - 2, laguerre_series(m + 1, g - 2))
              .scaled(-Rat(m + 1) * (g + m));
      CHECK(down == expect);
    }
}

TEST_CASE("k-power routes agree on eigenstates") {
  ModelContext ctx(make_params("3/2", "-1/2", "1/2", "2"));
  ctx.ensure_depth(8);
  const int p = ctx.params().p;
  for (KSign sign : {KSign::PlusKQ, KSign::MinusKQ}) {
    Op via_h = k_power_h(ctx, sign, p);
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 5; ++n) {
        Rat e = energy(m, n, ctx.params());
        WaveVector psi = basis_state(ctx, m, n);
        CHECK(k_power_e(ctx, sign, p, e)(psi) == via_h(psi));
      }
  }
}

TEST_CASE("p-fold ladder annihilates shallow states") {
  ModelContext ctx(make_params("3", "0", "0", "1"));
  ctx.ensure_depth(6);
  const int p = ctx.params().p;  // 3
  // on odd sectors the +kQ power lowers m by p
  for (int m = 0; m < p; ++m) {
    Rat e = energy(m, 1, ctx.params());
    CHECK(k_power_e(ctx, KSign::PlusKQ, p, e)(basis_state(ctx, m, 1))
              .is_zero());
  }
}
