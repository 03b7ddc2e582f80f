#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "refosc/errors.hpp"
#include "refosc/spectrum.hpp"
#include "refosc/symmetry.hpp"

using namespace refosc;

namespace {

ModelContext make_ctx(const char* k, const char* a, const char* b,
                      const char* w, int depth) {
  ModelContext ctx(make_params(k, a, b, w));
  ctx.ensure_depth(depth);
  return ctx;
}

}  // namespace

TEST_CASE("xi actions are single-target with the tabulated coefficients") {
  ModelContext ctx = make_ctx("3/2", "1/2", "-1/2", "1", 24);
  Op x1 = xi1_op(ctx), x2 = xi2_op(ctx);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 8; ++n) {
      Transition t1 = xi1_expected(ctx, m, n);
      Transition t2 = xi2_expected(ctx, m, n);
      WaveVector w1 = x1(basis_state(ctx, m, n));
      WaveVector w2 = x2(basis_state(ctx, m, n));
      CHECK(w1 == (t1.coeff == 0 ? WaveVector()
                                 : basis_state(ctx, t1.m, t1.n).scaled(t1.coeff)));
      CHECK(w2 == (t2.coeff == 0 ? WaveVector()
                                 : basis_state(ctx, t2.m, t2.n).scaled(t2.coeff)));
      // energy-route operators agree on eigenstates
      CHECK(xi1_on_basis_e(ctx, m, n) == w1);
      CHECK(xi2_on_basis_e(ctx, m, n) == w2);
    }
}

TEST_CASE("xi annihilations") {
  ModelContext ctx = make_ctx("1", "0", "0", "1", 12);
  CHECK(xi1_op(ctx)(basis_state(ctx, 0, 0)).is_zero());
  // odd sectors with m < p are annihilated by the +kQ ladder
  CHECK(xi1_op(ctx)(basis_state(ctx, 0, 1)).is_zero());
}

TEST_CASE("closed-form coefficients") {
  ModelContext ctx = make_ctx("1", "0", "0", "1", 12);
  SUBCASE("ell_plus at (0,1), k=1, alpha=beta=0 is 96") {
    CHECK(ell_plus_closed(ctx, 0, 1) == 96);
  }
  SUBCASE("closed forms equal the step products where defined") {
    ModelContext c2 = make_ctx("2/3", "1/2", "5/2", "1", 24);
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 8; ++n) {
        Transition t1 = xi1_expected(c2, m, n);
        Transition t2 = xi2_expected(c2, m, n);
        if (n % 2 == 0) {
          auto c = ell_minus_closed(c2, m, n);
          if (c && t1.coeff != 0) CHECK(*c == t1.coeff);
          if (t2.coeff != 0) CHECK(ell_plus_closed(c2, m, n) == t2.coeff);
        } else {
          if (t1.coeff != 0) CHECK(ell_plus_closed(c2, m, n) == t1.coeff);
          auto c = ell_minus_tilde_closed(c2, m, n);
          if (c && t2.coeff != 0) CHECK(*c == t2.coeff);
        }
      }
  }
}

TEST_CASE("xi preserves energy levels") {
  ModelContext ctx = make_ctx("2", "1/2", "1/2", "1", 14);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 6; ++n) {
      Transition t = xi1_expected(ctx, m, n);
      if (t.coeff != 0)
        CHECK(energy(t.m, t.n, ctx.params()) == energy(m, n, ctx.params()));
    }
}

TEST_CASE("commutators with the supercharge") {
  for (const char* k : {"1", "3/2"}) {
    ModelContext ctx = make_ctx(k, "1/2", "0", "1", 22);
    const long q = ctx.params().q;
    Op qt = q_tilde_op(ctx);
    Op x1 = xi1_op(ctx), x2 = xi2_op(ctx);
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 7; ++n) {
        WaveVector psi = basis_state(ctx, m, n);
        CHECK(op_commutator(x1, qt)(psi) == x1(psi).scaled(rat(-2 * q)));
        CHECK(op_commutator(x2, qt)(psi) == x2(psi).scaled(rat(2 * q)));
      }
  }
}

TEST_CASE("adjointness ratio identities") {
  SUBCASE("even branch spot: k=1, alpha=beta=0, (m,n)=(0,2)") {
    ModelContext ctx = make_ctx("1", "0", "0", "1", 10);
    auto sides = adjoint_ratio_sides(ctx, 0, 2);
    REQUIRE(sides.has_value());
    CHECK(sides->first == sides->second);
  }
  SUBCASE("odd branch spot: (m,n)=(1,1)") {
    ModelContext ctx = make_ctx("1", "0", "0", "1", 10);
    auto sides = adjoint_ratio_sides(ctx, 1, 1);
    REQUIRE(sides.has_value());
    CHECK(sides->first == sides->second);
  }
  SUBCASE("annihilated transitions are vacuous") {
    ModelContext ctx = make_ctx("1", "0", "0", "1", 10);
    CHECK(!adjoint_ratio_sides(ctx, 0, 0).has_value());
  }
  SUBCASE("sweep across models") {
    for (const char* k : {"2", "2/3"}) {
      ModelContext ctx = make_ctx(k, "-1/2", "1/2", "2", 26);
      for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 6; ++n) {
          auto sides = adjoint_ratio_sides(ctx, m, n);
          if (sides) CHECK(sides->first == sides->second);
        }
    }
  }
}

TEST_CASE("structure polynomials") {
  ModelContext ctx = make_ctx("1", "0", "0", "1", 18);
  StructureResult sr = structure_polynomial(ctx);
  SUBCASE("branches coincide and degrees are bounded") {
    CHECK(sr.parity_consistent_comm);
    CHECK(sr.parity_consistent_anti);
    CHECK(sr.commutator.degree_x() <= 2);
    CHECK(sr.commutator.degree_y() <= 6);
    CHECK(sr.anticommutator.degree_x() <= 2);
    CHECK(sr.anticommutator.degree_y() <= 6);
  }
  SUBCASE("re-prediction on held-out states") {
    Op x1 = xi1_op(ctx), x2 = xi2_op(ctx);
    for (int m = 0; m <= 5; ++m)
      for (int n = 0; n <= 7; ++n) {
        Rat dc = diagonal_value(ctx, op_commutator(x1, x2), m, n);
        Rat da = diagonal_value(ctx, op_anticommutator(x1, x2), m, n);
        Rat e = energy(m, n, ctx.params());
        CHECK(dc == sr.commutator.eval(e, ctx.a(n)));
        CHECK(da == sr.anticommutator.eval(e, ctx.a(n)));
      }
  }
  SUBCASE("k=1 printed displays differ term by term") {
    auto dc = term_diff(sr.commutator, k1_printed_commutator(ctx.params()));
    auto da =
        term_diff(sr.anticommutator, k1_printed_anticommutator(ctx.params()));
    // the displays are garbled in print; the machine-derived forms win
    CHECK(!dc.empty());
    CHECK(!da.empty());
    // the commutator carries an odd power the display caps at Q^4
    CHECK(sr.commutator.coeff(0, 5) == 48);
  }
  SUBCASE("undersized grids are rejected") {
    CHECK_THROWS_AS(structure_polynomial(ctx, 1, 1),
                    InterpolationUnderdetermined);
  }
}

TEST_CASE("structure polynomial at a non-unit k") {
  ModelContext ctx = make_ctx("2", "1/2", "-1/2", "1", 30);
  StructureResult sr = structure_polynomial(ctx);
  CHECK(sr.parity_consistent_comm);
  CHECK(sr.parity_consistent_anti);
  CHECK(sr.commutator.degree_x() <= 4);
  CHECK(sr.commutator.degree_y() <= 8);
  Op x1 = xi1_op(ctx), x2 = xi2_op(ctx);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 5; ++n) {
      Rat dc = diagonal_value(ctx, op_commutator(x1, x2), m, n);
      CHECK(dc == sr.commutator.eval(energy(m, n, ctx.params()), ctx.a(n)));
    }
}
