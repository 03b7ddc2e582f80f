#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "refosc/errors.hpp"
#include "refosc/sampling.hpp"

using namespace refosc;

TEST_CASE("two evaluation routes agree to 1e-10 on a 100-point grid") {
  ModelContext ctx(make_params("1", "0", "0", "1"));
  ctx.ensure_depth(4);
  SampleGrid grid = default_grid(ctx);
  grid.r_count = 10;
  grid.theta_count = 10;
  for (int m : {0, 1})
    for (int n : {0, 2}) {
      auto pts = sample_wavefunction(ctx, m, n, grid);  // cross-checks inside
      CHECK(pts.size() == 100);
    }
}

TEST_CASE("routes agree away from the gauge singularities") {
  ModelContext ctx(make_params("3/2", "1/2", "1/2", "1"));
  ctx.ensure_depth(4);
  for (double r : {0.4, 1.1, 2.3})
    for (double theta : {-0.9, -0.3, 0.4, 0.9}) {
      check_grid_point(ctx, theta);
      double g = eval_psi_gauged(ctx, 0, 1, r, theta);
      double d = eval_psi_direct(ctx, 0, 1, r, theta);
      CHECK(g == doctest::Approx(d).epsilon(1e-10));
    }
}

TEST_CASE("regression pin of the ground state value") {
  ModelContext ctx(make_params("1", "0", "0", "1"));
  ctx.ensure_depth(2);
  double v = eval_psi_gauged(ctx, 0, 0, 1.0, 0.78539816339744831);
  CHECK(v > 0);
  CHECK(v == doctest::Approx(0.67166186951428775).epsilon(1e-12));
}

TEST_CASE("numerical normalization") {
  ModelContext ctx(make_params("1", "0", "0", "1"));
  ctx.ensure_depth(4);
  CHECK(norm_quadrature(ctx, 0, 0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(norm_quadrature(ctx, 1, 2) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sign change at the root of the first eigenpolynomial") {
  ModelContext ctx(make_params("1", "1/2", "0", "1"));
  ctx.ensure_depth(3);
  // P_1 vanishes at x = (alpha+1)/(alpha+beta+2)
  double root = to_double((ctx.params().alpha + 1) /
                          (ctx.params().alpha + ctx.params().beta + 2));
  double below = std::asin(root - 0.05);
  double above = std::asin(root + 0.05);
  double vb = eval_psi_gauged(ctx, 0, 1, 1.0, below);
  double va = eval_psi_gauged(ctx, 0, 1, 1.0, above);
  CHECK(vb * va < 0);
}

TEST_CASE("grid singularity guards") {
  ModelContext ctx(make_params("1", "1/2", "0", "1"));
  ctx.ensure_depth(2);
  CHECK_THROWS_AS(check_grid_point(ctx, 0.0), GridSingularity);  // alpha != 0
  CHECK_NOTHROW(check_grid_point(ctx, 0.3));
  ModelContext ctx2(make_params("1", "0", "1/2", "1"));
  ctx2.ensure_depth(2);
  CHECK_THROWS_AS(check_grid_point(ctx2, 1.5707963267948966),
                  GridSingularity);  // beta != 0 at the corner
  ModelContext ctx3(make_params("1", "0", "0", "1"));
  ctx3.ensure_depth(2);
  CHECK_NOTHROW(check_grid_point(ctx3, 0.0));
}
