#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "refosc/errors.hpp"
#include "refosc/radial.hpp"

using namespace refosc;

TEST_CASE("canonical form folds powers of y into the exponent") {
  RadialFunction a(Rat(1), Poly({rat(0), rat(0), rat(3)}));
  CHECK(a.gamma() == 5);
  CHECK(a.poly() == Poly::constant(rat(3)));
  RadialFunction zero(rat(7, 2), Poly());
  CHECK(zero.is_zero());
  CHECK(zero.gamma() == 0);
}

TEST_CASE("times_y and div_y shift the exponent") {
  RadialFunction f(rat(1, 2), Poly({rat(1), rat(2)}));
  CHECK(f.times_y().gamma() == rat(5, 2));
  CHECK(f.div_y().gamma() == rat(-3, 2));
  CHECK(f.times_y().div_y() == f);
}

TEST_CASE("addition requires a shared exponent class") {
  RadialFunction f(rat(1, 2), Poly::constant(rat(1)));
  RadialFunction g(rat(5, 2), Poly::constant(rat(1)));
  // same class: mu differs by an even integer
  RadialFunction sum = f + g;
  CHECK(sum.gamma() == rat(1, 2));
  CHECK(sum.poly() == Poly({rat(1), rat(1)}));
  RadialFunction h(rat(3, 2), Poly::constant(rat(1)));
  CHECK_THROWS_AS(f + h, GammaMismatch);
}

TEST_CASE("derivative") {
  // d/dy [y^(g/2) e^(-y/2)] = (g/(2y) - 1/2) y^(g/2) e^(-y/2)
  Rat g = rat(3, 2);
  RadialFunction f(g, Poly::constant(rat(1)));
  RadialFunction d = f.d_dy();
  RadialFunction expect =
      f.scaled(rat(-1, 2)) + f.div_y().scaled(g / 2);
  CHECK(d == expect);
}

TEST_CASE("radial inner products") {
  Rat g = rat(1, 2);
  SUBCASE("ground state norm is a single Gamma value") {
    Amount n0 = radial_inner(laguerre_state(0, g), laguerre_state(0, g));
    CHECK(n0 == make_gamma(g));
  }
  SUBCASE("orthogonality") {
    for (int m = 0; m <= 6; ++m)
      for (int mp = m + 1; mp <= 7; ++mp)
        CHECK(radial_inner(laguerre_state(m, g), laguerre_state(mp, g))
                  .is_zero());
  }
  SUBCASE("squared norm matches Gamma(m+g+1)/m!") {
    for (int m = 0; m <= 6; ++m) {
      Amount ip = radial_inner(laguerre_state(m, g), laguerre_state(m, g));
      CHECK(ip == make_gamma(g + m).scaled(Rat(1) / factorial(m)));
    }
  }
  SUBCASE("exponent class mismatch is rejected") {
    CHECK_THROWS_AS(
        radial_inner(laguerre_state(0, g), laguerre_state(0, g + 1)),
        GammaMismatch);
  }
}

TEST_CASE("normalization constant in symbol form") {
  // M^2 = 2 w m! / Gamma(m + g + 1); at m = 0 this is 2w/Gamma(g+1)
  Rat g = rat(3, 2), w = rat(2);
  CHECK(radial_norm_sq(0, g, w) == make_gamma_inv(g).scaled(2 * w));
  CHECK(radial_norm_sq(2, g, w) ==
        make_gamma_inv(g + 2).scaled(2 * w * 2));
}
