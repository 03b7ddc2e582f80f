#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "refosc/errors.hpp"
#include "refosc/poly.hpp"

using namespace refosc;

TEST_CASE("arithmetic and trimming") {
  Poly p({rat(1), rat(2)});
  Poly q({rat(-1), rat(-2)});
  CHECK((p + q).is_zero());
  CHECK(!(p + q).degree().has_value());
  CHECK((p * q).degree() == 2);
  CHECK(p.scaled(rat(0)).is_zero());
  CHECK(Poly::monomial(3).coeff(3) == 1);
  CHECK(Poly::monomial(3).coeff(2) == 0);
}

TEST_CASE("derivative and evaluation") {
  Poly p({rat(1), rat(0), rat(3)});  // 1 + 3x^2
  CHECK(p.derivative() == Poly({rat(0), rat(6)}));
  CHECK(p.eval(rat(1, 2)) == rat(7, 4));
  CHECK(p.eval(2.0) == doctest::Approx(13.0));
}

TEST_CASE("reflect basics") {
  CHECK(Poly({rat(0), rat(1), rat(1)}).reflected() ==
        Poly({rat(0), rat(-1), rat(1)}));
}

TEST_CASE("reflect is an involution") {
  testutil::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Poly p = rng.poly(20);
    CHECK(p.reflected().reflected() == p);
  }
}

TEST_CASE("odd part is always divisible by the variable") {
  testutil::Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    Poly p = rng.poly(20);
    Poly odd = p - p.reflected();
    CHECK(odd.coeff(0) == 0);
    CHECK_NOTHROW(odd.divided_by_var());
  }
}

TEST_CASE("division by the variable") {
  CHECK(Poly({rat(0), rat(2)}).divided_by_var() == Poly::constant(rat(2)));
  CHECK_THROWS_AS(Poly({rat(1), rat(1)}).divided_by_var(), NotDivisible);
}

TEST_CASE("printing") {
  CHECK(Poly({rat(-1, 2), rat(1)}).str() == "x - 1/2");
  CHECK(Poly().str() == "0");
}
