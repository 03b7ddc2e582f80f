#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "refosc/errors.hpp"
#include "refosc/rational.hpp"
#include "refosc/special.hpp"

using namespace refosc;

TEST_CASE("parse and format round-trip") {
  CHECK(to_string(parse_rat("3/4")) == "3/4");
  CHECK(to_string(parse_rat("-3/4")) == "-3/4");
  CHECK(to_string(parse_rat("7")) == "7");
  CHECK(parse_rat("15/6") == rat(5, 2));
  CHECK(to_string(rat(-10, 4)) == "-5/2");
  CHECK_THROWS_AS(parse_rat(""), ParameterOutOfRange);
  CHECK_THROWS_AS(parse_rat("x"), ParameterOutOfRange);
  CHECK_THROWS_AS(parse_rat("1/0"), ParameterOutOfRange);
}

TEST_CASE("canonical form invariants") {
  testutil::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Rat r = rng.rational(1000, 500);
    CHECK(r.get_den() > 0);
    Int g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    if (r != 0) CHECK(g == 1);
    CHECK(parse_rat(to_string(r)) == r);
  }
}

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(rat(7, 3), 0) == 1);
  CHECK(pochhammer(rat(3, 2), 2) == rat(15, 4));
  CHECK(pochhammer(rat(-2), 3) == 0);
}

TEST_CASE("pochhammer splitting identity") {
  testutil::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    Rat a = rng.rational();
    unsigned long m = rng.integer(0, 10), n = rng.integer(0, 10);
    CHECK(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + Rat(static_cast<long>(m)), n));
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(rat(5), 2) == 10);
  CHECK(binomial(rat(7, 2), 2) == rat(35, 8));
}

TEST_CASE("gamma_ratio") {
  // Gamma(x)/Gamma(y) = (y)_(x-y)
  CHECK(gamma_ratio(rat(5), rat(3)) == 12);
  CHECK(gamma_ratio(rat(7, 2), rat(3, 2)) == rat(15, 4));
  CHECK_THROWS_AS(gamma_ratio(rat(3, 2), rat(1)), Error);
}

TEST_CASE("terminating hypergeometric series") {
  Poly x2 = Poly::monomial(2);
  SUBCASE("a = 0 gives the constant 1") {
    Poly r = hyp2f1_terminating(rat(0), rat(5, 3), rat(1, 2), x2);
    CHECK(r == Poly::constant(rat(1)));
  }
  SUBCASE("a = -1 gives the two-term series") {
    // 1 - (b/c) z
    Poly r = hyp2f1_terminating(rat(-1), rat(2), rat(1, 2), x2);
    CHECK(r == Poly({rat(1), rat(0), rat(-4)}));
  }
  SUBCASE("polynomial argument powers compose") {
    Poly r = hyp2f1_terminating(rat(-2), rat(1), rat(1), Poly::monomial(1));
    // sum_j C(2,j) (-z)^j = (1-z)^2
    CHECK(r == Poly({rat(1), rat(-2), rat(1)}));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(
        hyp2f1_terminating(rat(1, 2), rat(1, 3), rat(1), x2), NonTerminating);
    CHECK_THROWS_AS(hyp2f1_terminating(rat(-3), rat(1), rat(-1), x2), PoleInC);
  }
}
