#pragma once

// Shared test utilities: deterministic random rationals/polynomials and a
// tanh-sinh quadrature oracle for endpoint-singular integrands.

#include <cmath>
#include <functional>
#include <random>

#include "refosc/poly.hpp"
#include "refosc/rational.hpp"

namespace testutil {

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  refosc::Rat rational(long num_range = 20, long den_range = 6) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    return refosc::rat(num(gen_), den(gen_));
  }

  refosc::Poly poly(int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(gen_);
    std::vector<refosc::Rat> c(d + 1);
    for (auto& x : c) x = rational();
    return refosc::Poly(std::move(c));
  }

  int integer(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(gen_);
  }

 private:
  std::mt19937 gen_;
};

// Tanh-sinh quadrature on (a, b); tolerates integrable endpoint
// singularities. Fixed step, good to ~1e-12 on the integrands used here.
inline double tanh_sinh(const std::function<double(double)>& f, double a,
                        double b) {
  const double half = (b - a) / 2, mid = (a + b) / 2;
  const double h = 1.0 / 64;
  const double pi_2 = 1.5707963267948966;
  double sum = 0;
  for (double t = -6.0; t <= 6.0; t += h) {
    double u = pi_2 * std::sinh(t);
    double x = std::tanh(u);
    double w = pi_2 * std::cosh(t) / (std::cosh(u) * std::cosh(u));
    double fx = f(mid + half * x);
    if (std::isfinite(fx)) sum += w * fx;
  }
  return sum * half * h;
}

}  // namespace testutil
