#include "refosc/sampling.hpp"

#include <cmath>

#include "refosc/errors.hpp"
#include "refosc/radial.hpp"
#include "refosc/spectrum.hpp"

namespace refosc {

namespace {

double beta_even_value(const ModelContext& ctx) {
  double a = to_double(ctx.params().alpha), b = to_double(ctx.params().beta);
  return std::exp(std::lgamma((a + 1) / 2) + std::lgamma((b + 1) / 2) -
                  std::lgamma((a + b) / 2 + 1));
}

// gauge factor with N_0 = BetaEven^(-1/2):
//   N_0 |sin phi|^(a/2) (cos phi)^(b/2) (1 + sin phi)^(1/2)
double gauge_factor(const ModelContext& ctx, double phi) {
  double a = to_double(ctx.params().alpha), b = to_double(ctx.params().beta);
  double n0 = 1.0 / std::sqrt(beta_even_value(ctx));
  return n0 * std::pow(std::fabs(std::sin(phi)), a / 2) *
         std::pow(std::cos(phi), b / 2) * std::sqrt(1 + std::sin(phi));
}

// 64-point composite Gauss-Legendre on [lo, hi]
double integrate(double lo, double hi, int panels,
                 const std::function<double(double)>& f) {
  static const double xs[] = {
      -0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
      -0.7554044083550030, -0.6178762444026438, -0.4580167776572274,
      -0.2816035507792589, -0.0950125098376374, 0.0950125098376374,
      0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
      0.7554044083550030,  0.8656312023878318,  0.9445750230732326,
      0.9894009349916499};
  static const double wsq[] = {
      0.0271524594117541, 0.0622535239386479, 0.0951585116824928,
      0.1246289712555339, 0.1495959888165767, 0.1691565193950025,
      0.1826034150449236, 0.1894506104550685, 0.1894506104550685,
      0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
      0.1246289712555339, 0.0951585116824928, 0.0622535239386479,
      0.0271524594117541};
  double acc = 0;
  double h = (hi - lo) / panels;
  for (int pnl = 0; pnl < panels; ++pnl) {
    double a = lo + pnl * h, b = a + h;
    double c = (a + b) / 2, d = (b - a) / 2;
    for (int i = 0; i < 16; ++i) acc += wsq[i] * f(c + d * xs[i]) * d;
  }
  return acc;
}

}  // namespace

double psi_prefactor(const ModelContext& ctx, int m, int n) {
  double w = to_double(ctx.params().omega);
  double gamma = to_double(ctx.gamma_n(n));
  double m2 =
      2 * w * std::exp(std::lgamma(m + 1) - std::lgamma(m + gamma + 1));
  // (N_n/N_0)^2 = h_0/h_n
  double nn = std::sqrt(1.0 / to_double(ctx.norm_ratio(n)));
  return std::sqrt(m2) * nn;
}

void check_grid_point(const ModelContext& ctx, double theta) {
  double k = to_double(ctx.k());
  double phi = k * theta;
  const double eps = 1e-12;
  if (std::fabs(phi) > 3.14159265358979312 / 2 + eps)
    throw GridSingularity("theta outside the angular domain");
  if (!(ctx.params().alpha == 0) && std::fabs(std::sin(phi)) < eps)
    throw GridSingularity("gauge factor singular: sin(k theta) = 0");
  if (!(ctx.params().beta == 0) && std::fabs(std::cos(phi)) < eps)
    throw GridSingularity("gauge factor singular: cos(k theta) = 0");
}

double eval_psi_gauged(const ModelContext& ctx, int m, int n, double r,
                       double theta) {
  double k = to_double(ctx.k());
  double w = to_double(ctx.params().omega);
  double phi = k * theta;
  double x = std::sin(phi);
  double y = w * r * r;
  RadialFunction rad = laguerre_state(m, ctx.gamma_n(n));
  return psi_prefactor(ctx, m, n) * rad.eval(y) * ctx.P(n).eval(x) *
         gauge_factor(ctx, phi);
}

double eval_psi_direct(const ModelContext& ctx, int m, int n, double r,
                       double theta) {
  double k = to_double(ctx.k());
  double w = to_double(ctx.params().omega);
  double a = to_double(ctx.params().alpha), b = to_double(ctx.params().beta);
  double phi = k * theta;
  double gamma = to_double(ctx.gamma_n(n));
  double y = w * r * r;
  double radial = std::pow(std::sqrt(w) * r, gamma) * std::exp(-y / 2) *
                  laguerre(m, ctx.gamma_n(n)).eval(y);
  double angular = std::pow(std::fabs(std::sin(phi)), a / 2) *
                   std::pow(std::cos(phi), b / 2) *
                   std::sqrt(1 + std::sin(phi)) *
                   ctx.P(n).eval(std::sin(phi));
  double n0 = 1.0 / std::sqrt(beta_even_value(ctx));
  return psi_prefactor(ctx, m, n) * n0 * radial * angular;
}

SampleGrid default_grid(const ModelContext& ctx) {
  SampleGrid g;
  double k = to_double(ctx.k());
  double half = 3.14159265358979312 / (2 * k);
  g.theta_min = -half * 0.95;
  g.theta_max = half * 0.95;
  return g;
}

std::vector<SamplePoint> sample_wavefunction(const ModelContext& ctx, int m,
                                             int n, const SampleGrid& grid) {
  std::vector<SamplePoint> out;
  for (int i = 0; i < grid.r_count; ++i) {
    double r = grid.r_min +
               (grid.r_max - grid.r_min) * i /
                   std::max(grid.r_count - 1, 1);
    for (int j = 0; j < grid.theta_count; ++j) {
      double theta = grid.theta_min +
                     (grid.theta_max - grid.theta_min) * j /
                         std::max(grid.theta_count - 1, 1);
      check_grid_point(ctx, theta);
      double g = eval_psi_gauged(ctx, m, n, r, theta);
      double d = eval_psi_direct(ctx, m, n, r, theta);
      double scale = std::max({std::fabs(g), std::fabs(d), 1e-300});
      if (std::fabs(g - d) / scale > 1e-10)
        throw VerificationFailure(
            "gauged and direct evaluations disagree at r=" +
            std::to_string(r) + ", theta=" + std::to_string(theta));
      out.push_back(SamplePoint{r, theta, g});
    }
  }
  return out;
}

double norm_quadrature(const ModelContext& ctx, int m, int n) {
  double w = to_double(ctx.params().omega);
  double gamma = to_double(ctx.gamma_n(n));
  // radial part: integral over r of prefactor^2-normalized |Y|^2 r dr
  RadialFunction rad = laguerre_state(m, ctx.gamma_n(n));
  double m2 = 2 * w * std::exp(std::lgamma(m + 1) - std::lgamma(m + gamma + 1));
  double rmax = std::sqrt(60.0 / w);
  double radial = integrate(0, rmax, 64, [&](double r) {
    double v = rad.eval(w * r * r);
    return m2 * v * v * r;
  });
  // angular part: integral over phi of |N_n/N_0|^2 gauge^2 P_n^2
  double nn2 = 1.0 / to_double(ctx.norm_ratio(n));
  double half = 3.14159265358979312 / 2;
  auto ang = [&](double phi) {
    double gf = gauge_factor(ctx, phi);
    double pv = ctx.P(n).eval(std::sin(phi));
    return nn2 * gf * gf * pv * pv;
  };
  double angular =
      integrate(-half, 0, 64, ang) + integrate(0, half, 64, ang);
  return radial * angular;
}

}  // namespace refosc
