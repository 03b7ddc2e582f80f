#include "refosc/radial.hpp"

#include <cmath>

#include "refosc/errors.hpp"
#include "refosc/orthopoly.hpp"

namespace refosc {

void RadialFunction::normalize() {
  if (poly_.is_zero()) {
    mu_ = Rat(0);
    return;
  }
  int shift = 0;
  while (poly_.coeff(shift) == 0) ++shift;
  for (int i = 0; i < shift; ++i) poly_ = poly_.divided_by_var();
  mu_ += Rat(2 * shift);
}

RadialFunction RadialFunction::operator+(const RadialFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Rat d = (mu_ - o.mu_) / 2;
  if (!is_integer(d))
    throw GammaMismatch("cannot combine exponent classes " + to_string(mu_) +
                        " and " + to_string(o.mu_));
  long shift = to_long(d);
  if (shift >= 0)
    return RadialFunction(o.mu_, poly_.shifted_up(shift) + o.poly_);
  return RadialFunction(mu_, poly_ + o.poly_.shifted_up(-shift));
}

RadialFunction RadialFunction::d_dy() const {
  if (is_zero()) return *this;
  // d/dy [y^(mu/2) e^(-y/2) f] = y^(mu/2) e^(-y/2) (f' - f/2)
  //                              + (mu/2) y^((mu-2)/2) e^(-y/2) f
  RadialFunction a(mu_, poly_.derivative() - poly_.scaled(rat(1, 2)));
  RadialFunction b(mu_ - 2, poly_.scaled(mu_ / 2));
  return a + b;
}

RadialFunction RadialFunction::times_y() const {
  if (is_zero()) return *this;
  return RadialFunction(mu_ + 2, poly_);
}

RadialFunction RadialFunction::div_y() const {
  if (is_zero()) return *this;
  return RadialFunction(mu_ - 2, poly_);
}

double RadialFunction::eval(double y) const {
  if (is_zero()) return 0.0;
  return std::pow(y, to_double(mu_) / 2) * std::exp(-y / 2) * poly_.eval(y);
}

std::string RadialFunction::str() const {
  if (is_zero()) return "0";
  return "y^(" + to_string(mu_ / 2) + ")e^(-y/2)*(" + poly_.str("y") + ")";
}

RadialFunction laguerre_state(int m, const Rat& gamma) {
  if (gamma <= -1) throw ParameterOutOfRange("gamma must exceed -1");
  return RadialFunction(gamma, laguerre(m, gamma));
}

Amount radial_inner(const RadialFunction& f, const RadialFunction& g) {
  if (f.is_zero() || g.is_zero()) return Amount();
  Rat d = (f.gamma() - g.gamma()) / 2;
  if (!is_integer(d))
    throw GammaMismatch("radial inner product across exponent classes " +
                        to_string(f.gamma()) + " and " + to_string(g.gamma()));
  Rat nu = (f.gamma() + g.gamma()) / 2;
  if (nu <= -1)
    throw ParameterOutOfRange("divergent radial integral, exponent " +
                              to_string(nu));
  // Integral y^(nu+j) e^-y dy = Gamma(nu+j+1)
  Poly prod = f.poly() * g.poly();
  Amount acc;
  for (int j = 0; j <= *prod.degree(); ++j) {
    if (prod.coeff(j) == 0) continue;
    acc = acc + make_gamma(nu + Rat(j)).scaled(prod.coeff(j));
  }
  return acc;
}

Amount radial_norm_sq(int m, const Rat& gamma, const Rat& omega) {
  return make_gamma_inv(Rat(m) + gamma).scaled(Rat(2) * omega * factorial(m));
}

}  // namespace refosc
