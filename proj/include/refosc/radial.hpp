#pragma once

// Quasi-polynomial radial functions y^(mu/2) e^(-y/2) poly(y). Powers of
// y fold into the exponent tag mu (mu and mu+2 describe the same family),
// so the space is closed under d/dy, multiplication by y and division by
// y. Canonical form: the polynomial part has a nonzero constant term.

#include <string>

#include "refosc/poly.hpp"
#include "refosc/rational.hpp"
#include "refosc/symbolic.hpp"

namespace refosc {

class RadialFunction {
 public:
  RadialFunction() = default;
  RadialFunction(Rat mu, Poly poly) : mu_(std::move(mu)), poly_(std::move(poly)) {
    normalize();
  }

  static RadialFunction zero() { return RadialFunction(); }

  const Rat& gamma() const { return mu_; }
  const Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  bool operator==(const RadialFunction& o) const {
    return mu_ == o.mu_ && poly_ == o.poly_;
  }

  RadialFunction scaled(const Rat& s) const {
    return RadialFunction(mu_, poly_.scaled(s));
  }
  RadialFunction operator+(const RadialFunction& o) const;
  RadialFunction operator-(const RadialFunction& o) const {
    return *this + o.scaled(Rat(-1));
  }

  RadialFunction d_dy() const;
  RadialFunction times_y() const;
  RadialFunction div_y() const;

  double eval(double y) const;
  std::string str() const;

 private:
  void normalize();
  Rat mu_ = Rat(0);
  Poly poly_;
};

// Y_m^gamma = y^(gamma/2) e^(-y/2) L_m^gamma(y); requires gamma > -1.
RadialFunction laguerre_state(int m, const Rat& gamma);

// Integral over [0, inf) of f*g dy as a multiple of a Gamma symbol.
// Requires both factors in the same exponent class.
Amount radial_inner(const RadialFunction& f, const RadialFunction& g);

// Squared normalization 2*omega*m!/Gamma(m+gamma+1) in symbol form.
Amount radial_norm_sq(int m, const Rat& gamma, const Rat& omega);

}  // namespace refosc
