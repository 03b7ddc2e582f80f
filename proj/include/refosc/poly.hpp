#pragma once

// Dense univariate polynomials over exact rationals. Degrees stay small
// (a few dozen at most), so no sparse representation is needed.

#include <optional>
#include <string>
#include <vector>

#include "refosc/rational.hpp"

namespace refosc {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(const Rat& r) { return Poly({r}); }
  static Poly monomial(int degree, const Rat& coeff = Rat(1));

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is a distinguished "none".
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  // Coefficient of x^i (0 beyond the stored degree).
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const;
  // x -> -x: negates odd-degree coefficients.
  Poly reflected() const;
  // Exact division by the variable; requires a zero constant term.
  Poly divided_by_var() const;
  // Multiplication by x^n.
  Poly shifted_up(int n) const;

  Rat eval(const Rat& x) const;
  double eval(double x) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;  // c_[i] is the coefficient of x^i
};

inline Poly operator*(const Rat& s, const Poly& p) { return p.scaled(s); }

}  // namespace refosc
