#pragma once

// Dense-enough bivariate polynomials over rationals, plus exact Newton
// interpolation. Used to express the diagonal action of the symmetry
// algebra as polynomials in (epsilon, n) and then in (H, Q).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "refosc/poly.hpp"
#include "refosc/rational.hpp"

namespace refosc {

class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly constant(const Rat& r);

  bool is_zero() const { return c_.empty(); }
  void set(int i, int j, const Rat& v);
  Rat coeff(int i, int j) const;
  const std::map<std::pair<int, int>, Rat>& terms() const { return c_; }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly scaled(const Rat& s) const;
  bool operator==(const BiPoly& o) const { return c_ == o.c_; }

  int degree_x() const;  // first variable
  int degree_y() const;  // second variable

  Rat eval(const Rat& x, const Rat& y) const;

  // Substitute x := xs(u), y := ys(v); returns a polynomial in (u, v).
  BiPoly substitute(const Poly& xs, const Poly& ys) const;

  std::string str(const std::string& xv, const std::string& yv) const;

 private:
  std::map<std::pair<int, int>, Rat> c_;
};

// Exact polynomial through the given nodes (distinct abscissae).
Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

}  // namespace refosc
