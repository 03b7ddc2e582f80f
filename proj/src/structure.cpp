#include "refosc/structure.hpp"

#include <algorithm>
#include <sstream>

#include "refosc/errors.hpp"

namespace refosc {

BiPoly BiPoly::constant(const Rat& r) {
  BiPoly p;
  p.set(0, 0, r);
  return p;
}

void BiPoly::set(int i, int j, const Rat& v) {
  if (v == 0)
    c_.erase({i, j});
  else
    c_[{i, j}] = v;
}

Rat BiPoly::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Rat(0) : it->second;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly out = *this;
  for (const auto& [ij, v] : o.c_) out.set(ij.first, ij.second,
                                           out.coeff(ij.first, ij.second) + v);
  return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  return *this + o.scaled(Rat(-1));
}

BiPoly BiPoly::scaled(const Rat& s) const {
  BiPoly out;
  if (s == 0) return out;
  for (const auto& [ij, v] : c_) out.c_.emplace(ij, v * s);
  return out;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [ij, v] : c_) d = std::max(d, ij.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [ij, v] : c_) d = std::max(d, ij.second);
  return d;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& [ij, v] : c_)
    acc += v * pow_rat(x, ij.first) * pow_rat(y, ij.second);
  return acc;
}

BiPoly BiPoly::substitute(const Poly& xs, const Poly& ys) const {
  const int dx = degree_x(), dy = degree_y();
  std::vector<Poly> xpow(std::max(dx, 0) + 1), ypow(std::max(dy, 0) + 1);
  xpow[0] = Poly::constant(Rat(1));
  for (int i = 1; i <= dx; ++i) xpow[i] = xpow[i - 1] * xs;
  ypow[0] = Poly::constant(Rat(1));
  for (int j = 1; j <= dy; ++j) ypow[j] = ypow[j - 1] * ys;
  BiPoly out;
  for (const auto& [ij, v] : c_) {
    const Poly& px = xpow[ij.first];
    const Poly& py = ypow[ij.second];
    if (px.is_zero() || py.is_zero()) continue;
    for (int i = 0; i <= *px.degree(); ++i) {
      if (px.coeff(i) == 0) continue;
      for (int j = 0; j <= *py.degree(); ++j) {
        if (py.coeff(j) == 0) continue;
        out.set(i, j, out.coeff(i, j) + v * px.coeff(i) * py.coeff(j));
      }
    }
  }
  return out;
}

std::string BiPoly::str(const std::string& xv, const std::string& yv) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, v] : c_) {
    if (!first) os << " + ";
    os << "(" << to_string(v) << ")";
    if (ij.first > 0) os << "*" << xv << "^" << ij.first;
    if (ij.second > 0) os << "*" << yv << "^" << ij.second;
    first = false;
  }
  return os.str();
}

Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  const size_t n = points.size();
  if (n == 0) throw InterpolationUnderdetermined("no interpolation nodes");
  // Newton divided differences.
  std::vector<Rat> coef(n);
  std::vector<Rat> col(n);
  for (size_t i = 0; i < n; ++i) col[i] = points[i].second;
  coef[0] = col[0];
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = 0; i + level < n; ++i) {
      Rat dx = points[i + level].first - points[i].first;
      if (dx == 0)
        throw InterpolationUnderdetermined("duplicate interpolation node");
      col[i] = (col[i + 1] - col[i]) / dx;
    }
    coef[level] = col[0];
  }
  // Expand the Newton form into monomial coefficients.
  Poly acc;
  Poly basis = Poly::constant(Rat(1));
  for (size_t i = 0; i < n; ++i) {
    acc = acc + basis.scaled(coef[i]);
    basis = basis * (Poly::monomial(1) - Poly::constant(points[i].first));
  }
  return acc;
}

}  // namespace refosc
