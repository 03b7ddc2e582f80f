#include "refosc/poly.hpp"

#include <sstream>

#include "refosc/errors.hpp"

namespace refosc {

namespace {
const Rat kZero(0);
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(int degree, const Rat& coeff) {
  if (coeff == 0) return Poly();
  std::vector<Rat> c(degree + 1, Rat(0));
  c[degree] = coeff;
  return Poly(std::move(c));
}

const Rat& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rat> c = c_;
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(c));
}

Poly Poly::scaled(const Rat& s) const {
  if (s == 0) return Poly();
  std::vector<Rat> c = c_;
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(c));
}

Poly Poly::reflected() const {
  std::vector<Rat> c = c_;
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Poly(std::move(c));
}

Poly Poly::divided_by_var() const {
  if (is_zero()) return Poly();
  if (c_[0] != 0)
    throw NotDivisible("constant term " + to_string(c_[0]) +
                       " is nonzero under division by the variable");
  std::vector<Rat> c(c_.begin() + 1, c_.end());
  return Poly(std::move(c));
}

Poly Poly::shifted_up(int n) const {
  if (is_zero() || n == 0) return *this;
  std::vector<Rat> c(c_.size() + n, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i + n] = c_[i];
  return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + to_double(*it);
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    Rat a = abs(c_[i]);
    if (a != 1 || i == 0) os << to_string(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace refosc
