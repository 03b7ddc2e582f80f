#include "refosc/symbolic.hpp"

#include <cmath>
#include <sstream>

#include "refosc/errors.hpp"

namespace refosc {

std::string Sym::str() const {
  switch (kind) {
    case SymKind::One:
      return "1";
    case SymKind::BetaEven:
      return "B((a+1)/2,(b+1)/2)";
    case SymKind::BetaOdd:
      return "B((a+2)/2,(b+1)/2)";
    case SymKind::Gamma:
      return "Gamma(1+" + to_string(tag) + ")";
    case SymKind::GammaInv:
      return "1/Gamma(1+" + to_string(tag) + ")";
  }
  return "?";
}

Amount Amount::rational(const Rat& r) {
  Amount a;
  a.add_term(Sym{}, r);
  return a;
}

Amount Amount::symbol(const Sym& s, const Rat& coeff) {
  Amount a;
  a.add_term(s, coeff);
  return a;
}

void Amount::add_term(const Sym& s, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Amount Amount::operator+(const Amount& o) const {
  Amount r = *this;
  for (const auto& [s, c] : o.terms_) r.add_term(s, c);
  return r;
}

Amount Amount::operator-(const Amount& o) const {
  Amount r = *this;
  for (const auto& [s, c] : o.terms_) r.add_term(s, -c);
  return r;
}

Amount Amount::scaled(const Rat& s) const {
  Amount r;
  if (s == 0) return r;
  for (const auto& [sym, c] : terms_) r.terms_.emplace(sym, c * s);
  return r;
}

Rat Amount::coeff(const Sym& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<std::pair<Sym, Rat>> Amount::single() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

std::optional<Rat> Amount::ratio(const Amount& a, const Amount& b) {
  auto sb = b.single();
  if (!sb) return std::nullopt;
  if (a.is_zero()) return Rat(0);
  auto sa = a.single();
  if (!sa || !(sa->first == sb->first)) return std::nullopt;
  return sa->second / sb->second;
}

namespace {
double beta_value(double a, double b) {
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}
}  // namespace

double Amount::to_double(double alpha, double beta) const {
  double acc = 0;
  for (const auto& [s, c] : terms_) {
    double v = 1;
    switch (s.kind) {
      case SymKind::One:
        v = 1;
        break;
      case SymKind::BetaEven:
        v = beta_value((alpha + 1) / 2, (beta + 1) / 2);
        break;
      case SymKind::BetaOdd:
        v = beta_value((alpha + 2) / 2, (beta + 1) / 2);
        break;
      case SymKind::Gamma:
        v = std::tgamma(1 + refosc::to_double(s.tag));
        break;
      case SymKind::GammaInv:
        v = 1.0 / std::tgamma(1 + refosc::to_double(s.tag));
        break;
    }
    acc += refosc::to_double(c) * v;
  }
  return acc;
}

std::string Amount::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    os << to_string(c) << "*" << s.str();
    first = false;
  }
  return os.str();
}

Amount make_gamma(const Rat& t) {
  if (t <= -1) throw ParameterOutOfRange("Gamma tag must exceed -1");
  if (is_integer(t))
    return Amount::rational(factorial(static_cast<unsigned long>(to_long(t))));
  // Gamma(1+t) = (t)(t-1)...(t*+1) Gamma(1+t*) with t* in (-1,0).
  Rat tstar = t;
  Rat scale(1);
  while (tstar > 0) {
    scale *= tstar;
    tstar -= 1;
  }
  return Amount::symbol(Sym{SymKind::Gamma, tstar}, scale);
}

Amount make_gamma_inv(const Rat& t) {
  if (t <= -1) throw ParameterOutOfRange("Gamma tag must exceed -1");
  if (is_integer(t))
    return Amount::rational(
        Rat(1) / factorial(static_cast<unsigned long>(to_long(t))));
  Rat tstar = t;
  Rat scale(1);
  while (tstar > 0) {
    scale *= tstar;
    tstar -= 1;
  }
  return Amount::symbol(Sym{SymKind::GammaInv, tstar}, Rat(1) / scale);
}

Amount make_beta(const Rat& a_in, const Rat& b_in, const Rat& alpha,
                 const Rat& beta) {
  Rat a = a_in, b = b_in;
  Rat scale(1);
  // B(a, b'+1) = (b'/(a+b')) B(a, b')
  Rat b_base = (beta + 1) / 2;
  Rat db = b - b_base;
  if (!is_integer(db) || db < 0)
    throw ParameterOutOfRange("Beta b-argument " + to_string(b) +
                              " is not an integer shift of (beta+1)/2");
  while (b > b_base) {
    b -= 1;
    scale *= b / (a + b);
  }
  // B(a'+1, b) = (a'/(a'+b)) B(a', b)
  Rat even_base = (alpha + 1) / 2;
  Rat odd_base = (alpha + 2) / 2;
  SymKind kind;
  Rat a_base;
  if (is_integer(a - even_base) && a - even_base >= 0) {
    kind = SymKind::BetaEven;
    a_base = even_base;
  } else if (is_integer(a - odd_base) && a - odd_base >= 0) {
    kind = SymKind::BetaOdd;
    a_base = odd_base;
  } else {
    throw ParameterOutOfRange("Beta a-argument " + to_string(a) +
                              " is not an integer shift of (alpha+1)/2 or "
                              "(alpha+2)/2");
  }
  while (a > a_base) {
    a -= 1;
    scale *= a / (a + b);
  }
  return Amount::symbol(Sym{kind, Rat(0)}, scale);
}

Amount symbolic_reduce(const Amount& a) {
  Amount r;
  for (const auto& [s, c] : a.terms()) r = r + Amount::symbol(s, c);
  return r;
}

}  // namespace refosc
