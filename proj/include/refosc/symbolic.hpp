#pragma once

// Finite linear combinations of transcendental basis values with rational
// coefficients. Only three symbol families appear in the model's
// integrals: the two Beta values attached to the angular weight and
// Gamma(1+t) values from the radial measure. Construction reduces every
// symbol to a canonical base, so equality of amounts decides equality of
// the represented reals (the bases being rationally independent).

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "refosc/rational.hpp"

namespace refosc {

enum class SymKind {
  One,       // the rational unit
  BetaEven,  // B((alpha+1)/2, (beta+1)/2)
  BetaOdd,   // B((alpha+2)/2, (beta+1)/2)
  Gamma,     // Gamma(1+tag), tag canonical in (-1,0)
  GammaInv,  // 1/Gamma(1+tag), tag canonical in (-1,0)
};

struct Sym {
  SymKind kind = SymKind::One;
  Rat tag = Rat(0);  // meaningful for Gamma/GammaInv only

  bool operator<(const Sym& o) const {
    if (kind != o.kind) return kind < o.kind;
    return cmp(tag, o.tag) < 0;
  }
  bool operator==(const Sym& o) const {
    return kind == o.kind && tag == o.tag;
  }
  std::string str() const;
};

class Amount {
 public:
  Amount() = default;

  static Amount rational(const Rat& r);
  static Amount symbol(const Sym& s, const Rat& coeff = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Amount& o) const { return terms_ == o.terms_; }

  Amount operator+(const Amount& o) const;
  Amount operator-(const Amount& o) const;
  Amount scaled(const Rat& s) const;

  // Coefficient on a given symbol (0 if absent).
  Rat coeff(const Sym& s) const;
  // The single (symbol, coefficient) term, if the amount has exactly one.
  std::optional<std::pair<Sym, Rat>> single() const;
  const std::map<Sym, Rat>& terms() const { return terms_; }

  // Exact ratio a/b when both amounts are multiples of one common symbol.
  static std::optional<Rat> ratio(const Amount& a, const Amount& b);

  double to_double(double alpha, double beta) const;
  std::string str() const;

 private:
  void add_term(const Sym& s, const Rat& c);
  std::map<Sym, Rat> terms_;
};

inline Amount operator*(const Rat& s, const Amount& a) { return a.scaled(s); }

// Gamma(1+t) for rational t > -1, reduced: integer tags fold into the
// rational part, fractional tags reduce to a representative in (-1,0).
Amount make_gamma(const Rat& t);
Amount make_gamma_inv(const Rat& t);

// B(a, b) reduced to the BetaEven/BetaOdd base of the given (alpha, beta):
// a must sit an integer above (alpha+1)/2 or (alpha+2)/2, b an integer
// above (beta+1)/2.
Amount make_beta(const Rat& a, const Rat& b, const Rat& alpha,
                 const Rat& beta);

// Re-normalizes an amount (drops zero coefficients). Factory-built
// amounts are already reduced, so this is idempotent.
Amount symbolic_reduce(const Amount& a);

}  // namespace refosc
