#pragma once

#include <numeric>
#include <string>

#include "refosc/errors.hpp"
#include "refosc/rational.hpp"

namespace refosc {

// Model parameters: k = p/q in lowest terms, alpha, beta > -1, omega > 0.
struct Params {
  long p = 1;
  long q = 1;
  Rat alpha = Rat(0);
  Rat beta = Rat(0);
  Rat omega = Rat(1);

  Rat k() const { return rat(p, q); }

  void validate() const {
    if (p <= 0 || q <= 0)
      throw ParameterOutOfRange("k must be a positive rational p/q");
    if (std::gcd(p, q) != 1)
      throw ParameterOutOfRange("p and q must be coprime");
    if (alpha <= -1) throw ParameterOutOfRange("alpha must exceed -1");
    if (beta <= -1) throw ParameterOutOfRange("beta must exceed -1");
    if (omega <= 0) throw ParameterOutOfRange("omega must be positive");
  }

  std::string str() const {
    return "k=" + std::to_string(p) + "/" + std::to_string(q) +
           " alpha=" + to_string(alpha) + " beta=" + to_string(beta) +
           " omega=" + to_string(omega);
  }
};

inline Params make_params(const std::string& k, const std::string& alpha,
                          const std::string& beta, const std::string& omega) {
  Params pr;
  Rat kr = parse_rat(k);
  if (kr <= 0) throw ParameterOutOfRange("k must be positive, got " + k);
  pr.p = to_long(Rat(kr.get_num()));
  pr.q = to_long(Rat(kr.get_den()));
  pr.alpha = parse_rat(alpha);
  pr.beta = parse_rat(beta);
  pr.omega = parse_rat(omega);
  pr.validate();
  return pr;
}

}  // namespace refosc
