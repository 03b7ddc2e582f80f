#include "refosc/context.hpp"

#include "refosc/errors.hpp"

namespace refosc {

void ModelContext::ensure_depth(int n) {
  for (int j = static_cast<int>(pbasis_.size()); j <= n; ++j) {
    Poly pj = little_jacobi(j, params_.alpha, params_.beta);
    Poly qp = apply_q_tilde(params_.alpha, params_.beta, pj);
    // eigenvalue read off the top coefficient of the (monic) image
    Rat aj = qp.coeff(j);
    pbasis_.push_back(std::move(pj));
    a_.push_back(std::move(aj));
    hratio_.push_back(refosc::norm_ratio(j, params_.alpha, params_.beta));
  }
}

const Poly& ModelContext::P(int n) const {
  if (n < 0 || n >= static_cast<int>(pbasis_.size()))
    throw Error("angular basis not deep enough: need " + std::to_string(n) +
                ", have " + std::to_string(depth()));
  return pbasis_[n];
}

const Rat& ModelContext::a(int n) const {
  if (n < 0 || n >= static_cast<int>(a_.size()))
    throw Error("angular basis not deep enough for eigenvalue " +
                std::to_string(n));
  return a_[n];
}

const Rat& ModelContext::norm_ratio(int n) const {
  if (n < 0 || n >= static_cast<int>(hratio_.size()))
    throw Error("angular basis not deep enough for norm ratio " +
                std::to_string(n));
  return hratio_[n];
}

std::vector<std::pair<int, Rat>> ModelContext::expand(const Poly& f) const {
  std::vector<std::pair<int, Rat>> out;
  Poly rest = f;
  while (!rest.is_zero()) {
    int d = *rest.degree();
    if (d > depth())
      throw Error("expansion degree " + std::to_string(d) +
                  " exceeds cached basis depth " + std::to_string(depth()));
    Rat c = rest.coeff(d);
    out.emplace_back(d, c);
    rest = rest - P(d).scaled(c);
    if (!rest.is_zero() && *rest.degree() >= d)
      throw Error("eigenbasis expansion failed to reduce the degree");
  }
  return out;
}

}  // namespace refosc
