#include "refosc/orthopoly.hpp"

#include <vector>

#include "refosc/errors.hpp"
#include "refosc/special.hpp"

namespace refosc {

Poly apply_q_tilde(const Rat& alpha, const Rat& beta, const Poly& f) {
  Poly rf = f.reflected();
  // (1-x) d/dx (Rf); the reflected coefficients already carry the chain
  // rule, so rf.derivative() is d/dx f(-x).
  Poly out =
      (Poly::constant(Rat(1)) - Poly::monomial(1)) * rf.derivative();
  // odd part (f - Rf) is divisible by x by construction
  out = out - (f - rf).divided_by_var().scaled(alpha / 2);
  out = out - rf.scaled((alpha + beta + 1) / 2);
  return out;
}

namespace {

void check_range(const Rat& alpha, const Rat& beta) {
  if (alpha <= -1 || beta <= -1)
    throw ParameterOutOfRange("alpha and beta must exceed -1");
}

}  // namespace

Poly little_jacobi(int n, const Rat& alpha, const Rat& beta) {
  check_range(alpha, beta);
  if (n < 0) throw ParameterOutOfRange("degree must be nonnegative");
  if (n == 0) return Poly::constant(Rat(1));
  // Action on the monomial basis is triangular with distinct diagonal
  // entries (the eigenvalues), so the monic eigenvector follows by
  // back-substitution.
  std::vector<Poly> col(n + 1);
  for (int j = 0; j <= n; ++j)
    col[j] = apply_q_tilde(alpha, beta, Poly::monomial(j));
  const Rat an = col[n].coeff(n);
  std::vector<Rat> v(n + 1, Rat(0));
  v[n] = Rat(1);
  for (int i = n - 1; i >= 0; --i) {
    Rat s(0);
    for (int j = i + 1; j <= n; ++j) s += col[j].coeff(i) * v[j];
    v[i] = s / (an - col[i].coeff(i));
  }
  return Poly(std::move(v));
}

Poly little_jacobi_via_moments(int n, const Rat& alpha, const Rat& beta) {
  check_range(alpha, beta);
  if (n == 0) return Poly::constant(Rat(1));
  // Orthogonalize x^n against all lower eigenpolynomials; every moment is
  // a rational multiple of the same Beta symbol, so the projections are
  // plain rationals.
  std::vector<Poly> basis(n);
  for (int j = 0; j < n; ++j) basis[j] = little_jacobi_via_moments(j, alpha, beta);
  Poly p = Poly::monomial(n);
  for (int j = n - 1; j >= 0; --j) {
    Amount num = angular_inner(p, basis[j], alpha, beta);
    Amount den = angular_inner(basis[j], basis[j], alpha, beta);
    auto c = Amount::ratio(num, den);
    if (!c) throw Error("moment orthogonalization lost its common symbol");
    p = p - basis[j].scaled(*c);
  }
  return p;
}

Poly little_jacobi_series_printed(int n, const Rat& alpha, const Rat& beta) {
  check_range(alpha, beta);
  const Poly x2 = Poly::monomial(2);
  const Poly x = Poly::monomial(1);
  Poly body;
  Rat chi;
  if (n % 2 == 0) {
    long h = n / 2;
    Poly f1 = hyp2f1_terminating(rat(-h), (Rat(n) + alpha + beta + 2) / 2,
                                 (alpha + 1) / 2, x2);
    body = f1;
    if (n > 0) {
      Poly f2 = hyp2f1_terminating(rat(1 - h), (Rat(n) + alpha + beta + 2) / 2,
                                   (alpha + 3) / 2, x2);
      body = body + (x * f2).scaled(Rat(n) / (alpha + 1));
    }
    chi = pow_rat(rat(-1), h) * pochhammer((alpha + 1) / 2, h) /
          pochhammer(Rat(h) + alpha / 2 + beta / 2 + 1, h);
  } else {
    long h = (n + 1) / 2;
    Poly f1 = hyp2f1_terminating((Rat(1) - Rat(n)) / 2,
                                 (Rat(n) + alpha + beta + 1) / 2,
                                 (alpha + 1) / 2, x2);
    Poly f2 = hyp2f1_terminating((Rat(1) - Rat(n)) / 2,
                                 (Rat(n) + alpha + beta + 3) / 2,
                                 (alpha + 3) / 2, x2);
    body = f1 - (x * f2).scaled((alpha + beta + 1) / (alpha + 1));
    chi = pow_rat(rat(-1), h) * pochhammer((alpha + 1) / 2, h) /
          pochhammer(Rat(h) + alpha / 2 + beta / 2 + 1, h);
  }
  return body.scaled(chi);
}

Amount weight_moment(int j, const Rat& alpha, const Rat& beta) {
  check_range(alpha, beta);
  if (j < 0) throw ParameterOutOfRange("moment index must be nonnegative");
  // Split (1+x); the surviving even-power integral is a single Beta value.
  // Both parities land an integer above the even base.
  Rat a = (j % 2 == 0) ? (alpha + Rat(j) + 1) / 2 : (alpha + Rat(j) + 2) / 2;
  return make_beta(a, (beta + 1) / 2, alpha, beta);
}

Amount angular_inner(const Poly& f, const Poly& g, const Rat& alpha,
                     const Rat& beta) {
  Amount acc;
  if (f.is_zero() || g.is_zero()) return acc;
  int df = *f.degree(), dg = *g.degree();
  std::vector<Amount> mu(df + dg + 1);
  for (int j = 0; j <= df + dg; ++j) mu[j] = weight_moment(j, alpha, beta);
  for (int i = 0; i <= df; ++i) {
    if (f.coeff(i) == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      if (g.coeff(j) == 0) continue;
      acc = acc + mu[i + j].scaled(f.coeff(i) * g.coeff(j));
    }
  }
  return acc;
}

Rat norm_ratio(int n, const Rat& alpha, const Rat& beta) {
  Poly pn = little_jacobi(n, alpha, beta);
  Poly p0 = Poly::constant(Rat(1));
  Amount hn = angular_inner(pn, pn, alpha, beta);
  Amount h0 = angular_inner(p0, p0, alpha, beta);
  auto r = Amount::ratio(hn, h0);
  if (!r) throw Error("norm ratio did not reduce to a rational");
  return *r;
}

Rat norm_ratio_closed_form(int n, const Rat& alpha, const Rat& beta) {
  Rat ab1 = alpha / 2 + beta / 2 + 1;
  Rat num;
  if (n % 2 == 0) {
    unsigned long h = n / 2;
    num = factorial(h) * pochhammer(ab1, h) *
          pochhammer((alpha + 1) / 2, h) * pochhammer((beta + 1) / 2, h);
  } else {
    unsigned long h = (n - 1) / 2;
    num = factorial(h) * pochhammer(ab1, h) *
          pochhammer((alpha + 1) / 2, h + 1) *
          pochhammer((beta + 1) / 2, h + 1);
  }
  Rat den = pochhammer(ab1, n);
  return num / (den * den);
}

Poly laguerre(int m, const Rat& gamma) {
  if (gamma <= -1) throw ParameterOutOfRange("gamma must exceed -1");
  return laguerre_series(m, gamma);
}

Poly laguerre_series(int m, const Rat& gamma) {
  if (m < 0) throw ParameterOutOfRange("index must be nonnegative");
  std::vector<Rat> c(m + 1);
  for (int j = 0; j <= m; ++j) {
    Rat b = binomial(Rat(m) + gamma, m - j);
    c[j] = (j % 2 == 0 ? b : -b) / factorial(j);
  }
  return Poly(std::move(c));
}

}  // namespace refosc
