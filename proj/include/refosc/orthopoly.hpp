#pragma once

// The two polynomial families of the model: the angular eigenpolynomials
// (monic, built from the first-order differential-difference eigenproblem)
// and generalized Laguerre polynomials, together with weight moments,
// inner products and normalization ratios.

#include <vector>

#include "refosc/poly.hpp"
#include "refosc/rational.hpp"
#include "refosc/symbolic.hpp"

namespace refosc {

// (1-x) d/dx R - (alpha/2x)(1-R) - ((alpha+beta+1)/2) R on polynomials.
// Maps degree n to degree <= n; the (1-R) part is always divisible by x.
Poly apply_q_tilde(const Rat& alpha, const Rat& beta, const Poly& f);

// Monic degree-n eigenpolynomial of the angular operator. Primary
// construction: back-substitution on the triangular action of the
// operator over the monomial basis.
Poly little_jacobi(int n, const Rat& alpha, const Rat& beta);

// Same polynomial from moment-based orthogonalization (independent
// construction route; must agree with the eigenproblem route).
Poly little_jacobi_via_moments(int n, const Rat& alpha, const Rat& beta);

// The printed terminating-series form with its printed leading constant.
// Kept verbatim as a cross-check target; the even branch agrees with the
// eigen construction, the odd branch does not (see the compat report).
Poly little_jacobi_series_printed(int n, const Rat& alpha, const Rat& beta);

// mu_j = Integral x^j |x|^alpha (1-x^2)^((beta-1)/2) (1+x) dx over [-1,1],
// reduced to the canonical Beta base.
Amount weight_moment(int j, const Rat& alpha, const Rat& beta);

// <f, g> against the unnormalized angular weight.
Amount angular_inner(const Poly& f, const Poly& g, const Rat& alpha,
                     const Rat& beta);

// h_n/h_0 as an exact rational (the Beta symbol cancels in the ratio).
Rat norm_ratio(int n, const Rat& alpha, const Rat& beta);

// (N_0/N_n)^2 from the printed closed form for the normalization
// constants; equals norm_ratio when the closed form is correct.
Rat norm_ratio_closed_form(int n, const Rat& alpha, const Rat& beta);

// Generalized Laguerre polynomial L_m^gamma by its terminating series.
Poly laguerre(int m, const Rat& gamma);

// The same series for an arbitrary rational parameter; formal targets of
// ladder chains can carry gamma <= -1.
Poly laguerre_series(int m, const Rat& gamma);

}  // namespace refosc
