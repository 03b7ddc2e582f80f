#pragma once

// Exact rational scalars. GMP's mpq_class does the heavy lifting; the
// helpers here add parsing, canonical formatting and the shifted
// factorials used throughout.

#include <gmpxx.h>

#include <string>

namespace refosc {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "7", "-3/4", "15/6" (reduced on input).
Rat parse_rat(const std::string& s);

// Canonical form: "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rat& r);

double to_double(const Rat& r);

bool is_integer(const Rat& r);

// Requires is_integer(r) and a value that fits in long.
long to_long(const Rat& r);

Rat pow_rat(const Rat& base, long e);

Rat factorial(unsigned long n);

// Shifted factorial (a)_n = a(a+1)...(a+n-1); empty product is 1.
Rat pochhammer(const Rat& a, unsigned long n);

// Generalized binomial C(t, k) = (t-k+1)_k / k! for rational t.
Rat binomial(const Rat& t, unsigned long k);

// Gamma(x)/Gamma(y) for x-y a nonnegative integer: equals (y)_(x-y).
Rat gamma_ratio(const Rat& x, const Rat& y);

}  // namespace refosc
