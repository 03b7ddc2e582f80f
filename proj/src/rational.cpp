#include "refosc/rational.hpp"

#include <stdexcept>

#include "refosc/errors.hpp"

namespace refosc {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParameterOutOfRange("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw ParameterOutOfRange("bad rational literal: '" + s + "'");
  if (r.get_den() == 0)
    throw ParameterOutOfRange("zero denominator in literal: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rat& r) { return r.get_d(); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

long to_long(const Rat& r) {
  if (!is_integer(r)) throw Error("to_long on non-integer " + to_string(r));
  if (!r.get_num().fits_slong_p()) throw Error("to_long overflow");
  return r.get_num().get_si();
}

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return rat(1);
  Rat b = e > 0 ? base : Rat(1 / base);
  unsigned long n = e > 0 ? e : -e;
  Rat acc = rat(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

Rat factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Rat pochhammer(const Rat& a, unsigned long n) {
  Rat acc = rat(1);
  Rat term = a;
  for (unsigned long i = 0; i < n; ++i) {
    acc *= term;
    term += 1;
  }
  return acc;
}

Rat binomial(const Rat& t, unsigned long k) {
  return pochhammer(t - Rat(static_cast<long>(k)) + 1, k) / factorial(k);
}

Rat gamma_ratio(const Rat& x, const Rat& y) {
  Rat d = x - y;
  if (!is_integer(d) || d < 0)
    throw Error("gamma_ratio needs x-y a nonnegative integer, got " +
                to_string(d));
  return pochhammer(y, static_cast<unsigned long>(to_long(d)));
}

}  // namespace refosc
