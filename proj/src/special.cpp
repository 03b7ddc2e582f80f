#include "refosc/special.hpp"

#include <algorithm>

#include "refosc/errors.hpp"

namespace refosc {

Poly hyp2f1_terminating(const Rat& a, const Rat& b, const Rat& c,
                        const Poly& z) {
  long stop = -1;
  if (is_integer(a) && a <= 0) stop = to_long(-a);
  if (is_integer(b) && b <= 0) {
    long s = to_long(-b);
    stop = stop < 0 ? s : std::min(stop, s);
  }
  if (stop < 0)
    throw NonTerminating("neither " + to_string(a) + " nor " + to_string(b) +
                         " is a nonpositive integer");

  Poly result = Poly::constant(Rat(1));
  Poly zpow = Poly::constant(Rat(1));
  Rat coeff(1);
  for (long j = 0; j < stop; ++j) {
    Rat cj = c + Rat(j);
    if (cj == 0)
      throw PoleInC("(c)_j vanishes at j=" + std::to_string(j + 1) +
                    " before the series terminates");
    coeff *= (a + Rat(j)) * (b + Rat(j)) / (Rat(j + 1) * cj);
    zpow = zpow * z;
    result = result + zpow.scaled(coeff);
  }
  return result;
}

}  // namespace refosc
