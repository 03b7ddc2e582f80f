#pragma once

#include "refosc/poly.hpp"
#include "refosc/rational.hpp"

namespace refosc {

// Terminating Gauss series sum_j (a)_j (b)_j / (j! (c)_j) z^j with a
// polynomial argument. a or b must be a nonpositive integer.
Poly hyp2f1_terminating(const Rat& a, const Rat& b, const Rat& c,
                        const Poly& z);

}  // namespace refosc
