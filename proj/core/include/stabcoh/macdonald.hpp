#pragma once

#include <vector>

#include "stabcoh/bigint.hpp"

namespace stabcoh {

struct BettiTable {
  int g = 0;
  int s = 0;
  std::vector<Int> betti;  // b_0 .. b_{2s}
};

/* Betti numbers of the s-th symmetric power of a genus-g curve, from the
 * presentation H = (wedge V)[y] / kernel with dim V = 2g (degree 1), y of
 * degree 2.  The kernel in each degree is spanned by the monomials
 *   xi_I * prod_{j in J} (x_j ^ x_{j+g} - y) * y^c
 * where I holds distinct generator indices containing no symplectic pair and
 * none of J's indices, and |I| + 2|J| + c > s.  Ranks are computed by exact
 * integer elimination.  Supported range: 1 <= g <= 4, 1 <= s <= 6. */
BettiTable sym_product_betti(int g, int s);

}  // namespace stabcoh
