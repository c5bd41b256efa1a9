#include "stabcoh/macdonald.hpp"

#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stabcoh/exact_linalg.hpp"

namespace stabcoh {

namespace {

/* generators are x_0..x_{2g-1}, pair j = (x_j, x_{j+g}); x of degree 1, y of degree 2 */

struct DegreeBasis {
  std::vector<std::pair<unsigned, int>> monomials;  // (exterior mask, y exponent)
  std::map<std::pair<unsigned, int>, int> index;

  int dim() const { return static_cast<int>(monomials.size()); }
};

DegreeBasis degree_basis(int two_g, int n) {
  DegreeBasis basis;
  for (int c = 0; 2 * c <= n; ++c) {
    const int k = n - 2 * c;
    if (k > two_g) continue;
    for (unsigned mask = 0; mask < (1u << two_g); ++mask) {
      if (std::popcount(mask) != k) continue;
      basis.index.emplace(std::make_pair(mask, c), basis.dim());
      basis.monomials.emplace_back(mask, c);
    }
  }
  return basis;
}

int sorting_sign(const std::vector<int>& indices) {
  int inversions = 0;
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i + 1; j < indices.size(); ++j)
      if (indices[i] > indices[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

/* xi_I * prod_{j in J} (x_j ^ x_{j+g} - y) * y^c expanded into the degree basis */
std::vector<Int> relation_row(const std::vector<int>& I, const std::vector<int>& J, int c, int g,
                              const DegreeBasis& basis) {
  std::vector<Int> row(static_cast<std::size_t>(basis.dim()), Int(0));
  const int b = static_cast<int>(J.size());
  for (unsigned pick = 0; pick < (1u << b); ++pick) {
    std::vector<int> indices = I;
    for (int t = 0; t < b; ++t) {
      if (!(pick & (1u << t))) continue;
      indices.push_back(J[static_cast<std::size_t>(t)]);
      indices.push_back(J[static_cast<std::size_t>(t)] + g);
    }
    const int dropped = b - std::popcount(pick);
    unsigned mask = 0;
    for (int idx : indices) mask |= 1u << idx;
    const int scalar = sorting_sign(indices) * (dropped % 2 == 0 ? 1 : -1);
    const auto it = basis.index.find(std::make_pair(mask, c + dropped));
    if (it == basis.index.end()) throw std::logic_error("relation_row: monomial outside basis");
    row[static_cast<std::size_t>(it->second)] += scalar;
  }
  return row;
}

/* all I over pairs not in J: each free pair contributes nothing, x_j or x_{j+g} */
void for_each_I(int g, unsigned J_mask, std::vector<int>& I, int pair_idx,
                const std::function<void(const std::vector<int>&)>& fn) {
  if (pair_idx == g) {
    fn(I);
    return;
  }
  if (J_mask & (1u << pair_idx)) {
    for_each_I(g, J_mask, I, pair_idx + 1, fn);
    return;
  }
  for (int choice = 0; choice < 3; ++choice) {
    if (choice > 0) I.push_back(choice == 1 ? pair_idx : pair_idx + g);
    for_each_I(g, J_mask, I, pair_idx + 1, fn);
    if (choice > 0) I.pop_back();
  }
}

int kernel_rank(int g, int s, int n, const DegreeBasis& basis) {
  IntegerRowEchelon ech(basis.dim());
  for (unsigned J_mask = 0; J_mask < (1u << g); ++J_mask) {
    std::vector<int> J;
    for (int j = 0; j < g; ++j)
      if (J_mask & (1u << j)) J.push_back(j);
    const int b = static_cast<int>(J.size());
    std::vector<int> I;
    for_each_I(g, J_mask, I, 0, [&](const std::vector<int>& picked) {
      const int a = static_cast<int>(picked.size());
      const int rem = n - a - 2 * b;
      if (rem < 0 || rem % 2 != 0) return;
      const int c = rem / 2;
      if (a + 2 * b + c <= s) return;  // only the weight > s part lies in the kernel
      ech.add_row(relation_row(picked, J, c, g, basis));
    });
  }
  return ech.rank();
}

}  // namespace

BettiTable sym_product_betti(int g, int s) {
  if (g < 1 || g > 4 || s < 1 || s > 6)
    throw std::invalid_argument("sym_product_betti: supported range is 1<=g<=4, 1<=s<=6");
  BettiTable table;
  table.g = g;
  table.s = s;
  for (int n = 0; n <= 2 * s; ++n) {
    const DegreeBasis basis = degree_basis(2 * g, n);
    table.betti.push_back(Int(basis.dim()) - kernel_rank(g, s, n, basis));
  }
  return table;
}

}  // namespace stabcoh
