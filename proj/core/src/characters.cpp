#include "stabcoh/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabcoh {

namespace {

using Shape = std::vector<int>;  // nonincreasing, no zero parts

/* Memo key: shape after some strips were removed + how many cycle lengths
 * were consumed.  Valid for one fixed cycle list. */
using Memo = std::map<std::pair<Shape, std::size_t>, Int>;

/* Border strips of length r correspond to beta numbers b with b - r >= 0
 * not itself a beta number; the strip height is the count of beta numbers
 * strictly between b - r and b. */
Int mn_recurse(const Shape& shape, const std::vector<int>& cycles, std::size_t k, Memo& memo) {
  if (shape.empty()) return 1;  // all cycles consumed exactly when cells run out
  auto key = std::make_pair(shape, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = cycles[k];
  const int m = static_cast<int>(shape.size());
  std::vector<int> beta(m);
  for (int i = 0; i < m; ++i) beta[i] = shape[i] + (m - 1 - i);  // strictly decreasing

  Int total = 0;
  for (int i = 0; i < m; ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int x : beta)
      if (target < x && x < b) ++height;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    Shape next;
    for (int j = 0; j < m; ++j) {
      int part = nb[j] - (m - 1 - j);
      if (part > 0) next.push_back(part);
    }
    Int sub = mn_recurse(next, cycles, k + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

Int mn_character(const NumericalPartition& lambda, const CycleType& mu, Memo& memo) {
  return mn_recurse(lambda.parts(), mu.parts(), 0, memo);
}

}  // namespace

Int irreducible_character(const NumericalPartition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("irreducible_character: |lambda| != |mu|");
  Memo memo;
  return mn_character(lambda, mu, memo);
}

Int sym_dimension(const NumericalPartition& lambda) {
  /* hook lengths: h(i,j) = lambda_i - j + conj_j - i - 1 (0-based) */
  const auto& parts = lambda.parts();
  const auto conj = lambda.conjugate().parts();
  Int hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j)
      hooks *= parts[i] - j + conj[j] - static_cast<int>(i) - 1;
  Int num = factorial(lambda.size());
  if (num % hooks != 0)
    throw std::logic_error("sym_dimension: hook product does not divide s!");
  return num / hooks;
}

CharacterTable::CharacterTable(int s) : s_(s), labels_(numerical_partitions(s)) {
  if (s < 1) throw std::invalid_argument("CharacterTable: s must be positive");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    index_[labels_[i]] = static_cast<int>(i);
  table_.assign(labels_.size(), std::vector<Int>(labels_.size()));
  for (std::size_t c = 0; c < labels_.size(); ++c) {
    Memo memo;  // shared across rows: recursion subtrees coincide per class
    for (std::size_t l = 0; l < labels_.size(); ++l)
      table_[l][c] = mn_character(labels_[l], labels_[c], memo);
  }
}

const Int& CharacterTable::value(const NumericalPartition& lambda, const CycleType& mu) const {
  return table_[index_of(lambda)][index_of(mu)];
}

int CharacterTable::index_of(const NumericalPartition& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::invalid_argument("CharacterTable: " + p.to_string() + " is not a partition of " +
                                std::to_string(s_));
  return it->second;
}

void ClassFunction::set(const CycleType& mu, Rat value) {
  if (mu.size() != s_)
    throw std::invalid_argument("ClassFunction: cycle type has wrong size");
  values_[mu] = std::move(value);
}

const Rat& ClassFunction::at(const CycleType& mu) const {
  auto it = values_.find(mu);
  if (it == values_.end())
    throw std::invalid_argument("ClassFunction: no value stored for " + mu.to_string());
  return it->second;
}

Rat multiplicity(const ClassFunction& f, const NumericalPartition& lambda) {
  if (f.s() != lambda.size())
    throw std::invalid_argument("multiplicity: class function and lambda sizes differ");
  Rat acc = 0;
  for (const auto& mu : numerical_partitions(lambda.size())) {
    const ClassData cd = class_data(mu);
    acc += Rat(cd.class_size) * Rat(irreducible_character(lambda, mu)) * f.at(mu);
  }
  return acc / Rat(factorial(lambda.size()));
}

}  // namespace stabcoh
