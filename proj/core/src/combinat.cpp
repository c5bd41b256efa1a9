#include "stabcoh/combinat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace stabcoh {

NumericalPartition::NumericalPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be nonincreasing");
    size_ += parts_[i];
  }
}

std::vector<int> NumericalPartition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(size_) + 1, 0);
  for (int p : parts_) m[p] += 1;
  return m;
}

NumericalPartition NumericalPartition::conjugate() const {
  std::vector<int> c;
  for (int row = 0; row < (parts_.empty() ? 0 : parts_[0]); ++row) {
    int count = 0;
    for (int p : parts_)
      if (p > row) ++count;
    c.push_back(count);
  }
  return NumericalPartition(std::move(c));
}

std::string NumericalPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

std::vector<NumericalPartition> numerical_partitions(int s) {
  if (s < 0) throw std::invalid_argument("numerical_partitions: negative size");
  std::vector<NumericalPartition> out;
  std::vector<int> current;
  /* Descending-lex generation: always place the largest admissible part next. */
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(s, s);
  return out;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

ClassData class_data(const CycleType& mu) {
  Int z = 1;
  std::map<int, int> mult;
  for (int p : mu.parts()) mult[p] += 1;
  for (auto [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= k;
    z *= factorial(m);
  }
  ClassData d;
  d.centralizer = z;
  d.class_size = factorial(mu.size()) / z;
  d.sign = ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1;
  return d;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::with_cycle_type(const CycleType& mu) {
  std::vector<int> im(mu.size());
  int start = 0;
  for (int len : mu.parts()) {
    for (int i = 0; i < len; ++i) im[start + i] = start + (i + 1) % len;
    start += len;
  }
  return Permutation(std::move(im));
}

CycleType Permutation::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> lengths;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = images_[j];
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return CycleType(std::move(lengths));
}

int Permutation::sign() const { return class_data(cycle_type()).sign; }

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::after(const Permutation& first) const {
  if (degree() != first.degree())
    throw std::invalid_argument("Permutation composition: degree mismatch");
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[i] = images_[first.images_[i]];
  return Permutation(std::move(im));
}

SetPartition::SetPartition(std::vector<int> rgs, int block_count)
    : rgs_(std::move(rgs)), block_count_(block_count) {}

SetPartition SetPartition::finest(int s) {
  std::vector<int> rgs(s);
  std::iota(rgs.begin(), rgs.end(), 0);
  return SetPartition(std::move(rgs), s);
}

SetPartition SetPartition::coarsest(int s) {
  if (s < 1) throw std::invalid_argument("SetPartition: ground size must be positive");
  return SetPartition(std::vector<int>(s, 0), 1);
}

SetPartition SetPartition::from_rgs(std::vector<int> rgs) {
  int next = 0;
  for (int v : rgs) {
    if (v < 0 || v > next)
      throw std::invalid_argument("SetPartition: not a restricted growth string");
    if (v == next) ++next;
  }
  if (rgs.empty()) throw std::invalid_argument("SetPartition: empty ground set");
  return SetPartition(std::move(rgs), next);
}

SetPartition SetPartition::from_blocks(int s, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> owner(s, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int e : blocks[b]) {
      if (e < 1 || e > s) throw std::invalid_argument("SetPartition: element out of range");
      if (owner[e - 1] != -1) throw std::invalid_argument("SetPartition: repeated element");
      owner[e - 1] = static_cast<int>(b);
    }
  }
  for (int o : owner)
    if (o == -1) throw std::invalid_argument("SetPartition: blocks do not cover the ground set");
  /* renumber blocks by first appearance to get the growth string */
  std::vector<int> relabel(blocks.size(), -1);
  std::vector<int> rgs(s);
  int next = 0;
  for (int i = 0; i < s; ++i) {
    int b = owner[i];
    if (relabel[b] == -1) relabel[b] = next++;
    rgs[i] = relabel[b];
  }
  return SetPartition(std::move(rgs), next);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(block_count_);
  for (int i = 0; i < ground_size(); ++i) out[rgs_[i]].push_back(i + 1);
  return out;
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> sz(block_count_, 0);
  for (int b : rgs_) sz[b] += 1;
  return sz;
}

std::vector<int> SetPartition::block_size_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(ground_size()) + 1, 0);
  for (int s : block_sizes()) counts[s] += 1;
  return counts;
}

SetPartition SetPartition::join(const SetPartition& other) const {
  if (ground_size() != other.ground_size())
    throw std::invalid_argument("SetPartition::join: ground size mismatch");
  const int s = ground_size();
  /* union-find over elements, seeded with this partition, merged along other */
  std::vector<int> parent(s);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  std::vector<int> first_of_block(block_count_, -1);
  for (int i = 0; i < s; ++i) {
    int b = rgs_[i];
    if (first_of_block[b] == -1)
      first_of_block[b] = i;
    else
      unite(i, first_of_block[b]);
  }
  std::vector<int> first_other(other.block_count_, -1);
  for (int i = 0; i < s; ++i) {
    int b = other.rgs_[i];
    if (first_other[b] == -1)
      first_other[b] = i;
    else
      unite(i, first_other[b]);
  }
  std::vector<int> label(s, -1);
  std::vector<int> rgs(s);
  int next = 0;
  for (int i = 0; i < s; ++i) {
    int r = find(i);
    if (label[r] == -1) label[r] = next++;
    rgs[i] = label[r];
  }
  return SetPartition(std::move(rgs), next);
}

SetPartition SetPartition::relabeled(const Permutation& sigma, std::vector<int>* block_map) const {
  if (sigma.degree() != ground_size())
    throw std::invalid_argument("SetPartition::relabeled: degree mismatch");
  const int s = ground_size();
  const Permutation inv = sigma.inverse();
  /* new element k sits in the image of the block of sigma^{-1}(k) */
  std::vector<int> old_block_at(s);
  for (int k = 0; k < s; ++k) old_block_at[k] = rgs_[inv(k)];
  std::vector<int> relabel(block_count_, -1);
  std::vector<int> rgs(s);
  int next = 0;
  for (int k = 0; k < s; ++k) {
    int b = old_block_at[k];
    if (relabel[b] == -1) relabel[b] = next++;
    rgs[k] = relabel[b];
  }
  if (block_map) *block_map = relabel;
  return SetPartition(std::move(rgs), next);
}

static void check_ground_size(int s, int cap) {
  if (cap < 1 || cap > kGroundSizeCap)
    throw std::invalid_argument("set partition cap must be in [1, " +
                                std::to_string(kGroundSizeCap) + "]");
  if (s < 1 || s > cap)
    throw std::invalid_argument("ground size " + std::to_string(s) +
                                " outside supported range [1, " + std::to_string(cap) + "]");
}

void for_each_set_partition(int s, const std::function<void(const SetPartition&)>& fn, int cap) {
  check_ground_size(s, cap);
  /* iterative restricted-growth-string enumeration: rgs[0] = 0 and
   * rgs[i] <= 1 + max(rgs[0..i-1]); the running maxima make increments O(1) */
  std::vector<int> rgs(s, 0), maxes(s, 0);
  for (;;) {
    fn(SetPartition::from_rgs(rgs));
    int i = s - 1;
    while (i > 0 && rgs[i] == maxes[i - 1] + 1) --i;
    if (i == 0) return;
    rgs[i] += 1;
    maxes[i] = std::max(maxes[i - 1], rgs[i]);
    for (int j = i + 1; j < s; ++j) {
      rgs[j] = 0;
      maxes[j] = maxes[i];
    }
  }
}

std::vector<SetPartition> enumerate_set_partitions(int s, int cap) {
  std::vector<SetPartition> out;
  for_each_set_partition(s, [&](const SetPartition& p) { out.push_back(p); }, cap);
  return out;
}

Int bell_number(int s) {
  if (s < 0) throw std::invalid_argument("bell_number: negative argument");
  /* Bell triangle */
  std::vector<Int> row = {1};
  for (int n = 1; n <= s; ++n) {
    std::vector<Int> next;
    next.reserve(n + 1);
    next.push_back(row.back());
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n + 1); ++i)
      next.push_back(next[i] + row[i]);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace stabcoh
