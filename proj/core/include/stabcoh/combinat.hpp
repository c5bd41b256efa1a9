#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "stabcoh/bigint.hpp"

namespace stabcoh {

/* Partition of an integer: nonincreasing sequence of positive parts.
 * Doubles as a symmetric-group cycle type (parts = cycle lengths). */
class NumericalPartition {
 public:
  NumericalPartition() = default;  // the empty partition of 0
  explicit NumericalPartition(std::vector<int> parts);

  int size() const { return size_; }            // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const {                        // 0-based, 0 beyond the end
    return i < length() ? parts_[i] : 0;
  }
  /* multiplicity vector: result[k] = number of parts equal to k, k <= size */
  std::vector<int> multiplicities() const;
  NumericalPartition conjugate() const;
  std::string to_string() const;                 // "(3,1,1)"

  friend bool operator==(const NumericalPartition&, const NumericalPartition&) = default;
  friend auto operator<=>(const NumericalPartition&, const NumericalPartition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

using CycleType = NumericalPartition;

/* All partitions of s in descending lexicographic order: (s) first, (1^s) last. */
std::vector<NumericalPartition> numerical_partitions(int s);

Int factorial(int n);

/* Conjugacy class bookkeeping for the cycle type mu of Sy_s:
 * centralizer order z_mu = prod_k k^{m_k} m_k!, class size s!/z_mu,
 * sign = (-1)^{s - #cycles}. */
struct ClassData {
  Int centralizer;
  Int class_size;
  int sign;
};
ClassData class_data(const CycleType& mu);

class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // images[i] = sigma(i), 0-based
  static Permutation identity(int n);
  /* Canonical class representative: cycles laid out consecutively,
   * longest first, e.g. (3,2) -> (0 1 2)(3 4). */
  static Permutation with_cycle_type(const CycleType& mu);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  CycleType cycle_type() const;
  int sign() const;
  Permutation inverse() const;
  Permutation after(const Permutation& first) const;  // (*this) o first

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/* Partition of the ground set {1,..,s}.  Canonical form: blocks listed by
 * increasing least element, elements increasing inside each block.  The
 * restricted growth string rgs()[i] is the canonical index of the block
 * containing element i+1; it is the enumeration key and the identity test. */
class SetPartition {
 public:
  static SetPartition finest(int s);    // all singletons
  static SetPartition coarsest(int s);  // one block
  static SetPartition from_blocks(int s, const std::vector<std::vector<int>>& blocks);
  static SetPartition from_rgs(std::vector<int> rgs);

  int ground_size() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return block_count_; }
  int codim() const { return ground_size() - block_count_; }
  const std::vector<int>& rgs() const { return rgs_; }
  int block_index_of(int element) const { return rgs_[element - 1]; }  // 1-based element

  /* Blocks in canonical order (computed on demand; the partition itself
   * only stores the growth string). */
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;
  /* result[k] = number of blocks of size k, for k = 0..s (entry 0 unused). */
  std::vector<int> block_size_counts() const;

  /* Finest partition coarser than both (the lattice join). */
  SetPartition join(const SetPartition& other) const;

  /* Image under relabelling of the ground set; block_map (optional out
   * parameter) sends each old canonical block index to its new index. */
  SetPartition relabeled(const Permutation& sigma, std::vector<int>* block_map = nullptr) const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  SetPartition(std::vector<int> rgs, int block_count);
  std::vector<int> rgs_;
  int block_count_ = 0;
};

/* Enumeration ceiling.  Bell(12) = 4,213,597 is the practical desk-scale
 * limit for full scans of the partition lattice. */
inline constexpr int kGroundSizeCap = 12;

/* All set partitions of {1..s} in restricted-growth-string order. */
std::vector<SetPartition> enumerate_set_partitions(int s, int cap = kGroundSizeCap);

/* Visitor variant of the above; avoids materializing the full list. */
void for_each_set_partition(int s, const std::function<void(const SetPartition&)>& fn,
                            int cap = kGroundSizeCap);

Int bell_number(int s);

}  // namespace stabcoh
