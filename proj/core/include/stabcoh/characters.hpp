#pragma once

#include <map>
#include <vector>

#include "stabcoh/bigint.hpp"
#include "stabcoh/combinat.hpp"

namespace stabcoh {

/* chi^lambda(mu) by the Murnaghan-Nakayama border-strip recursion.
 * Labelling convention: (s) is the trivial character, (1^s) the signum. */
Int irreducible_character(const NumericalPartition& lambda, const CycleType& mu);

/* Dimension f^lambda = chi^lambda(identity) by the hook length formula. */
Int sym_dimension(const NumericalPartition& lambda);

/* Full table for Sy_s.  Rows and columns both run over numerical_partitions(s)
 * in descending lexicographic order. */
class CharacterTable {
 public:
  explicit CharacterTable(int s);

  int s() const { return s_; }
  const std::vector<NumericalPartition>& labels() const { return labels_; }
  const Int& value(int lambda_index, int class_index) const {
    return table_[lambda_index][class_index];
  }
  const Int& value(const NumericalPartition& lambda, const CycleType& mu) const;
  int index_of(const NumericalPartition& p) const;

 private:
  int s_;
  std::vector<NumericalPartition> labels_;
  std::vector<std::vector<Int>> table_;
  std::map<NumericalPartition, int> index_;
};

/* Rational-valued class function on Sy_s, stored per cycle type. */
class ClassFunction {
 public:
  explicit ClassFunction(int s) : s_(s) {}

  int s() const { return s_; }
  void set(const CycleType& mu, Rat value);
  const Rat& at(const CycleType& mu) const;

 private:
  int s_;
  std::map<CycleType, Rat> values_;
};

/* Multiplicity <f, chi^lambda> = (1/s!) sum_mu |class(mu)| chi^lambda(mu) f(mu).
 * Exact rational; integrality is the caller's concern. */
Rat multiplicity(const ClassFunction& f, const NumericalPartition& lambda);

}  // namespace stabcoh
