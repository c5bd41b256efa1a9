#pragma once

#include <vector>

#include "stabcoh/combinat.hpp"

namespace stabcoh {

/* Dimension of the irreducible representation of Sp(2g) with highest weight
 * lambda (at most g parts; zero otherwise), by the Weyl dimension formula
 * evaluated in exact arithmetic. */
Int sp_irrep_dimension(int g, const NumericalPartition& lambda);

/* Dimension of the cokernel of the form-insertion maps on the s-th tensor
 * power, counted by inclusion-exclusion over partial matchings of the slots:
 * sum_j (-1)^j C(s,2j) (2j-1)!! (2g)^{s-2j}.  For s <= 3 this is the naive
 * (2g)^s - C(s,2) (2g)^{s-2}; from s = 4 on the insertion maps acquire
 * relations and the higher terms correct for them.  Requires 2g >= s (stable
 * range); throws std::domain_error below. */
Int weyl_space_dimension(int g, int s);

struct SchurWeylRow {
  NumericalPartition lambda;
  Int f_lambda;  // symmetric-group irreducible dimension
  Int sp_dim;    // symplectic irreducible dimension (0 when too many parts)
};

struct SchurWeylReport {
  int g = 0;
  int s = 0;
  Int decomposition_total;  // sum of f_lambda * sp_dim
  Int expected;             // weyl_space_dimension(g, s)
  bool pass = false;
  std::vector<SchurWeylRow> rows;
};

/* Multiplicity-one check: sum over lambda |- s of f^lambda * dim S_<lambda>
 * must equal the Weyl space dimension. */
SchurWeylReport schur_weyl_check(int g, int s);

/* The s-th exterior power decomposes as one copy of S_<1^{s-2k}> for each
 * k >= 0 with s - 2k >= 0; returned largest piece first, ending with the
 * empty partition (trivial summand) when s is even. */
std::vector<NumericalPartition> exterior_power_decomposition(int s);

}  // namespace stabcoh
