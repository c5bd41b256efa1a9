#pragma once

#include <map>
#include <string>
#include <vector>

#include "stabcoh/characters.hpp"
#include "stabcoh/diag_algebra.hpp"

namespace stabcoh {

/* Brute-force materialization of the graded pieces as explicit monomial bases
 * with the (optionally sign-twisted) permutation action, used to cross-check
 * every character/Molien computation on small instances. */

inline constexpr int kOracleGroundCap = 7;
inline constexpr std::size_t kOracleBasisCap = 200000;

struct ExplicitGradedPiece {
  int s = 0;
  Variant variant = Variant::ADoublePrime;
  bool sign_twist = false;  // set for the B-module realization
  int degree = 0;           // cohomological degree for B, internal degree otherwise
  std::vector<PartitionMonomial> basis;
  std::map<PartitionMonomial, int> index;
};

/* B-module piece of cohomological degree n: A''-monomials of internal degree
 * n + s, carrying the sign twist. */
ExplicitGradedPiece build_b_piece(int s, int n);
/* Algebra-variant piece of internal degree n, untwisted. */
ExplicitGradedPiece build_algebra_piece(int s, Variant v, int n);

/* The action of sigma on the basis: basis[i] maps to sign * basis[images[i]]. */
struct SignedPermutation {
  std::vector<int> images;
  int sign = 1;
};
SignedPermutation piece_action(const ExplicitGradedPiece& piece, const Permutation& sigma);

Int explicit_trace(const ExplicitGradedPiece& piece, const Permutation& sigma);

/* Multiplicity of (lambda): rank of sum_sigma chi^lambda(sigma) rho(sigma),
 * computed by exact elimination, divided by f^lambda (asserted divisible). */
int isotypic_dims_explicit(const ExplicitGradedPiece& piece, const NumericalPartition& lambda,
                           const CharacterTable& table);

struct CrossValidateReport {
  int s = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool pass = false;
  int pieces_checked = 0;
  std::string first_failure;  // empty when pass
};

/* For every degree in [min_degree, max_degree]: explicit isotypic dimensions
 * against the character pipeline's series, and explicit traces against the
 * sign-twisted Molien traces. */
CrossValidateReport cross_validate(int s, int min_degree, int max_degree);

}  // namespace stabcoh
