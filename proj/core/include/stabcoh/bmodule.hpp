#pragma once

#include <utility>
#include <vector>

#include "stabcoh/characters.hpp"
#include "stabcoh/diag_algebra.hpp"
#include "stabcoh/series.hpp"

namespace stabcoh {

/* The sign-twisted diagonal module on s points, graded so that cohomological
 * degree n corresponds to internal degree n + s.  Its class-function-valued
 * Hilbert series decomposes into the isotypic series below. */

/* Character of the degree-n piece: value at mu = sign(mu) * [q^{n+s}] of the
 * A''-graded trace.  Zero unless n == s (mod 2). */
ClassFunction b_graded_character(int s, int n);

/* Multiplicity series of the irreducible (lambda): coefficient at n is the
 * multiplicity of (lambda) in the degree-n piece.  Window [-s, max_deg]. */
LaurentWindow b_lambda_series(const NumericalPartition& lambda, int max_deg);

/* All lambda of size s at once, sharing the per-class trace computations. */
std::vector<std::pair<NumericalPartition, LaurentWindow>> b_series_table(int s, int max_deg);

/* Hodge bigrading bookkeeping: the degree-n piece is pure of type (d, d),
 * d = (n + |lambda|)/2.  Throws on parity mismatch (the piece is zero). */
std::pair<int, int> hodge_type(const NumericalPartition& lambda, int n);

/* Independent closed forms for the extreme cases:
 *   (s):   q^{s^2+2s} prod_{i<=s} (1-q^{2i})^{-1}
 *   (1^s): sum over types (1^{l_1} 2^{l_2} ...) of
 *          q^{2 sum_k l_k max(2,k-1) - s} prod_k prod_{j<=l_k} (1-q^{2j})^{-1} */
LaurentWindow extreme_closed_form(const NumericalPartition& lambda, int max_deg);

}  // namespace stabcoh
