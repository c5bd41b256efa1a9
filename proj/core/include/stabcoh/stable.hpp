#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabcoh/bmodule.hpp"
#include "stabcoh/diag_algebra.hpp"
#include "stabcoh/series.hpp"

namespace stabcoh {

/* Stability-range policies N(g). */
enum class NPolicy { Ivanov, Harer85, Harer93Upper };
int n_bound(NPolicy policy, int g);
const char* n_policy_name(NPolicy policy);
std::optional<NPolicy> parse_n_policy(std::string_view name);

/* Degree bounds below which the respective stable identifications hold. */
int stable_cutoff_twisted(NPolicy policy, int g, const NumericalPartition& lambda);  // N(g)-|lambda|
int stable_cutoff_decorated(NPolicy policy, int g);                                  // N(g)
int stable_cutoff_abel_jacobi(NPolicy policy, int g, int s);                         // min(s, N(g))

/* Hilbert series model for the stable cohomology of the base.  The default
 * (one free polynomial generator in every even positive degree) is an
 * external assumption, not a computed fact, and is labeled as such in every
 * output.  A user-supplied polynomial must have coefficient 1 in degree 0
 * and 0 in degree 1. */
struct StableModel {
  LaurentWindow base;
  bool user_supplied = false;

  static StableModel free_polynomial(int max_deg);
  static StableModel unit();  // base = 1: downstream series reduce to the bare ones
  static StableModel from_series(LaurentWindow series);
  const char* label() const {
    return user_supplied ? "user-supplied" : "free-polynomial (external assumption)";
  }
};

/* base * b_lambda_series(lambda) */
LaurentWindow twisted_series(const NumericalPartition& lambda, const StableModel& model,
                             int max_deg);

/* base * (1-q^2)^{-s} (labeled points), or base * prod_{i<=s} (1-q^{2i})^{-1}
 * (unlabeled). */
LaurentWindow decorated_series(int s, bool labeled, const StableModel& model, int max_deg);

/* base * variant_hilbert_series(variant, s); variant must be A or A'. */
LaurentWindow curve_power_series(int s, Variant variant, const StableModel& model, int max_deg);

/* The limit invariant algebras: a polynomial factor on c_1, c_2, ... (c_1
 * dropped for C'), times one factor per block size k >= 2 contributing
 * 1 + sum_{l>=1} q^{2l(k-1)} prod_{j<=l} (1-q^{2j})^{-1}. */
enum class CVariant { C, CPrime };
const char* c_variant_name(CVariant v);
std::optional<CVariant> parse_c_variant(std::string_view name);

LaurentWindow c_series(CVariant variant, int max_deg);

/* Bigraded refinement: the point-weight of a first-factor monomial is
 * sum l * (exponent of c_l); every monomial of the block-size-k factor's
 * l-summand c_l^{k-1} Q[c_1..c_l] has weight k*l (the number of points the
 * corresponding invariant uses).  Weight never exceeds degree. */
BigradedSeries c_series_bigraded(CVariant variant, int max_deg, int weight_cap);

/* Degrees <= s of the C-series agree with the invariant series of A on s
 * points: every monomial of degree <= s uses at most s points, so the
 * comparison needs no weight filter in that range. */
struct CsAgreementReport {
  int s = 0;
  int verified_max_degree = 0;
  bool pass = false;
  std::optional<int> first_mismatch;
};
CsAgreementReport c_s_agreement(int s, int max_deg);

/* The two candidate readings of the degree bookkeeping in the Abel-Jacobi
 * comparison (t of formal degree 1 against the point-weight of C'):
 *
 *   Aggregate (default): sum over s of q^s * (series of the s-th exterior
 *   power coefficients) equals base * C'(q) as single-graded series; the
 *   exterior power decomposes as one S_<1^j> per j = s, s-2, ..., so the
 *   right side is base * sum_j q^j B_(1^j)(q) / (1-q^2), truncated at
 *   j <= s_max (valid below the first degree the j = s_max+1 term reaches).
 *
 *   WeightMatched: the weight-s slice of C' is compared per s against
 *   q^s * sum_k B_(1^{s-2k}).  This pairing fails already at s = 1 (the
 *   weight-1 slice of C' is identically zero, the right side is not); the
 *   check reports the mismatch as a diagnosis rather than passing. */
enum class AjConvention { Aggregate, WeightMatched };
const char* aj_convention_name(AjConvention c);
std::optional<AjConvention> parse_aj_convention(std::string_view name);

struct AjPerS {
  int s = 0;
  bool pass = false;
  std::optional<int> first_mismatch;
};

struct AjReport {
  AjConvention convention = AjConvention::Aggregate;
  int s_max = 0;
  int max_deg = 0;
  int verified_max_degree = 0;  // aggregate: degrees actually compared
  bool pass = false;
  std::optional<int> first_mismatch;  // aggregate
  std::vector<AjPerS> per_s;          // weight-matched
  std::string diagnosis;              // nonempty when the convention fails structurally
};

AjReport abel_jacobi_check(int s_max, const StableModel& model, int max_deg,
                           AjConvention convention = AjConvention::Aggregate);

}  // namespace stabcoh
