#include "stabcoh/stable.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabcoh {

int n_bound(NPolicy policy, int g) {
  if (g < 2) throw std::invalid_argument("n_bound: g must be at least 2");
  switch (policy) {
    case NPolicy::Ivanov:
      return g / 2 - 1;
    case NPolicy::Harer85:
      return g / 3;
    case NPolicy::Harer93Upper:
      return 2 * g / 3;
  }
  throw std::logic_error("n_bound: bad policy");
}

const char* n_policy_name(NPolicy policy) {
  switch (policy) {
    case NPolicy::Ivanov:
      return "ivanov";
    case NPolicy::Harer85:
      return "harer85";
    case NPolicy::Harer93Upper:
      return "harer93-upper";
  }
  throw std::logic_error("n_policy_name: bad policy");
}

std::optional<NPolicy> parse_n_policy(std::string_view name) {
  if (name == "ivanov") return NPolicy::Ivanov;
  if (name == "harer85") return NPolicy::Harer85;
  if (name == "harer93-upper") return NPolicy::Harer93Upper;
  return std::nullopt;
}

int stable_cutoff_twisted(NPolicy policy, int g, const NumericalPartition& lambda) {
  return n_bound(policy, g) - lambda.size();
}

int stable_cutoff_decorated(NPolicy policy, int g) { return n_bound(policy, g); }

int stable_cutoff_abel_jacobi(NPolicy policy, int g, int s) {
  return std::min(s, n_bound(policy, g));
}

StableModel StableModel::free_polynomial(int max_deg) {
  std::vector<int> lengths;
  for (int i = 1; 2 * i <= max_deg; ++i) lengths.push_back(i);
  StableModel m;
  m.base = LaurentWindow::geometric_product(0, lengths, max_deg);
  return m;
}

StableModel StableModel::unit() {
  StableModel m;
  m.base = LaurentWindow::one();
  m.user_supplied = true;
  return m;
}

StableModel StableModel::from_series(LaurentWindow series) {
  if (series.min_deg() < 0)
    throw std::invalid_argument("stable model: negative degrees not allowed");
  if (series.coeff(0) != 1) throw std::invalid_argument("stable model: degree-0 coefficient must be 1");
  if (series.coeff(1) != 0) throw std::invalid_argument("stable model: degree-1 coefficient must be 0");
  StableModel m;
  m.base = std::move(series);
  m.user_supplied = true;
  return m;
}

LaurentWindow twisted_series(const NumericalPartition& lambda, const StableModel& model,
                             int max_deg) {
  return (model.base * b_lambda_series(lambda, max_deg)).truncated(max_deg);
}

LaurentWindow decorated_series(int s, bool labeled, const StableModel& model, int max_deg) {
  if (s < 0) throw std::invalid_argument("decorated_series: s must be nonnegative");
  std::vector<int> lengths;
  for (int i = 1; i <= s; ++i) lengths.push_back(labeled ? 1 : i);
  return (model.base * LaurentWindow::geometric_product(0, lengths, max_deg)).truncated(max_deg);
}

LaurentWindow curve_power_series(int s, Variant variant, const StableModel& model, int max_deg) {
  if (variant != Variant::A && variant != Variant::APrime)
    throw std::invalid_argument("curve_power_series: variant must be A or A'");
  if (s < 1) throw std::invalid_argument("curve_power_series: s must be positive");
  return (model.base * variant_hilbert_series(variant, s, max_deg)).truncated(max_deg);
}

const char* c_variant_name(CVariant v) { return v == CVariant::C ? "c" : "cprime"; }

std::optional<CVariant> parse_c_variant(std::string_view name) {
  if (name == "c") return CVariant::C;
  if (name == "cprime") return CVariant::CPrime;
  return std::nullopt;
}

namespace {

int first_generator_index(CVariant v) { return v == CVariant::C ? 1 : 2; }

}  // namespace

LaurentWindow c_series(CVariant variant, int max_deg) {
  std::vector<int> first_factor;
  for (int l = first_generator_index(variant); 2 * l <= max_deg; ++l) first_factor.push_back(l);
  LaurentWindow acc = LaurentWindow::geometric_product(0, first_factor, max_deg);
  for (int k = 2; 2 * (k - 1) <= max_deg; ++k) {
    LaurentWindow factor = LaurentWindow::one();
    for (int l = 1; 2 * l * (k - 1) <= max_deg; ++l) {
      std::vector<int> ring;
      for (int j = 1; j <= l; ++j) ring.push_back(j);
      factor += LaurentWindow::geometric_product(2 * l * (k - 1), ring, max_deg);
    }
    acc *= factor;
  }
  return acc;
}

BigradedSeries c_series_bigraded(CVariant variant, int max_deg, int weight_cap) {
  BigradedSeries acc = BigradedSeries::one(max_deg, weight_cap);
  for (int l = first_generator_index(variant); 2 * l <= max_deg; ++l)
    acc.multiply_geometric(2 * l, l);
  for (int k = 2; 2 * (k - 1) <= max_deg; ++k) {
    BigradedSeries factor(max_deg, weight_cap);
    factor.add_coeff(0, 0, Rat(1));
    for (int l = 1; 2 * l * (k - 1) <= max_deg; ++l) {
      const int weight = k * l;  // points used by l blocks of size k
      if (weight > weight_cap) continue;
      std::vector<int> ring;
      for (int j = 1; j <= l; ++j) ring.push_back(j);
      const LaurentWindow summand =
          LaurentWindow::geometric_product(2 * l * (k - 1), ring, max_deg);
      for (const auto& [deg, coeff] : summand.nonzero_coefficients())
        factor.add_coeff(deg, weight, coeff);
    }
    acc *= factor;
  }
  return acc;
}

CsAgreementReport c_s_agreement(int s, int max_deg) {
  if (s < 1 || s > kGroundSizeCap) throw std::invalid_argument("c_s_agreement: s out of range");
  CsAgreementReport report;
  report.s = s;
  report.verified_max_degree = std::min(s, max_deg);
  const LaurentWindow lhs = c_series(CVariant::C, report.verified_max_degree);
  const LaurentWindow rhs = invariant_series(Variant::A, s, report.verified_max_degree);
  report.first_mismatch = first_difference(lhs, rhs, 0, report.verified_max_degree);
  report.pass = !report.first_mismatch.has_value();
  return report;
}

const char* aj_convention_name(AjConvention c) {
  return c == AjConvention::Aggregate ? "aggregate" : "weight-matched";
}

std::optional<AjConvention> parse_aj_convention(std::string_view name) {
  if (name == "aggregate") return AjConvention::Aggregate;
  if (name == "weight-matched") return AjConvention::WeightMatched;
  return std::nullopt;
}

namespace {

NumericalPartition ones_partition(int j) {
  return NumericalPartition(std::vector<int>(static_cast<std::size_t>(j), 1));
}

LaurentWindow exterior_sum_series(int j, int max_deg) {
  return j == 0 ? LaurentWindow::one() : b_lambda_series(ones_partition(j), max_deg);
}

AjReport aggregate_check(int s_max, const StableModel& model, int max_deg) {
  AjReport report;
  report.convention = AjConvention::Aggregate;
  report.s_max = s_max;
  report.max_deg = max_deg;

  const LaurentWindow lhs = (model.base * c_series(CVariant::CPrime, max_deg)).truncated(max_deg);

  const LaurentWindow geo = LaurentWindow::geometric_product(0, {1}, max_deg);
  LaurentWindow rhs_inner;
  for (int j = 0; j <= s_max; ++j) rhs_inner += exterior_sum_series(j, max_deg).shifted(j);
  const LaurentWindow rhs = (model.base * geo * rhs_inner).truncated(max_deg);

  /* the dropped j = s_max+1 term first contributes at j + min_deg(B_(1^j)) */
  const int probe_max = std::max(max_deg, 2 * s_max + 4);
  const int first_missing =
      s_max + 1 + extreme_closed_form(ones_partition(s_max + 1), probe_max).min_deg();
  report.verified_max_degree = std::min(max_deg, first_missing - 1);

  report.first_mismatch = first_difference(lhs, rhs, 0, report.verified_max_degree);
  report.pass = !report.first_mismatch.has_value();
  if (!report.pass)
    report.diagnosis = "aggregate comparison failed at degree " +
                       std::to_string(*report.first_mismatch);
  return report;
}

AjReport weight_matched_check(int s_max, const StableModel& model, int max_deg) {
  AjReport report;
  report.convention = AjConvention::WeightMatched;
  report.s_max = s_max;
  report.max_deg = max_deg;
  report.verified_max_degree = max_deg;

  const BigradedSeries big = c_series_bigraded(CVariant::CPrime, max_deg, s_max);
  bool all_pass = true;
  for (int s = 0; s <= s_max; ++s) {
    const LaurentWindow lhs = (model.base * big.weight_slice(s)).truncated(max_deg).shifted(s);
    LaurentWindow rhs_inner;
    for (int j = s; j >= 0; j -= 2) rhs_inner += exterior_sum_series(j, max_deg);
    const LaurentWindow rhs = (model.base * rhs_inner).truncated(max_deg).shifted(s);
    AjPerS row;
    row.s = s;
    row.first_mismatch = first_difference(lhs, rhs, s, max_deg);
    row.pass = !row.first_mismatch.has_value();
    all_pass = all_pass && row.pass;
    report.per_s.push_back(row);
  }
  report.pass = all_pass;
  if (!all_pass) {
    for (const AjPerS& row : report.per_s) {
      if (row.pass) continue;
      report.diagnosis = "per-weight pairing fails at s = " + std::to_string(row.s) +
                         " (first mismatch at degree " + std::to_string(*row.first_mismatch) +
                         "): the weight-s slice of C' does not reproduce the exterior-power "
                         "series; C' has no weight-1 component at all, so no per-weight pairing "
                         "can hold, and the aggregate convention is the consistent reading";
      break;
    }
  }
  return report;
}

}  // namespace

AjReport abel_jacobi_check(int s_max, const StableModel& model, int max_deg,
                           AjConvention convention) {
  if (s_max < 0 || s_max + 1 > kGroundSizeCap)
    throw std::invalid_argument("abel_jacobi_check: s_max out of range");
  return convention == AjConvention::Aggregate ? aggregate_check(s_max, model, max_deg)
                                               : weight_matched_check(s_max, model, max_deg);
}

}  // namespace stabcoh
