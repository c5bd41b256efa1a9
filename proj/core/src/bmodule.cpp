#include "stabcoh/bmodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabcoh {

namespace {

struct ClassTerm {
  CycleType mu;
  Rat weight;  // class_size * sign / s!
  LaurentWindow trace;
};

std::vector<ClassTerm> twisted_traces(int s, int max_deg) {
  std::vector<ClassTerm> terms;
  const Rat order(factorial(s));
  for (const CycleType& mu : numerical_partitions(s)) {
    const ClassData cd = class_data(mu);
    terms.push_back({mu, Rat(cd.class_size * cd.sign) / order,
                     graded_trace(mu, Variant::ADoublePrime, s, max_deg + s)});
  }
  return terms;
}

LaurentWindow combine(const std::vector<ClassTerm>& terms, const NumericalPartition& lambda,
                      int s) {
  LaurentWindow acc;
  for (const ClassTerm& t : terms)
    acc += t.trace.scaled(t.weight * Rat(irreducible_character(lambda, t.mu)));
  acc = acc.shifted(-s);
  acc.assert_integral("b_lambda_series");
  for (const auto& [deg, value] : acc.nonzero_coefficients())
    if (value < 0) throw std::logic_error("b_lambda_series: negative multiplicity");
  return acc;
}

}  // namespace

ClassFunction b_graded_character(int s, int n) {
  if (s < 1) throw std::invalid_argument("b_graded_character: s must be positive");
  ClassFunction f(s);
  for (const CycleType& mu : numerical_partitions(s)) {
    const LaurentWindow trace = graded_trace(mu, Variant::ADoublePrime, s, n + s);
    f.set(mu, Rat(class_data(mu).sign) * trace.coeff(n + s));
  }
  return f;
}

LaurentWindow b_lambda_series(const NumericalPartition& lambda, int max_deg) {
  if (lambda.size() < 1) throw std::invalid_argument("b_lambda_series: lambda must be nonempty");
  return combine(twisted_traces(lambda.size(), max_deg), lambda, lambda.size());
}

std::vector<std::pair<NumericalPartition, LaurentWindow>> b_series_table(int s, int max_deg) {
  const auto terms = twisted_traces(s, max_deg);
  std::vector<std::pair<NumericalPartition, LaurentWindow>> table;
  for (const NumericalPartition& lambda : numerical_partitions(s))
    table.emplace_back(lambda, combine(terms, lambda, s));
  return table;
}

std::pair<int, int> hodge_type(const NumericalPartition& lambda, int n) {
  if ((n + lambda.size()) % 2 != 0)
    throw std::domain_error("hodge_type: degree parity mismatch, graded piece is zero");
  const int d = (n + lambda.size()) / 2;
  return {d, d};
}

LaurentWindow extreme_closed_form(const NumericalPartition& lambda, int max_deg) {
  const int s = lambda.size();
  if (s < 1) throw std::invalid_argument("extreme_closed_form: lambda must be nonempty");
  if (lambda.length() == 1) {  // (s): free module on one generator
    std::vector<int> lengths(static_cast<std::size_t>(s));
    for (int i = 1; i <= s; ++i) lengths[static_cast<std::size_t>(i - 1)] = i;
    return LaurentWindow::geometric_product(s * s + 2 * s, lengths, max_deg);
  }
  if (lambda.part(0) == 1) {  // (1^s): one free summand per partition type
    LaurentWindow acc;
    for (const NumericalPartition& type : numerical_partitions(s)) {
      const auto mult = type.multiplicities();
      int shift = -s;
      std::vector<int> lengths;
      for (int k = 1; k < static_cast<int>(mult.size()); ++k) {
        const int lk = mult[static_cast<std::size_t>(k)];
        if (lk == 0) continue;
        shift += 2 * lk * std::max(2, k - 1);
        for (int j = 1; j <= lk; ++j) lengths.push_back(j);
      }
      acc += LaurentWindow::geometric_product(shift, lengths, max_deg);
    }
    return acc;
  }
  throw std::invalid_argument("extreme_closed_form: only (s) and (1^s) have closed forms here");
}

}  // namespace stabcoh
