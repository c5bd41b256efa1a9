#include "stabcoh/symplectic.hpp"

#include <stdexcept>

#include "stabcoh/characters.hpp"

namespace stabcoh {

Int sp_irrep_dimension(int g, const NumericalPartition& lambda) {
  if (g < 1) throw std::invalid_argument("sp_irrep_dimension: g must be positive");
  if (lambda.length() > g) return 0;
  /* shifted weights l_i = lambda_i + g - i + 1 against the rho-point m_i = g - i + 1 */
  std::vector<Int> l(static_cast<std::size_t>(g)), m(static_cast<std::size_t>(g));
  for (int i = 1; i <= g; ++i) {
    l[static_cast<std::size_t>(i - 1)] = lambda.part(i - 1) + g - i + 1;
    m[static_cast<std::size_t>(i - 1)] = g - i + 1;
  }
  Rat dim(1);
  for (int i = 0; i < g; ++i) {
    dim *= Rat(l[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < g; ++j) {
      const Int& li = l[static_cast<std::size_t>(i)];
      const Int& lj = l[static_cast<std::size_t>(j)];
      const Int& mi = m[static_cast<std::size_t>(i)];
      const Int& mj = m[static_cast<std::size_t>(j)];
      dim *= Rat(li * li - lj * lj, mi * mi - mj * mj);
    }
  }
  return require_integral(dim, "sp_irrep_dimension");
}

namespace {

Int int_pow(Int base, int exp) {
  Int out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

Int weyl_space_dimension(int g, int s) {
  if (s < 1) throw std::invalid_argument("weyl_space_dimension: s must be positive");
  if (2 * g < s)
    throw std::domain_error(
        "weyl_space_dimension: requires 2g >= s (the matching count is a stable-range "
        "dimension and breaks down below it)");
  /* Alternating sum over partial matchings of the s tensor slots: choosing j
   * disjoint form-slots in C(s,2j)*(2j-1)!! ways leaves a free (2g)^{s-2j}.
   * The j = 1 term alone would be the naive count for a single layer of form
   * insertions; the higher terms correct for relations between insertions
   * (the first one appears at s = 4, where the corank is 3). */
  Int dim = 0;
  Int sign = 1;
  for (int j = 0; 2 * j <= s; ++j) {
    Int matchings = 1;  /* C(s, 2j) * (2j-1)!! */
    for (int i = 0; i < 2 * j; ++i) matchings *= s - i;
    for (int i = 0; i < j; ++i) matchings /= 2 * (i + 1);
    dim += sign * matchings * int_pow(Int(2 * g), s - 2 * j);
    sign = -sign;
  }
  return dim;
}

SchurWeylReport schur_weyl_check(int g, int s) {
  if (g < s)
    throw std::domain_error(
        "schur_weyl_check: requires g >= s (multiplicity-one decomposition can fail below, "
        "e.g. at g = 2, s = 4)");
  SchurWeylReport report;
  report.g = g;
  report.s = s;
  report.decomposition_total = 0;
  for (const NumericalPartition& lambda : numerical_partitions(s)) {
    SchurWeylRow row{lambda, sym_dimension(lambda), sp_irrep_dimension(g, lambda)};
    report.decomposition_total += row.f_lambda * row.sp_dim;
    report.rows.push_back(std::move(row));
  }
  report.expected = weyl_space_dimension(g, s);
  report.pass = report.decomposition_total == report.expected;
  return report;
}

std::vector<NumericalPartition> exterior_power_decomposition(int s) {
  if (s < 0) throw std::invalid_argument("exterior_power_decomposition: s must be nonnegative");
  std::vector<NumericalPartition> out;
  for (int j = s; j >= 0; j -= 2)
    out.push_back(NumericalPartition(std::vector<int>(static_cast<std::size_t>(j), 1)));
  return out;
}

}  // namespace stabcoh
