#include "stabcoh/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabcoh {

namespace {

int leading_column(const std::vector<Int>& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return static_cast<int>(j);
  return -1;
}

void divide_by_content(std::vector<Int>& row, int from_col) {
  Int g = 0;
  for (std::size_t j = static_cast<std::size_t>(from_col); j < row.size(); ++j) {
    if (row[j] == 0) continue;
    g = boost::multiprecision::gcd(g, row[j]);
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (std::size_t j = static_cast<std::size_t>(from_col); j < row.size(); ++j) row[j] /= g;
}

}  // namespace

IntegerRowEchelon::IntegerRowEchelon(int cols) : cols_(cols) {
  if (cols < 0) throw std::invalid_argument("IntegerRowEchelon: negative column count");
}

bool IntegerRowEchelon::add_row(std::vector<Int> row) {
  if (static_cast<int>(row.size()) != cols_)
    throw std::invalid_argument("IntegerRowEchelon: row length mismatch");
  int lead = leading_column(row);
  if (lead < 0) return false;
  divide_by_content(row, lead);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int p = pivot_col_[i];
    if (p < lead) continue;
    if (p > lead) break;
    /* fraction-free step: row <- pivot*row - coeff*pivot_row, then renormalize */
    const Int coeff = row[static_cast<std::size_t>(lead)];
    const Int pivot = rows_[i][static_cast<std::size_t>(p)];
    for (int j = lead; j < cols_; ++j) {
      const std::size_t k = static_cast<std::size_t>(j);
      row[k] = pivot * row[k] - coeff * rows_[i][k];
    }
    lead = leading_column(row);
    if (lead < 0) return false;
    divide_by_content(row, lead);
  }
  const auto pos = std::upper_bound(pivot_col_.begin(), pivot_col_.end(), lead);
  const std::size_t idx = static_cast<std::size_t>(pos - pivot_col_.begin());
  pivot_col_.insert(pos, lead);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
  return true;
}

int matrix_rank(const std::vector<std::vector<Int>>& rows, int cols) {
  IntegerRowEchelon ech(cols);
  for (const auto& r : rows) ech.add_row(r);
  return ech.rank();
}

}  // namespace stabcoh
