#pragma once

#include <vector>

#include "stabcoh/bigint.hpp"

namespace stabcoh {

/* Incremental row echelon form over Z with fraction-free elimination.
 * Rows are reduced against the current pivots and divided by their content,
 * which keeps entries small; the rank is exact. */
class IntegerRowEchelon {
 public:
  explicit IntegerRowEchelon(int cols);

  /* Reduces the row and inserts it if independent; returns true if the rank grew. */
  bool add_row(std::vector<Int> row);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

 private:
  int cols_;
  std::vector<std::vector<Int>> rows_;  // sorted by pivot column, strictly increasing
  std::vector<int> pivot_col_;
};

int matrix_rank(const std::vector<std::vector<Int>>& rows, int cols);

}  // namespace stabcoh
