#include <doctest.h>

#include <algorithm>
#include <random>

#include "stabcoh/exact_linalg.hpp"

using namespace stabcoh;

namespace {

/* Reference rank over Q by naive Gaussian elimination. */
int rational_rank(std::vector<std::vector<Rat>> m, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_SUITE("exact_linalg") {

TEST_CASE("hand-sized ranks") {
  CHECK(matrix_rank({{Int(1), Int(0)}, {Int(0), Int(1)}}, 2) == 2);
  CHECK(matrix_rank({{Int(2), Int(4)}, {Int(1), Int(2)}}, 2) == 1);
  CHECK(matrix_rank({{Int(0), Int(0)}, {Int(0), Int(0)}}, 2) == 0);
  CHECK(matrix_rank({{Int(1), Int(2), Int(3)}, {Int(4), Int(5), Int(6)}, {Int(7), Int(8), Int(9)}},
                    3) == 2);
}

TEST_CASE("incremental interface saturates") {
  IntegerRowEchelon ech(3);
  CHECK(ech.rank() == 0);
  CHECK(ech.add_row({Int(1), Int(1), Int(0)}));
  CHECK(!ech.add_row({Int(2), Int(2), Int(0)}));  // dependent
  CHECK(ech.add_row({Int(0), Int(0), Int(5)}));
  CHECK(ech.rank() == 2);
  CHECK(!ech.add_row({Int(3), Int(3), Int(10)}));
  CHECK(ech.add_row({Int(0), Int(1), Int(0)}));
  CHECK(ech.rank() == 3);
  CHECK(!ech.add_row({Int(41), Int(-7), Int(13)}));  // full already
}

TEST_CASE("agrees with rational elimination on random matrices") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> dim(1, 8), val(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
    std::vector<std::vector<Rat>> q(rows, std::vector<Rat>(cols));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        int v = val(rng);
        // bias towards structured singular cases
        if (trial % 3 == 0 && r > 0) v = (m[0][c] * (r + 1)).convert_to<int>();
        m[r][c] = v;
        q[r][c] = v;
      }
    CHECK(matrix_rank(m, cols) == rational_rank(q, cols));
  }
}

TEST_CASE("rank invariant under row scaling and shuffles") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> val(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<Int>> m(5, std::vector<Int>(6));
    for (auto& row : m)
      for (auto& x : row) x = val(rng);
    int base = matrix_rank(m, 6);
    std::shuffle(m.begin(), m.end(), rng);
    for (auto& row : m)
      for (auto& x : row) x *= 30030;  // 2*3*5*7*11*13
    CHECK(matrix_rank(m, 6) == base);
  }
}

}  // TEST_SUITE
