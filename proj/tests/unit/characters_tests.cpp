#include <doctest.h>

#include "stabcoh/characters.hpp"

using namespace stabcoh;

namespace {

NumericalPartition P(std::vector<int> parts) { return NumericalPartition(std::move(parts)); }

}  // namespace

TEST_SUITE("characters") {

TEST_CASE("S3 table by hand") {
  CharacterTable t(3);
  // classes in order (3), (2,1), (1,1,1)
  CHECK(t.value(P({3}), P({3})) == 1);
  CHECK(t.value(P({3}), P({2, 1})) == 1);
  CHECK(t.value(P({3}), P({1, 1, 1})) == 1);
  CHECK(t.value(P({2, 1}), P({3})) == -1);
  CHECK(t.value(P({2, 1}), P({2, 1})) == 0);
  CHECK(t.value(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(t.value(P({1, 1, 1}), P({3})) == 1);
  CHECK(t.value(P({1, 1, 1}), P({2, 1})) == -1);
  CHECK(t.value(P({1, 1, 1}), P({1, 1, 1})) == 1);
}

TEST_CASE("S4 table by hand") {
  CharacterTable t(4);
  // classes: (4), (3,1), (2,2), (2,1,1), (1^4)
  const NumericalPartition classes[] = {P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})};
  const NumericalPartition rows[] = {P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})};
  const int expected[5][5] = {
      {1, 1, 1, 1, 1},      // trivial
      {-1, 0, -1, 1, 3},    // standard
      {0, -1, 2, 0, 2},     // two-row square
      {1, 0, -1, -1, 3},    // standard x sign
      {-1, 1, 1, -1, 1},    // sign
  };
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) CHECK(t.value(rows[r], classes[c]) == expected[r][c]);
}

TEST_CASE("hook length dimensions match the identity column") {
  for (int s = 1; s <= 8; ++s) {
    CharacterTable t(s);
    NumericalPartition identity(std::vector<int>(s, 1));
    Int sum_sq = 0;
    for (const auto& lambda : t.labels()) {
      Int f = sym_dimension(lambda);
      CHECK(f == t.value(lambda, identity));
      CHECK(f > 0);
      CHECK(f == sym_dimension(lambda.conjugate()));
      sum_sq += f * f;
    }
    CHECK(sum_sq == factorial(s));
  }
}

TEST_CASE("row and column orthogonality") {
  for (int s = 2; s <= 7; ++s) {
    CharacterTable t(s);
    const auto& labels = t.labels();
    const int n = static_cast<int>(labels.size());
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        Int row = 0;
        for (int c = 0; c < n; ++c)
          row += class_data(labels[c]).class_size * t.value(a, c) * t.value(b, c);
        CHECK(row == (a == b ? factorial(s) : Int(0)));
      }
    for (int c = 0; c < n; ++c)
      for (int d = c; d < n; ++d) {
        Int col = 0;
        for (int a = 0; a < n; ++a) col += t.value(a, c) * t.value(a, d);
        CHECK(col == (c == d ? class_data(labels[c]).centralizer : Int(0)));
      }
  }
}

TEST_CASE("conjugate row is the sign twist") {
  for (int s = 2; s <= 7; ++s) {
    CharacterTable t(s);
    for (const auto& lambda : t.labels())
      for (const auto& mu : t.labels())
        CHECK(t.value(lambda.conjugate(), mu) == class_data(mu).sign * t.value(lambda, mu));
  }
}

TEST_CASE("natural permutation character decomposes as trivial plus standard") {
  for (int s = 3; s <= 6; ++s) {
    ClassFunction fixed_points(s);
    for (const auto& mu : numerical_partitions(s))
      fixed_points.set(mu, Rat(mu.multiplicities()[1]));
    for (const auto& lambda : numerical_partitions(s)) {
      Rat m = multiplicity(fixed_points, lambda);
      Rat expected = 0;
      if (lambda == P({s})) expected = 1;
      if (lambda.part(0) == s - 1 && lambda.length() == 2) expected = 1;
      CHECK(m == expected);
    }
  }
}

TEST_CASE("single hooks against the closed form") {
  // chi^{(s)} = 1 everywhere; chi^{(1^s)} = sign
  for (int s = 1; s <= 7; ++s)
    for (const auto& mu : numerical_partitions(s)) {
      CHECK(irreducible_character(P({s}), mu) == 1);
      CHECK(irreducible_character(NumericalPartition(std::vector<int>(s, 1)), mu) ==
            class_data(mu).sign);
    }
  CHECK_THROWS(irreducible_character(P({2}), P({3})));
}

}  // TEST_SUITE
