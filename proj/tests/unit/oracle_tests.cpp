#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "stabcoh/bmodule.hpp"
#include "stabcoh/oracle.hpp"

using namespace stabcoh;

namespace {

NumericalPartition P(std::vector<int> parts) { return NumericalPartition(std::move(parts)); }

PartitionMonomial mono(int s, std::vector<std::vector<int>> blocks, std::vector<int> exps) {
  SetPartition sp = SetPartition::from_blocks(s, blocks);
  return PartitionMonomial(sp, exps);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("explicit degree-6 piece on two points") {
  // internal degree 8: u12^4 and u1^2 u2^2 are the only A''-monomials
  ExplicitGradedPiece piece = build_b_piece(2, 6);
  REQUIRE(piece.basis.size() == 2);
  CHECK(piece.sign_twist);
  CHECK(piece.degree == 6);
  auto target0 = mono(2, {{1, 2}}, {4});
  auto target1 = mono(2, {{1}, {2}}, {2, 2});
  CHECK(std::count(piece.basis.begin(), piece.basis.end(), target0) == 1);
  CHECK(std::count(piece.basis.begin(), piece.basis.end(), target1) == 1);
  for (std::size_t i = 0; i < piece.basis.size(); ++i)
    CHECK(piece.index.at(piece.basis[i]) == static_cast<int>(i));
}

TEST_CASE("explicit internal-degree-4 algebra piece on two points") {
  // every block, singletons included, needs its minimum exponent, so only
  // u12^2 survives the A'' restriction
  ExplicitGradedPiece strict = build_algebra_piece(2, Variant::ADoublePrime, 4);
  REQUIRE(strict.basis.size() == 1);
  CHECK(strict.basis[0] == mono(2, {{1, 2}}, {2}));
  CHECK_FALSE(strict.sign_twist);

  // the unrestricted algebra keeps u1^2, u1 u2, u2^2 and u12^2
  ExplicitGradedPiece full = build_algebra_piece(2, Variant::A, 4);
  CHECK(full.basis.size() == 4);
}

TEST_CASE("the action permutes the basis with the right signs") {
  ExplicitGradedPiece piece = build_b_piece(3, 1);
  Permutation swap12 = Permutation({1, 0, 2});
  SignedPermutation act = piece_action(piece, swap12);
  REQUIRE(act.images.size() == piece.basis.size());
  CHECK(act.sign == -1);  // transposition under the sign twist
  std::vector<int> seen(act.images.begin(), act.images.end());
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == static_cast<int>(i));

  // applying a permutation twice with sign^2 = 1 restores the identity
  for (std::size_t i = 0; i < act.images.size(); ++i)
    CHECK(act.images[act.images[i]] == static_cast<int>(i));
}

TEST_CASE("identity trace is the dimension") {
  for (int s = 1; s <= 3; ++s)
    for (int n = -s; n <= 6; ++n) {
      ExplicitGradedPiece piece = build_b_piece(s, n);
      CHECK(explicit_trace(piece, Permutation::identity(s)) == Int(piece.basis.size()));
    }
}

TEST_CASE("traces are class functions") {
  std::mt19937 rng(515);
  ExplicitGradedPiece piece = build_b_piece(4, 2);
  std::vector<int> base{1, 0, 2, 3};  // a transposition
  Permutation sigma(base);
  Int reference = explicit_trace(piece, sigma);
  std::vector<int> conj(4);
  std::iota(conj.begin(), conj.end(), 0);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(conj.begin(), conj.end(), rng);
    Permutation tau(conj);
    Permutation conjugated = tau.after(sigma).after(tau.inverse());
    CHECK(explicit_trace(piece, conjugated) == reference);
  }
}

TEST_CASE("explicit isotypic dimensions match the character pipeline") {
  for (int s = 2; s <= 3; ++s) {
    CharacterTable table(s);
    auto series_table = b_series_table(s, 8);
    for (int n = -s; n <= 5; ++n) {
      ExplicitGradedPiece piece = build_b_piece(s, n);
      for (const auto& [lambda, series] : series_table)
        CHECK(Int(isotypic_dims_explicit(piece, lambda, table)) == series.coeff(n));
    }
  }
}

TEST_CASE("full cross validation on small instances") {
  for (int s = 1; s <= 3; ++s) {
    CrossValidateReport r = cross_validate(s, -s, 6 - s);
    CHECK(r.pass);
    CHECK(r.first_failure.empty());
    CHECK(r.pieces_checked == 7);  // one per degree in [-s, 6-s]
  }
}

TEST_CASE("resource caps are enforced") {
  CHECK_THROWS_AS(cross_validate(kOracleGroundCap + 1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_b_piece(kOracleGroundCap + 1, 0), std::invalid_argument);
}

}  // TEST_SUITE
