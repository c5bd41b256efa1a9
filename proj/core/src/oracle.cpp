#include "stabcoh/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "stabcoh/bmodule.hpp"
#include "stabcoh/exact_linalg.hpp"

namespace stabcoh {

namespace {

ExplicitGradedPiece build_piece(int s, Variant v, bool twist, int degree, int internal_degree) {
  if (s < 1 || s > kOracleGroundCap)
    throw std::invalid_argument("oracle: s exceeds the brute-force cap");
  ExplicitGradedPiece piece;
  piece.s = s;
  piece.variant = v;
  piece.sign_twist = twist;
  piece.degree = degree;
  piece.basis = monomial_basis(v, s, internal_degree);
  if (piece.basis.size() > kOracleBasisCap)
    throw std::length_error("oracle: basis exceeds the resource cap");
  for (std::size_t i = 0; i < piece.basis.size(); ++i)
    piece.index.emplace(piece.basis[i], static_cast<int>(i));
  return piece;
}

}  // namespace

ExplicitGradedPiece build_b_piece(int s, int n) {
  return build_piece(s, Variant::ADoublePrime, true, n, n + s);
}

ExplicitGradedPiece build_algebra_piece(int s, Variant v, int n) {
  return build_piece(s, v, false, n, n);
}

SignedPermutation piece_action(const ExplicitGradedPiece& piece, const Permutation& sigma) {
  SignedPermutation action;
  action.sign = piece.sign_twist ? sigma.sign() : 1;
  action.images.reserve(piece.basis.size());
  for (const PartitionMonomial& m : piece.basis)
    action.images.push_back(piece.index.at(relabel(m, sigma)));
  return action;
}

Int explicit_trace(const ExplicitGradedPiece& piece, const Permutation& sigma) {
  const SignedPermutation action = piece_action(piece, sigma);
  Int fixed = 0;
  for (std::size_t i = 0; i < action.images.size(); ++i)
    if (action.images[i] == static_cast<int>(i)) ++fixed;
  return fixed * action.sign;
}

int isotypic_dims_explicit(const ExplicitGradedPiece& piece, const NumericalPartition& lambda,
                           const CharacterTable& table) {
  const int s = piece.s;
  if (lambda.size() != s) throw std::invalid_argument("isotypic_dims_explicit: |lambda| != s");
  const std::size_t dim = piece.basis.size();
  if (dim == 0) return 0;

  std::vector<std::vector<Int>> matrix(dim, std::vector<Int>(dim, Int(0)));
  std::vector<int> images(static_cast<std::size_t>(s));
  std::iota(images.begin(), images.end(), 0);
  do {
    const Permutation sigma{std::vector<int>(images)};
    const SignedPermutation action = piece_action(piece, sigma);
    const Int coeff = table.value(lambda, sigma.cycle_type()) * action.sign;
    if (coeff == 0) continue;
    for (std::size_t i = 0; i < dim; ++i)
      matrix[static_cast<std::size_t>(action.images[i])][i] += coeff;
  } while (std::next_permutation(images.begin(), images.end()));

  const int rank = matrix_rank(matrix, static_cast<int>(dim));
  const Int f = sym_dimension(lambda);
  if (rank % f != 0)
    throw std::logic_error("isotypic_dims_explicit: projector rank not divisible by f^lambda");
  return Int(rank / f).convert_to<int>();
}

CrossValidateReport cross_validate(int s, int min_degree, int max_degree) {
  CrossValidateReport report;
  report.s = s;
  report.min_degree = min_degree;
  report.max_degree = max_degree;
  report.pass = true;

  const CharacterTable table(s);
  const auto b_table = b_series_table(s, max_degree);
  const auto classes = numerical_partitions(s);
  std::vector<LaurentWindow> molien;
  std::vector<int> class_signs;
  for (const CycleType& mu : classes) {
    molien.push_back(graded_trace(mu, Variant::ADoublePrime, s, max_degree + s));
    class_signs.push_back(class_data(mu).sign);
  }

  auto fail = [&](std::string what) {
    if (report.pass) report.first_failure = std::move(what);
    report.pass = false;
  };

  for (int n = min_degree; n <= max_degree; ++n) {
    const ExplicitGradedPiece piece = build_b_piece(s, n);
    ++report.pieces_checked;

    std::size_t dim_accounted = 0;
    for (const auto& [lambda, series] : b_table) {
      const int explicit_mult = isotypic_dims_explicit(piece, lambda, table);
      const Rat series_mult = series.coeff(n);
      if (Rat(explicit_mult) != series_mult)
        fail("isotypic mismatch at n=" + std::to_string(n) + ", lambda=" + lambda.to_string() +
             ": explicit " + std::to_string(explicit_mult) + " vs series " +
             series_mult.str());
      dim_accounted += (sym_dimension(lambda) * explicit_mult).convert_to<std::size_t>();
    }
    if (dim_accounted != piece.basis.size())
      fail("dimension bookkeeping off at n=" + std::to_string(n));

    for (std::size_t c = 0; c < classes.size(); ++c) {
      const Permutation sigma = Permutation::with_cycle_type(classes[c]);
      const Int lhs = explicit_trace(piece, sigma);
      const Rat rhs = Rat(class_signs[c]) * molien[c].coeff(n + s);
      if (Rat(lhs) != rhs)
        fail("trace mismatch at n=" + std::to_string(n) + ", class=" + classes[c].to_string());
    }
  }
  return report;
}

}  // namespace stabcoh
