#include <doctest.h>

#include "stabcoh/bmodule.hpp"

using namespace stabcoh;

namespace {

NumericalPartition P(std::vector<int> parts) { return NumericalPartition(std::move(parts)); }
NumericalPartition ones(int s) { return NumericalPartition(std::vector<int>(s, 1)); }

}  // namespace

TEST_SUITE("bmodule") {

TEST_CASE("column expansion for two antisymmetric slots") {
  // sum of the two type modules: q^2/(1-q^2) + q^6/((1-q^2)(1-q^4))
  LaurentWindow b = b_lambda_series(P({1, 1}), 20);
  LaurentWindow expect = LaurentWindow::geometric_product(2, {1}, 20) +
                         LaurentWindow::geometric_product(6, {1, 2}, 20);
  for (int d = 0; d <= 20; ++d) CHECK(b.coeff(d) == expect.coeff(d));
  CHECK(b.coeff(2) == 1);
  CHECK(b.coeff(4) == 1);
  CHECK(b.coeff(6) == 2);
  CHECK(b.coeff(8) == 2);
  CHECK(b.coeff(10) == 3);
}

TEST_CASE("column expansion for three antisymmetric slots") {
  LaurentWindow b = b_lambda_series(P({1, 1, 1}), 15);
  LaurentWindow expect = LaurentWindow::geometric_product(1, {1}, 15) +
                         LaurentWindow::geometric_product(5, {1, 1}, 15) +
                         LaurentWindow::geometric_product(9, {1, 2, 3}, 15);
  for (int d = 0; d <= 15; ++d) CHECK(b.coeff(d) == expect.coeff(d));
  const int pinned[][2] = {{1, 1}, {3, 1}, {5, 2}, {7, 3}, {9, 5}};
  for (auto [deg, value] : pinned) CHECK(b.coeff(deg) == value);
}

TEST_CASE("one-row modules have the shifted free form") {
  for (int s = 1; s <= 4; ++s) {
    std::vector<int> lengths;
    for (int i = 1; i <= s; ++i) lengths.push_back(i);
    LaurentWindow expect = LaurentWindow::geometric_product(s * s + 2 * s, lengths, 30);
    LaurentWindow b = b_lambda_series(P({s}), 30);
    for (int d = 0; d <= 30; ++d) CHECK(b.coeff(d) == expect.coeff(d));
  }
}

TEST_CASE("closed forms match the character pipeline at the extremes") {
  for (int s = 1; s <= 4; ++s) {
    LaurentWindow row = extreme_closed_form(P({s}), 24);
    LaurentWindow row_pipeline = b_lambda_series(P({s}), 24);
    LaurentWindow col = extreme_closed_form(ones(s), 24);
    LaurentWindow col_pipeline = b_lambda_series(ones(s), 24);
    for (int d = 0; d <= 24; ++d) {
      CHECK(row.coeff(d) == row_pipeline.coeff(d));
      CHECK(col.coeff(d) == col_pipeline.coeff(d));
    }
  }
  CHECK_THROWS(extreme_closed_form(P({2, 1}), 10));  // neither extreme
}

TEST_CASE("degree-1 part is the top column only") {
  for (int s = 1; s <= 5; ++s)
    for (const auto& [lambda, series] : b_series_table(s, 6))
      CHECK(series.coeff(1) == (lambda == ones(3) ? 1 : 0));
}

TEST_CASE("isotypic dimensions add up to the ambient algebra") {
  for (int s = 1; s <= 4; ++s) {
    auto table = b_series_table(s, 12);
    LaurentWindow ambient = variant_hilbert_series(Variant::ADoublePrime, s, 12 + s);
    for (int n = -s; n <= 12; ++n) {
      Rat total = 0;
      for (const auto& [lambda, series] : table)
        total += Rat(sym_dimension(lambda)) * series.coeff(n);
      CHECK(total == ambient.coeff(n + s));
    }
  }
}

TEST_CASE("graded character values are signed trace coefficients") {
  for (int s = 2; s <= 4; ++s)
    for (int n : {-s + 2, 0, 2, 4}) {
      ClassFunction chi = b_graded_character(s, n);
      for (const auto& mu : numerical_partitions(s)) {
        LaurentWindow t = graded_trace(mu, Variant::ADoublePrime, s, n + s);
        CHECK(chi.at(mu) == Rat(class_data(mu).sign) * t.coeff(n + s));
      }
    }
}

TEST_CASE("series have nonnegative integer coefficients") {
  for (int s = 1; s <= 5; ++s)
    for (const auto& [lambda, series] : b_series_table(s, 10)) {
      (void)lambda;
      series.assert_integral("bmodule test");
      for (int d = series.min_deg(); d <= series.max_deg(); ++d) CHECK(series.coeff(d) >= 0);
    }
}

TEST_CASE("Hodge bookkeeping") {
  CHECK(hodge_type(P({1, 1}), 2) == std::pair<int, int>(2, 2));
  CHECK(hodge_type(P({1, 1, 1}), 1) == std::pair<int, int>(2, 2));
  CHECK(hodge_type(P({2}), 8) == std::pair<int, int>(5, 5));
  CHECK_THROWS_AS(hodge_type(P({1, 1}), 3), std::domain_error);  // parity violation
  CHECK_THROWS(b_lambda_series(NumericalPartition(), 5));
}

}  // TEST_SUITE
