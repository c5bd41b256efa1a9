/* End-to-end gate: one pass/fail line per criterion, exact comparisons
 * throughout, wall-clock limits enforced where stated.  Exits nonzero if
 * anything fails; the lines are the report. */

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "stabcoh/bmodule.hpp"
#include "stabcoh/characters.hpp"
#include "stabcoh/macdonald.hpp"
#include "stabcoh/oracle.hpp"
#include "stabcoh/stable.hpp"
#include "stabcoh/symplectic.hpp"

using namespace stabcoh;

namespace {

std::string g_cli;

struct Outcome {
  bool pass = false;
  std::string detail;
};

NumericalPartition P(std::vector<int> parts) { return NumericalPartition(std::move(parts)); }

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Outcome pass() { return {true, ""}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

Outcome compare_windows(const LaurentWindow& got, const LaurentWindow& expect, int lo, int hi,
                        const std::string& label) {
  if (auto d = first_difference(got, expect, lo, hi))
    return fail(label + ": first mismatch at degree " + std::to_string(*d));
  return pass();
}

/* 1. Two-slot column module against its two-piece closed form, degrees <= 30. */
Outcome criterion01() {
  LaurentWindow expect = LaurentWindow::geometric_product(2, {1}, 30) +
                         LaurentWindow::geometric_product(6, {1, 2}, 30);
  return compare_windows(b_lambda_series(P({1, 1}), 30), expect, -2, 30, "(1,1)");
}

/* 2. Three-slot column module against its three-piece closed form, degrees
 * <= 25; the degree-1 piece is one-dimensional. */
Outcome criterion02() {
  LaurentWindow got = b_lambda_series(P({1, 1, 1}), 25);
  LaurentWindow expect = LaurentWindow::geometric_product(1, {1}, 25) +
                         LaurentWindow::geometric_product(5, {1, 1}, 25) +
                         LaurentWindow::geometric_product(9, {1, 2, 3}, 25);
  Outcome o = compare_windows(got, expect, -3, 25, "(1,1,1)");
  if (!o.pass) return o;
  if (got.coeff(1) != 1) return fail("degree-1 coefficient is " + got.coeff(1).str());
  return pass();
}

/* 3. One-row modules match the shifted free closed form, degrees <= 40. */
Outcome criterion03() {
  for (int s = 1; s <= 5; ++s) {
    std::vector<int> lengths;
    for (int i = 1; i <= s; ++i) lengths.push_back(i);
    LaurentWindow expect = LaurentWindow::geometric_product(s * s + 2 * s, lengths, 40);
    Outcome o = compare_windows(b_lambda_series(P({s}), 40), expect, -s, 40,
                                "(" + std::to_string(s) + ")");
    if (!o.pass) return o;
  }
  return pass();
}

/* 4. Degree-1 coefficient vanishes for every shape of size <= 6 other than
 * the three-slot column. */
Outcome criterion04() {
  const NumericalPartition exception = P({1, 1, 1});
  for (int s = 1; s <= 6; ++s)
    for (const auto& [lambda, series] : b_series_table(s, 2)) {
      if (lambda == exception) continue;
      if (series.coeff(1) != 0)
        return fail("nonzero degree-1 coefficient at " + lambda.to_string());
    }
  return pass();
}

/* 5. Explicit-basis oracle agrees with the character/Molien pipeline for
 * s = 1..5 on the windows [-s, 20-s]. */
Outcome criterion05() {
  for (int s = 1; s <= 5; ++s) {
    CrossValidateReport r = cross_validate(s, -s, 20 - s);
    if (!r.pass) return fail("s = " + std::to_string(s) + ": " + r.first_failure);
  }
  return pass();
}

/* 6. Multiplicity-one tensor decomposition totals match the matching count
 * for 1 <= s <= 6, s <= g <= s+3; pinned rank-2 example included. */
Outcome criterion06() {
  if (sp_irrep_dimension(2, P({2, 1})) != 16) return fail("dim at g=2, lambda=(2,1) is not 16");
  for (int s = 1; s <= 6; ++s)
    for (int g = s; g <= s + 3; ++g) {
      SchurWeylReport r = schur_weyl_check(g, s);
      if (!r.pass)
        return fail("g = " + std::to_string(g) + ", s = " + std::to_string(s) + ": total " +
                    r.decomposition_total.str() + " vs expected " + r.expected.str());
    }
  return pass();
}

/* 7. Character tables through s = 10: both orthogonality relations and the
 * square-sum identity. */
Outcome criterion07() {
  for (int s = 1; s <= 10; ++s) {
    CharacterTable table(s);
    const auto& labels = table.labels();
    const int k = static_cast<int>(labels.size());
    std::vector<ClassData> data;
    for (const auto& mu : labels) data.push_back(class_data(mu));
    const Int fact = factorial(s);

    Int square_sum = 0;
    for (int a = 0; a < k; ++a) {
      square_sum += table.value(a, k - 1) * table.value(a, k - 1);
      for (int b = a; b < k; ++b) {
        Int dot = 0;
        for (int c = 0; c < k; ++c) dot += data[c].class_size * table.value(a, c) * table.value(b, c);
        if (dot != (a == b ? fact : Int(0)))
          return fail("row orthogonality fails at s = " + std::to_string(s));
      }
    }
    if (square_sum != fact) return fail("square-sum identity fails at s = " + std::to_string(s));

    for (int c = 0; c < k; ++c)
      for (int d = c; d < k; ++d) {
        Int dot = 0;
        for (int a = 0; a < k; ++a) dot += table.value(a, c) * table.value(a, d);
        if (dot != (c == d ? data[c].centralizer : Int(0)))
          return fail("column orthogonality fails at s = " + std::to_string(s));
      }
  }
  return pass();
}

/* 8. Symmetric-power Betti tables match the binomial closed form and satisfy
 * Poincare duality for g <= 3, s <= 5. */
Outcome criterion08() {
  for (int g = 1; g <= 3; ++g)
    for (int s = 1; s <= 5; ++s) {
      BettiTable t = sym_product_betti(g, s);
      for (int n = 0; n <= 2 * s; ++n) {
        Int expect = 0;
        for (int b = 0; 2 * b <= n; ++b)
          if ((n - 2 * b) + b <= s) expect += binom(2 * g, n - 2 * b);
        if (t.betti[n] != expect)
          return fail("g = " + std::to_string(g) + ", s = " + std::to_string(s) +
                      ", n = " + std::to_string(n) + ": " + t.betti[n].str() + " vs " +
                      expect.str());
        if (t.betti[n] != t.betti[2 * s - n])
          return fail("duality fails at g = " + std::to_string(g) +
                      ", s = " + std::to_string(s));
      }
    }
  return pass();
}

/* 9. Class-sum Molien series equal the direct fixed-space dimensions for all
 * four variants, s <= 8, degrees <= 24. */
Outcome criterion09() {
  for (Variant v : {Variant::ATilde, Variant::A, Variant::APrime, Variant::ADoublePrime})
    for (int s = 1; s <= 8; ++s) {
      LaurentWindow molien = invariant_series(v, s, 24);
      LaurentWindow direct = invariant_series_direct(v, s, 24);
      if (auto d = first_difference(molien, direct, 0, 24))
        return fail(std::string(variant_name(v)) + ", s = " + std::to_string(s) +
                    ": mismatch at degree " + std::to_string(*d));
    }
  return pass();
}

/* 10. Low-degree agreement of the limit algebra for s <= 6; the degree-1
 * pairing passes under the aggregate convention and the rejected per-weight
 * convention is reported with a diagnosis, never silently. */
Outcome criterion10() {
  for (int s = 1; s <= 6; ++s) {
    CsAgreementReport r = c_s_agreement(s, 18);
    if (!r.pass || r.verified_max_degree != s)
      return fail("finite-point agreement fails at s = " + std::to_string(s));
  }
  StableModel model = StableModel::free_polynomial(64);
  AjReport agg = abel_jacobi_check(3, model, 20, AjConvention::Aggregate);
  if (!agg.pass)
    return fail("aggregate pairing fails" +
                (agg.first_mismatch ? " at degree " + std::to_string(*agg.first_mismatch)
                                    : std::string()));
  AjReport wm = abel_jacobi_check(3, model, 20, AjConvention::WeightMatched);
  if (wm.pass) return fail("per-weight pairing unexpectedly passes");
  if (wm.diagnosis.empty()) return fail("per-weight pairing fails without a diagnosis");
  return pass();
}

/* 11. CLI output is byte-identical across repeated runs and across thread
 * counts. */
std::optional<std::string> capture(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return std::nullopt;
  return out;
}

Outcome criterion11() {
  if (g_cli.empty()) return fail("path to the CLI binary was not supplied");
  const std::vector<std::string> invocations = {
      "char-table --s 7",
      "a-series --s 4 --variant a --max-degree 16 --invariant",
      "b-series --lambda 2,1 --max-degree 15",
      "b-series --lambda 1,1,1 --max-degree 15 --format csv",
      "sp-dim --g 3 --lambda 2,1",
      "schur-weyl-check --g 5 --s 4",
      "stable --lambda 1,1 --g 20 --policy ivanov --model default --max-degree 12",
      "c-series --variant cprime --max-degree 12 --weight-cap 8",
      "abel-jacobi-check --max-s 3 --max-degree 14",
      "macdonald --g 3 --s 5",
      "oracle-check --s 3 --max-degree 6",
  };
  const std::vector<std::string> prefixes = {"", "OMP_NUM_THREADS=1 ", "OMP_NUM_THREADS=8 "};
  for (const std::string& inv : invocations) {
    std::optional<std::string> reference;
    for (const std::string& prefix : prefixes)
      for (int repeat = 0; repeat < 2; ++repeat) {
        auto out = capture(prefix + g_cli + " " + inv + " 2>/dev/null");
        if (!out) return fail("run failed: " + inv);
        if (!reference) reference = out;
        else if (*out != *reference)
          return fail("outputs differ: " + inv + (prefix.empty() ? "" : " under " + prefix));
      }
  }
  return pass();
}

struct Criterion {
  int id;
  const char* what;
  double limit_seconds;  // 0 = no stated limit
  std::function<Outcome()> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "two-slot column module equals its two-piece closed form through degree 30", 1.0,
       criterion01},
      {2, "three-slot column module equals its three-piece closed form through degree 25, "
          "with a one-dimensional degree-1 piece", 5.0, criterion02},
      {3, "one-row modules equal the shifted free closed form through degree 40 for s <= 5",
       60.0, criterion03},
      {4, "degree-1 coefficient vanishes for every shape of size <= 6 except (1,1,1)", 600.0,
       criterion04},
      {5, "explicit bases reproduce the character pipeline for s <= 5 on windows [-s, 20-s]",
       600.0, criterion05},
      {6, "tensor decomposition totals match the matching count for s <= 6, g in [s, s+3]", 0,
       criterion06},
      {7, "character tables through s = 10 satisfy orthogonality and the square-sum identity",
       60.0, criterion07},
      {8, "symmetric-power Betti tables match the binomial oracle and duality for g <= 3, s <= 5",
       60.0, criterion08},
      {9, "Molien and direct invariant series agree for all variants, s <= 8, degrees <= 24", 0,
       criterion09},
      {10, "limit algebra matches finite point counts for s <= 6; degree-1 pairing passes "
           "aggregate and diagnoses per-weight", 0, criterion10},
      {11, "CLI output is byte-identical across runs and thread counts", 0, criterion11},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_seconds <= 0 || elapsed < c.limit_seconds;
    const bool ok = o.pass && in_time;
    if (!ok) ++failures;

    std::printf("%s criterion-%02d: %s [%.2f s", ok ? "PASS" : "FAIL", c.id, c.what, elapsed);
    if (c.limit_seconds > 0) std::printf(", limit %.0f s", c.limit_seconds);
    std::printf("]");
    if (!o.pass) std::printf(" - %s", o.detail.c_str());
    else if (!in_time) std::printf(" - time limit exceeded");
    std::printf("\n");
    std::fflush(stdout);
  }

  std::printf("%d/11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
