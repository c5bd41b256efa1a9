#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "stabcoh/bigint.hpp"

namespace stabcoh {

/* One-variable Laurent series with an explicit validity window.
 *
 * Coefficients are exact on [min_deg, max_deg] and identically zero below
 * min_deg.  Above max_deg they are unknown, unless the series is flagged
 * exact, in which case it is a Laurent polynomial contained in the window.
 * Every operation computes the largest window on which the result is exact
 * and propagates the flag. */
class LaurentWindow {
 public:
  LaurentWindow() = default;  // exact zero
  LaurentWindow(int min_deg, int max_deg, bool exact = false);
  static LaurentWindow monomial(int deg, const Rat& coeff = Rat(1));
  static LaurentWindow one() { return monomial(0); }
  static LaurentWindow from_coefficients(int min_deg, std::vector<Rat> coeffs, bool exact);

  /* q^shift * prod_l (1 - q^{2l})^{-1}, expanded through max_deg.
   * An empty orbit list yields the exact monomial q^shift. */
  static LaurentWindow geometric_product(int shift, const std::vector<int>& orbit_lengths,
                                         int max_deg);

  int min_deg() const { return min_deg_; }
  int max_deg() const { return max_deg_; }
  bool exact() const { return exact_; }
  bool known_at(int deg) const { return exact_ || deg <= max_deg_; }
  bool is_zero() const;

  Rat coeff(int deg) const;  // throws std::out_of_range beyond a non-exact window
  void set_coeff(int deg, const Rat& value);
  void add_coeff(int deg, const Rat& value);

  LaurentWindow shifted(int offset) const;
  LaurentWindow scaled(const Rat& factor) const;
  LaurentWindow truncated(int new_max) const;  // forget coefficients above new_max

  LaurentWindow operator-() const;
  LaurentWindow& operator+=(const LaurentWindow& other);
  LaurentWindow& operator-=(const LaurentWindow& other);
  LaurentWindow& operator*=(const LaurentWindow& other);
  friend LaurentWindow operator+(LaurentWindow a, const LaurentWindow& b) { return a += b; }
  friend LaurentWindow operator-(LaurentWindow a, const LaurentWindow& b) { return a -= b; }
  friend LaurentWindow operator*(const LaurentWindow& a, const LaurentWindow& b);

  void assert_integral(const char* context) const;
  std::vector<std::pair<int, Rat>> nonzero_coefficients() const;  // ascending degree

 private:
  int min_deg_ = 0;
  int max_deg_ = -1;  // empty storage
  bool exact_ = true;
  std::vector<Rat> coeffs_;  // coeffs_[d - min_deg_] for d in [min_deg_, max_deg_]

  void trim();
};

/* Degrees known exactly on [lo, hi] for both series and all equal there. */
bool agree_on(const LaurentWindow& a, const LaurentWindow& b, int lo, int hi);
/* First degree in [lo, hi] where the series differ, if any. */
std::optional<int> first_difference(const LaurentWindow& a, const LaurentWindow& b, int lo, int hi);

/* Series in q with a second nonnegative grading (point-weight).  Coefficients
 * are exact inside the box degree <= max_deg, weight <= max_weight and
 * truncated outside it; weights are additive under multiplication, so box
 * convolution is exact within the box. */
class BigradedSeries {
 public:
  BigradedSeries(int max_deg, int max_weight);  // zero
  static BigradedSeries one(int max_deg, int max_weight);

  int max_deg() const { return max_deg_; }
  int max_weight() const { return max_weight_; }

  const Rat& coeff(int deg, int weight) const;
  void add_coeff(int deg, int weight, const Rat& value);

  BigradedSeries& operator*=(const BigradedSeries& other);
  friend BigradedSeries operator*(BigradedSeries a, const BigradedSeries& b) { return a *= b; }
  /* Multiply by (1 - q^{deg_step} t^{weight_step})^{-1} in place. */
  void multiply_geometric(int deg_step, int weight_step);

  LaurentWindow weight_slice(int weight) const;     // window [0, max_deg]
  LaurentWindow weight_at_most(int cap) const;      // sum of slices 0..cap
  std::vector<std::tuple<int, int, Rat>> nonzero() const;  // (deg, weight) lexicographic

 private:
  int max_deg_;
  int max_weight_;
  std::vector<Rat> coeffs_;  // (max_deg+1) x (max_weight+1), row-major by degree

  Rat& at(int deg, int weight) { return coeffs_[deg * (max_weight_ + 1) + weight]; }
  const Rat& at(int deg, int weight) const { return coeffs_[deg * (max_weight_ + 1) + weight]; }
};

}  // namespace stabcoh
