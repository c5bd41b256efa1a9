#include "stabcoh/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stabcoh {

namespace {

constexpr int kDegreeGuard = 1 << 20;

void check_degree(long long deg, const char* what) {
  if (deg > kDegreeGuard || deg < -kDegreeGuard)
    throw std::out_of_range(std::string(what) + ": degree out of supported range");
}

}  // namespace

LaurentWindow::LaurentWindow(int min_deg, int max_deg, bool exact)
    : min_deg_(min_deg), max_deg_(std::max(max_deg, min_deg - 1)), exact_(exact) {
  check_degree(min_deg, "LaurentWindow");
  check_degree(max_deg, "LaurentWindow");
  coeffs_.assign(static_cast<std::size_t>(max_deg_ - min_deg_ + 1), Rat(0));
}

LaurentWindow LaurentWindow::monomial(int deg, const Rat& coeff) {
  if (coeff == 0) return LaurentWindow();
  LaurentWindow w(deg, deg, true);
  w.coeffs_[0] = coeff;
  return w;
}

LaurentWindow LaurentWindow::from_coefficients(int min_deg, std::vector<Rat> coeffs, bool exact) {
  LaurentWindow w;
  w.min_deg_ = min_deg;
  w.max_deg_ = min_deg + static_cast<int>(coeffs.size()) - 1;
  w.exact_ = exact;
  w.coeffs_ = std::move(coeffs);
  check_degree(w.max_deg_, "from_coefficients");
  w.trim();
  return w;
}

void LaurentWindow::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_deg_ += static_cast<int>(lead);
  }
  if (exact_) {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
      coeffs_.pop_back();
      --max_deg_;
    }
    if (coeffs_.empty()) {  // canonical exact zero
      min_deg_ = 0;
      max_deg_ = -1;
    }
  }
  if (!exact_ && coeffs_.empty()) min_deg_ = max_deg_ + 1;
}

bool LaurentWindow::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

Rat LaurentWindow::coeff(int deg) const {
  if (deg < min_deg_) return Rat(0);
  if (deg > max_deg_) {
    if (exact_) return Rat(0);
    throw std::out_of_range("LaurentWindow::coeff: degree " + std::to_string(deg) +
                            " beyond known window [" + std::to_string(min_deg_) + ", " +
                            std::to_string(max_deg_) + "]");
  }
  return coeffs_[static_cast<std::size_t>(deg - min_deg_)];
}

void LaurentWindow::set_coeff(int deg, const Rat& value) {
  if (deg < min_deg_ || deg > max_deg_)
    throw std::out_of_range("LaurentWindow::set_coeff: degree outside window");
  coeffs_[static_cast<std::size_t>(deg - min_deg_)] = value;
}

void LaurentWindow::add_coeff(int deg, const Rat& value) {
  if (deg < min_deg_ || deg > max_deg_)
    throw std::out_of_range("LaurentWindow::add_coeff: degree outside window");
  coeffs_[static_cast<std::size_t>(deg - min_deg_)] += value;
}

LaurentWindow LaurentWindow::shifted(int offset) const {
  LaurentWindow w = *this;
  check_degree(static_cast<long long>(w.min_deg_) + offset, "shifted");
  check_degree(static_cast<long long>(w.max_deg_) + offset, "shifted");
  w.min_deg_ += offset;
  w.max_deg_ += offset;
  return w;
}

LaurentWindow LaurentWindow::scaled(const Rat& factor) const {
  if (factor == 0) return LaurentWindow();
  LaurentWindow w = *this;
  for (Rat& c : w.coeffs_) c *= factor;
  return w;
}

LaurentWindow LaurentWindow::truncated(int new_max) const {
  if (exact_ && new_max >= max_deg_) return *this;
  if (!exact_ && new_max > max_deg_)
    throw std::out_of_range("LaurentWindow::truncated: window only known through degree " +
                            std::to_string(max_deg_));
  LaurentWindow w;
  w.exact_ = false;
  if (new_max < min_deg_) {
    w.min_deg_ = new_max + 1;
    w.max_deg_ = new_max;
    return w;
  }
  w.min_deg_ = min_deg_;
  w.max_deg_ = new_max;
  w.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + (new_max - min_deg_ + 1));
  w.trim();
  return w;
}

LaurentWindow LaurentWindow::operator-() const { return scaled(Rat(-1)); }

LaurentWindow& LaurentWindow::operator+=(const LaurentWindow& other) {
  const LaurentWindow& a = *this;
  const LaurentWindow& b = other;
  int new_min = std::min(a.min_deg_, b.min_deg_);
  bool new_exact = a.exact_ && b.exact_;
  int new_max;
  if (new_exact) {
    new_max = std::max(a.max_deg_, b.max_deg_);
  } else {
    new_max = kDegreeGuard;
    if (!a.exact_) new_max = std::min(new_max, a.max_deg_);
    if (!b.exact_) new_max = std::min(new_max, b.max_deg_);
  }
  LaurentWindow result(new_min, new_max, new_exact);
  for (int d = result.min_deg_; d <= result.max_deg_; ++d)
    result.coeffs_[static_cast<std::size_t>(d - result.min_deg_)] = a.coeff(d) + b.coeff(d);
  result.trim();
  return *this = std::move(result);
}

LaurentWindow& LaurentWindow::operator-=(const LaurentWindow& other) { return *this += -other; }

LaurentWindow operator*(const LaurentWindow& a, const LaurentWindow& b) {
  long long new_min_ll = static_cast<long long>(a.min_deg_) + b.min_deg_;
  check_degree(new_min_ll, "operator*");
  int new_min = static_cast<int>(new_min_ll);
  bool new_exact = a.exact_ && b.exact_;
  long long new_max = static_cast<long long>(kDegreeGuard);
  if (new_exact) {
    new_max = static_cast<long long>(a.max_deg_) + b.max_deg_;
  } else {
    if (!a.exact_) new_max = std::min(new_max, static_cast<long long>(a.max_deg_) + b.min_deg_);
    if (!b.exact_) new_max = std::min(new_max, static_cast<long long>(b.max_deg_) + a.min_deg_);
  }
  new_max = std::max(new_max, static_cast<long long>(new_min) - 1);
  check_degree(new_max, "operator*");
  LaurentWindow result(new_min, static_cast<int>(new_max), new_exact);
  for (int d1 = a.min_deg_; d1 <= a.max_deg_; ++d1) {
    const Rat& c1 = a.coeffs_[static_cast<std::size_t>(d1 - a.min_deg_)];
    if (c1 == 0) continue;
    for (int d2 = b.min_deg_; d2 <= b.max_deg_ && d1 + d2 <= result.max_deg_; ++d2) {
      const Rat& c2 = b.coeffs_[static_cast<std::size_t>(d2 - b.min_deg_)];
      if (c2 == 0) continue;
      result.coeffs_[static_cast<std::size_t>(d1 + d2 - result.min_deg_)] += c1 * c2;
    }
  }
  result.trim();
  return result;
}

LaurentWindow& LaurentWindow::operator*=(const LaurentWindow& other) {
  return *this = *this * other;
}

void LaurentWindow::assert_integral(const char* context) const {
  for (const Rat& c : coeffs_)
    if (boost::multiprecision::denominator(c) != 1)
      throw std::logic_error(std::string(context) + ": non-integral series coefficient");
}

std::vector<std::pair<int, Rat>> LaurentWindow::nonzero_coefficients() const {
  std::vector<std::pair<int, Rat>> out;
  for (int d = min_deg_; d <= max_deg_; ++d) {
    const Rat& c = coeffs_[static_cast<std::size_t>(d - min_deg_)];
    if (c != 0) out.emplace_back(d, c);
  }
  return out;
}

LaurentWindow LaurentWindow::geometric_product(int shift, const std::vector<int>& orbit_lengths,
                                               int max_deg) {
  if (orbit_lengths.empty()) return monomial(shift);
  LaurentWindow w(shift, max_deg, false);
  if (w.coeffs_.empty()) return w;
  w.coeffs_[0] = 1;
  for (int l : orbit_lengths) {
    if (l <= 0) throw std::invalid_argument("geometric_product: orbit length must be positive");
    const std::size_t stride = static_cast<std::size_t>(2 * l);
    for (std::size_t i = stride; i < w.coeffs_.size(); ++i) w.coeffs_[i] += w.coeffs_[i - stride];
  }
  w.trim();
  return w;
}

bool agree_on(const LaurentWindow& a, const LaurentWindow& b, int lo, int hi) {
  return !first_difference(a, b, lo, hi).has_value();
}

std::optional<int> first_difference(const LaurentWindow& a, const LaurentWindow& b, int lo,
                                    int hi) {
  if (!a.known_at(hi) || !b.known_at(hi))
    throw std::logic_error("first_difference: comparison range exceeds a known window");
  for (int d = lo; d <= hi; ++d)
    if (a.coeff(d) != b.coeff(d)) return d;
  return std::nullopt;
}

BigradedSeries::BigradedSeries(int max_deg, int max_weight)
    : max_deg_(max_deg), max_weight_(max_weight) {
  if (max_deg < 0 || max_weight < 0)
    throw std::invalid_argument("BigradedSeries: box bounds must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(max_deg + 1) * (max_weight + 1), Rat(0));
}

BigradedSeries BigradedSeries::one(int max_deg, int max_weight) {
  BigradedSeries s(max_deg, max_weight);
  s.at(0, 0) = 1;
  return s;
}

const Rat& BigradedSeries::coeff(int deg, int weight) const {
  if (deg < 0 || deg > max_deg_ || weight < 0 || weight > max_weight_)
    throw std::out_of_range("BigradedSeries::coeff: outside box");
  return at(deg, weight);
}

void BigradedSeries::add_coeff(int deg, int weight, const Rat& value) {
  if (deg < 0 || deg > max_deg_ || weight < 0 || weight > max_weight_)
    throw std::out_of_range("BigradedSeries::add_coeff: outside box");
  at(deg, weight) += value;
}

BigradedSeries& BigradedSeries::operator*=(const BigradedSeries& other) {
  if (max_deg_ != other.max_deg_ || max_weight_ != other.max_weight_)
    throw std::invalid_argument("BigradedSeries: box mismatch");
  BigradedSeries result(max_deg_, max_weight_);
  for (int d1 = 0; d1 <= max_deg_; ++d1)
    for (int w1 = 0; w1 <= max_weight_; ++w1) {
      const Rat& c1 = at(d1, w1);
      if (c1 == 0) continue;
      for (int d2 = 0; d1 + d2 <= max_deg_; ++d2)
        for (int w2 = 0; w1 + w2 <= max_weight_; ++w2) {
          const Rat& c2 = other.at(d2, w2);
          if (c2 == 0) continue;
          result.at(d1 + d2, w1 + w2) += c1 * c2;
        }
    }
  return *this = std::move(result);
}

void BigradedSeries::multiply_geometric(int deg_step, int weight_step) {
  if (deg_step <= 0 || weight_step < 0)
    throw std::invalid_argument("multiply_geometric: need deg_step >= 1, weight_step >= 0");
  for (int d = deg_step; d <= max_deg_; ++d)
    for (int w = weight_step; w <= max_weight_; ++w) at(d, w) += at(d - deg_step, w - weight_step);
}

LaurentWindow BigradedSeries::weight_slice(int weight) const {
  if (weight < 0 || weight > max_weight_)
    throw std::out_of_range("weight_slice: weight outside box");
  std::vector<Rat> col(static_cast<std::size_t>(max_deg_ + 1));
  for (int d = 0; d <= max_deg_; ++d) col[static_cast<std::size_t>(d)] = at(d, weight);
  return LaurentWindow::from_coefficients(0, std::move(col), false);
}

LaurentWindow BigradedSeries::weight_at_most(int cap) const {
  if (cap < 0 || cap > max_weight_)
    throw std::out_of_range("weight_at_most: cap outside box");
  std::vector<Rat> col(static_cast<std::size_t>(max_deg_ + 1));
  for (int d = 0; d <= max_deg_; ++d)
    for (int w = 0; w <= cap; ++w) col[static_cast<std::size_t>(d)] += at(d, w);
  return LaurentWindow::from_coefficients(0, std::move(col), false);
}

std::vector<std::tuple<int, int, Rat>> BigradedSeries::nonzero() const {
  std::vector<std::tuple<int, int, Rat>> out;
  for (int d = 0; d <= max_deg_; ++d)
    for (int w = 0; w <= max_weight_; ++w)
      if (at(d, w) != 0) out.emplace_back(d, w, at(d, w));
  return out;
}

}  // namespace stabcoh
