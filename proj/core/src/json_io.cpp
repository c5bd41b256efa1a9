#include "stabcoh/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stabcoh {

Json int_to_json(const Int& value) {
  static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
  static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
  if (value >= lo && value <= hi) return Json(value.convert_to<std::int64_t>());
  return Json(value.str());
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("int_from_json: expected an integer or a decimal string");
}

Json series_to_json(const LaurentWindow& w, const char* context) {
  w.assert_integral(context);
  Json coeffs = Json::array();
  for (const auto& [deg, value] : w.nonzero_coefficients())
    coeffs.push_back(Json::array({deg, int_to_json(numerator(value))}));
  Json out;
  out["min_deg"] = w.min_deg();
  out["max_deg"] = w.max_deg();
  out["coefficients"] = std::move(coeffs);
  return out;
}

LaurentWindow series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array())
    throw std::invalid_argument("series_from_json: expected an object with a \"coefficients\" array");

  std::vector<std::pair<int, Int>> entries;
  for (const auto& item : j["coefficients"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer())
      throw std::invalid_argument("series_from_json: coefficients must be [degree, value] pairs");
    entries.emplace_back(item[0].get<int>(), int_from_json(item[1]));
  }

  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto& [deg, value] : entries) {
    lo = std::min(lo, deg);
    hi = std::max(hi, deg);
    (void)value;
  }
  if (entries.empty()) {
    lo = j.contains("min_deg") ? j["min_deg"].get<int>() : 0;
    hi = lo - 1;
  }
  if (j.contains("min_deg")) {
    const int declared = j["min_deg"].get<int>();
    if (declared > lo) throw std::invalid_argument("series_from_json: coefficient degree below min_deg");
    lo = declared;
  }
  if (j.contains("max_deg")) {
    const int declared = j["max_deg"].get<int>();
    if (declared < hi) throw std::invalid_argument("series_from_json: coefficient degree above max_deg");
    hi = declared;
  }

  LaurentWindow out(lo, std::max(hi, lo - 1), true);
  for (const auto& [deg, value] : entries) out.add_coeff(deg, Rat(value));
  return out;
}

Json partition_to_json(const NumericalPartition& p) {
  Json arr = Json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

}  // namespace stabcoh
