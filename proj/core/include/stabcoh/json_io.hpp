#pragma once

#include <nlohmann/json.hpp>

#include "stabcoh/combinat.hpp"
#include "stabcoh/series.hpp"

namespace stabcoh {

using Json = nlohmann::ordered_json;

/* JSON number when the value fits in 64 bits, decimal string otherwise. */
Json int_to_json(const Int& value);
Int int_from_json(const nlohmann::json& j);

/* {"min_deg": m, "max_deg": M, "coefficients": [[deg, value], ...]} with
 * degrees ascending and zero coefficients omitted.  Coefficients must be
 * integral. */
Json series_to_json(const LaurentWindow& w, const char* context = "series_to_json");

/* Parses the same schema into an exact polynomial window. */
LaurentWindow series_from_json(const nlohmann::json& j);

Json partition_to_json(const NumericalPartition& p);

}  // namespace stabcoh
