#pragma once

#include "json.hpp"

#include "extropy/bounds.hpp"
#include "extropy/estimators.hpp"
#include "extropy/measures.hpp"

namespace extropy {

/// JSON forms of the result types. Non-finite numbers are written as the
/// strings "inf", "-inf" and read back.
nlohmann::json to_json(const MeasureValue& v);
MeasureValue measure_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EstimateResult& r);
EstimateResult estimate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundReport& r);
BoundReport bound_from_json(const nlohmann::json& j);

nlohmann::json json_number(double v);
double json_to_double(const nlohmann::json& j);

}  // namespace extropy
