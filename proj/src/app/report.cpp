#include "extropy/report.hpp"

#include <cmath>
#include <limits>

#include "extropy/format.hpp"
#include "extropy/spec.hpp"
#include "extropy/study.hpp"

namespace extropy {

using nlohmann::json;

json json_number(double v) { return std::isfinite(v) ? json(v) : json(format_double(v)); }

double json_to_double(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        return parse_real(s);
    }
    return j.get<double>();
}

json to_json(const MeasureValue& v) {
    return json{{"value", json_number(v.value)},
                {"method", to_string(v.method)},
                {"abs_error_bound", json_number(v.abs_error_bound)},
                {"divergent", v.divergent}};
}

MeasureValue measure_from_json(const json& j) {
    MeasureValue v;
    v.value = json_to_double(j.at("value"));
    const auto m = j.at("method").get<std::string>();
    if (m == to_string(MeasureValue::Method::ClosedForm)) v.method = MeasureValue::Method::ClosedForm;
    else if (m == to_string(MeasureValue::Method::Quadrature)) v.method = MeasureValue::Method::Quadrature;
    else throw ConfigError("unknown method '" + m + "'");
    v.abs_error_bound = json_to_double(j.at("abs_error_bound"));
    v.divergent = j.at("divergent").get<bool>();
    return v;
}

json to_json(const EstimateResult& r) {
    json j{{"point", json_number(r.point)}, {"level", r.level}, {"n", r.n},
           {"m", r.m},                      {"method", r.method}, {"warnings", r.warnings}};
    j["variance"] = r.variance ? json_number(*r.variance) : json(nullptr);
    j["ci_low"] = r.ci_low ? json_number(*r.ci_low) : json(nullptr);
    j["ci_high"] = r.ci_high ? json_number(*r.ci_high) : json(nullptr);
    return j;
}

EstimateResult estimate_from_json(const json& j) {
    EstimateResult r;
    r.point = json_to_double(j.at("point"));
    r.level = j.at("level").get<double>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<double>();
    r.method = j.at("method").get<std::string>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    auto opt = [&](const char* key) -> std::optional<double> {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return json_to_double(j.at(key));
    };
    r.variance = opt("variance");
    r.ci_low = opt("ci_low");
    r.ci_high = opt("ci_high");
    return r;
}

json to_json(const BoundReport& r) {
    return json{{"name", r.name},         {"lhs", json_number(r.lhs)},   {"relation", to_string(r.relation)},
                {"rhs", json_number(r.rhs)}, {"satisfied", r.satisfied}, {"slack", json_number(r.slack)},
                {"excluded", r.excluded}, {"diagnostic", r.diagnostic}, {"note", r.note}};
}

BoundReport bound_from_json(const json& j) {
    BoundReport r;
    r.name = j.at("name").get<std::string>();
    r.lhs = json_to_double(j.at("lhs"));
    r.rhs = json_to_double(j.at("rhs"));
    const auto rel = j.at("relation").get<std::string>();
    if (rel == ">=") r.relation = BoundReport::Relation::GreaterEqual;
    else if (rel == "<=") r.relation = BoundReport::Relation::LessEqual;
    else if (rel == "=") r.relation = BoundReport::Relation::Equal;
    else throw ConfigError("unknown relation '" + rel + "'");
    r.satisfied = j.at("satisfied").get<bool>();
    r.slack = json_to_double(j.at("slack"));
    r.excluded = j.at("excluded").get<bool>();
    r.diagnostic = j.at("diagnostic").get<bool>();
    r.note = j.at("note").get<std::string>();
    return r;
}

}  // namespace extropy
