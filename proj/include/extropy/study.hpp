#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "extropy/distribution.hpp"

namespace extropy {

inline constexpr int kSchemaVersion = 1;

/// Invalid study configuration or report document.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct StudyConfig {
    int schema_version = kSchemaVersion;
    std::string scenario;
    std::string model_spec;
    double m = 1.0;  // weight exponent for t1m/t2m/t1cm/t2cm
    std::vector<std::string> estimators;
    std::vector<std::size_t> n_grid;
    std::size_t replications = 0;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> censoring_spec;
    double level = 0.95;
    std::size_t bootstrap = 0;  // percentile-bootstrap replicates for censored estimators; 0 = no CI
    std::string output;         // empty: standard output
};

/// Parses and validates a configuration document. Model specs are checked here.
StudyConfig parse_study_config(const nlohmann::json& doc);
nlohmann::json to_json(const StudyConfig& config);

struct StudyRow {
    std::size_t n = 0;
    std::string estimator;
    std::size_t replications = 0;
    std::size_t failures = 0;  // replications where the estimator raised
    double mean = 0.0;
    double sd = 0.0;
    double se = 0.0;
    std::optional<double> truth;
    std::optional<double> bias;
    std::optional<double> coverage;
    std::size_t coverage_replications = 0;
};

struct StudyReport {
    int schema_version = kSchemaVersion;
    StudyConfig config;
    std::vector<StudyRow> rows;
};

/// Runs every (n, estimator) cell. Replication r at grid index k draws from
/// the stream (seed, k * 2^32 + r), so reports do not depend on `workers`.
StudyReport run_study(const StudyConfig& config, unsigned workers = 1);

/// Closed-form or quadrature value the estimator targets; empty when infinite.
std::optional<double> estimator_truth(const std::string& estimator, const Distribution& model, double m);

const std::vector<std::string>& known_estimators();
bool is_censored_estimator(const std::string& name);

nlohmann::json to_json(const StudyReport& report);
StudyReport report_from_json(const nlohmann::json& doc);
std::string report_to_csv(const StudyReport& report);

}  // namespace extropy
