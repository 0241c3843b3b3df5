#pragma once

#include <optional>
#include <string>
#include <vector>

namespace extropy {

/// Complete (uncensored) nonnegative observations.
class CompleteSample {
public:
    explicit CompleteSample(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    std::vector<double> sorted() const;

private:
    std::vector<double> values_;
};

struct EstimateResult {
    double point = 0.0;
    std::optional<double> variance;
    std::optional<double> ci_low;
    std::optional<double> ci_high;
    double level = 0.95;
    std::size_t n = 0;
    double m = 0.0;
    std::string method;
    std::vector<std::string> warnings;
};

/// Two-sided standard normal critical value for the given confidence level.
double normal_critical_value(double level);

/// U-statistic estimator of the weighted cumulative residual extropy (order-statistic form).
/// Attaches a normal-theory CI when n >= 3.
EstimateResult t1m(const CompleteSample& sample, double m, double level = 0.95);
/// U-statistic estimator of the weighted negative cumulative extropy.
EstimateResult t2m(const CompleteSample& sample, double m, double level = 0.95);

/// Plug-in estimate of Var(T1,m) from the Hoeffding projection (n >= 3).
double t1m_variance(const CompleteSample& sample, double m);
/// Plug-in estimate of Var(T2,m).
double t2m_variance(const CompleteSample& sample, double m);

}  // namespace extropy
