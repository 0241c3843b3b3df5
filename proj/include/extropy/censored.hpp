#pragma once

#include <cstdint>
#include <vector>

#include "extropy/estimators.hpp"

namespace extropy {

struct CensoredRecord {
    double time;  // min(X, C)
    bool event;   // true when X <= C (lifetime observed)
};

class CensoredSample {
public:
    explicit CensoredSample(std::vector<CensoredRecord> records);

    const std::vector<CensoredRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    std::size_t events() const;

private:
    std::vector<CensoredRecord> records_;
};

/// Right-continuous step function starting at 1.
class KaplanMeierCurve {
public:
    KaplanMeierCurve() = default;
    KaplanMeierCurve(std::vector<double> times, std::vector<double> values);

    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& values() const { return values_; }

    double at(double t) const;
    /// Value just before t (product over jumps strictly before t).
    double left_limit(double t) const;

private:
    std::vector<double> times_;
    std::vector<double> values_;
};

/// Product-limit estimate of the censoring survival function K, with censoring
/// (event == false) playing the role of the event. At tied times observed
/// lifetimes leave the risk set before the censorings are counted.
KaplanMeierCurve km_censoring(const CensoredSample& sample);

/// IPCW U-statistic for the weighted cumulative residual extropy.
EstimateResult t1cm(const CensoredSample& sample, double m);
/// IPCW U-statistic for the weighted negative cumulative extropy.
EstimateResult t2cm(const CensoredSample& sample, double m);

enum class CensoredEstimator { T1c, T2c };

/// Percentile bootstrap over (time, event) pairs. Deterministic per seed and
/// independent of evaluation order.
EstimateResult bootstrap_ci(const CensoredSample& sample, double m, CensoredEstimator which, std::size_t replicates,
                            double level, std::uint64_t seed);

}  // namespace extropy
