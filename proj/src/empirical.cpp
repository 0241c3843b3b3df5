#include "extropy/empirical.hpp"

#include <algorithm>
#include <cmath>

#include "extropy/error.hpp"

namespace extropy {
namespace {

std::vector<double> sorted_checked(const CompleteSample& s) {
    if (s.size() < 2)
        throw InsufficientData("need at least 2 observations, got " + std::to_string(s.size()));
    return s.sorted();
}

EstimateResult make_result(double point, std::size_t n, double m, const char* method) {
    EstimateResult r;
    r.point = point;
    r.n = n;
    r.m = m;
    r.method = method;
    return r;
}

}  // namespace

EstimateResult wncj_empirical_step(const CompleteSample& sample) {
    const std::vector<double> x = sorted_checked(sample);
    const std::size_t n = x.size();
    const double nd = static_cast<double>(n);
    double sum = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double p = static_cast<double>(i) / nd;
        sum += (x[i] * x[i] - x[i - 1] * x[i - 1]) * (1.0 - p * p);
    }
    return make_result(0.25 * sum, n, 1.0, "wncj-step");
}

std::size_t default_vasicek_window(std::size_t n) {
    const auto w = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
    return 2 * w < n ? w : (n - 1) / 2;
}

EstimateResult wncj_empirical_vasicek(const CompleteSample& sample, std::size_t window) {
    const std::vector<double> x = sorted_checked(sample);
    const std::size_t n = x.size();
    if (window < 1 || 2 * window >= n)
        throw DomainError("window must satisfy 1 <= window < n/2 (n = " + std::to_string(n) + ", window = " +
                          std::to_string(window) + ")");
    const double nd = static_cast<double>(n);
    const double spacing = 2.0 * static_cast<double>(window) / nd;
    double sum = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double hi = x[std::min(i + window, n) - 1];
        const double lo = x[(i > window ? i - window : 1) - 1];
        const double p = static_cast<double>(i) / (nd + 1.0);
        sum += (hi * hi - lo * lo) / spacing * (1.0 - p * p);
    }
    return make_result(sum / (4.0 * nd), n, 1.0, "wncj-vasicek");
}

EstimateResult wncj_empirical_vasicek(const CompleteSample& sample) {
    return wncj_empirical_vasicek(sample, default_vasicek_window(sample.size()));
}

EstimateResult ncj_empirical(const CompleteSample& sample) {
    const std::vector<double> x = sorted_checked(sample);
    const std::size_t n = x.size();
    const double nd = static_cast<double>(n);
    double sum = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double p = static_cast<double>(i) / nd;
        sum += (x[i] - x[i - 1]) * (1.0 - p * p);
    }
    return make_result(0.5 * sum, n, 0.0, "ncj");
}

EstimateResult ncre_empirical(const CompleteSample& sample) {
    const std::vector<double> x = sorted_checked(sample);
    const std::size_t n = x.size();
    const double nd = static_cast<double>(n);
    double sum = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double s = 1.0 - static_cast<double>(i) / nd;
        sum += (x[i] - x[i - 1]) * s * s;
    }
    return make_result(0.5 * sum, n, 0.0, "ncre");
}

}  // namespace extropy
