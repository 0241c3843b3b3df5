#include "extropy/estimators.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "extropy/error.hpp"
#include "extropy/format.hpp"

namespace extropy {
namespace {

void check_m(double m) {
    if (!(std::isfinite(m) && m > -1.0)) throw DomainError("estimator requires m > -1, got " + format_double(m));
}

void check_n(const CompleteSample& s, std::size_t min_n) {
    if (s.size() < min_n)
        throw InsufficientData("need at least " + std::to_string(min_n) + " observations, got " +
                               std::to_string(s.size()));
}

std::vector<double> powered_sorted(const CompleteSample& s, double m) {
    std::vector<double> x = s.sorted();
    const double p = m + 1.0;
    for (double& v : x) v = (p == 1.0) ? v : std::pow(v, p);
    return x;
}

double sample_variance(const std::vector<double>& g) {
    const double n = static_cast<double>(g.size());
    double mean = 0.0;
    for (double v : g) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : g) ss += (v - mean) * (v - mean);
    return ss / (n - 1.0);
}

// Variance of the projection kernel, rescaled from the kernel U-statistic to the
// estimator (which carries a factor 1/(2(m+1))): Var(T) ~ 4 Var(g) / (n (2(m+1))^2).
double scaled_projection_variance(const std::vector<double>& g, double m) {
    const double n = static_cast<double>(g.size());
    const double c = 2.0 * (m + 1.0);
    return 4.0 * sample_variance(g) / (n * c * c);
}

void attach_ci(EstimateResult& r, double variance) {
    const double z = normal_critical_value(r.level);
    const double half = z * std::sqrt(std::max(0.0, variance));
    r.variance = variance;
    r.ci_low = r.point - half;
    r.ci_high = r.point + half;
}

}  // namespace

CompleteSample::CompleteSample(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_)
        if (!(std::isfinite(v) && v >= 0.0)) throw DomainError("sample values must be finite and >= 0");
}

std::vector<double> CompleteSample::sorted() const {
    std::vector<double> x = values_;
    std::sort(x.begin(), x.end());
    return x;
}

double normal_critical_value(double level) {
    if (!(level > 0.0 && level < 1.0)) throw DomainError("confidence level must lie in (0,1)");
    return boost::math::quantile(boost::math::normal(), 0.5 + 0.5 * level);
}

EstimateResult t1m(const CompleteSample& sample, double m, double level) {
    check_m(m);
    check_n(sample, 2);
    const std::vector<double> x = powered_sorted(sample, m);
    const std::size_t n = x.size();
    double sum = 0.0;
    for (std::size_t i = 1; i < n; ++i) sum += (static_cast<double>(i) - static_cast<double>(n)) * x[i - 1];
    EstimateResult r;
    r.point = sum / (static_cast<double>(n) * (n - 1.0) * (m + 1.0));
    r.n = n;
    r.m = m;
    r.level = level;
    r.method = "t1m";
    if (n >= 3) attach_ci(r, t1m_variance(sample, m));
    return r;
}

EstimateResult t2m(const CompleteSample& sample, double m, double level) {
    check_m(m);
    check_n(sample, 2);
    const std::vector<double> x = powered_sorted(sample, m);
    const std::size_t n = x.size();
    double sum = 0.0;
    for (std::size_t i = 1; i <= n; ++i) sum += (static_cast<double>(i) - 1.0) * x[i - 1];
    EstimateResult r;
    r.point = sum / (static_cast<double>(n) * (n - 1.0) * (m + 1.0));
    r.n = n;
    r.m = m;
    r.level = level;
    r.method = "t2m";
    if (n >= 3) attach_ci(r, t2m_variance(sample, m));
    return r;
}

double t1m_variance(const CompleteSample& sample, double m) {
    check_m(m);
    check_n(sample, 3);
    const std::vector<double> x = powered_sorted(sample, m);
    const std::size_t n = x.size();
    const double nd = static_cast<double>(n);
    // g_i = X_(i)^{m+1} (1 - i/n) + (1/n) Σ_{j<=i} X_(j)^{m+1}
    std::vector<double> g(n);
    double prefix = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        prefix += x[i - 1];
        g[i - 1] = x[i - 1] * (1.0 - static_cast<double>(i) / nd) + prefix / nd;
    }
    return scaled_projection_variance(g, m);
}

double t2m_variance(const CompleteSample& sample, double m) {
    check_m(m);
    check_n(sample, 3);
    const std::vector<double> x = powered_sorted(sample, m);
    const std::size_t n = x.size();
    const double nd = static_cast<double>(n);
    // g_i = X_(i)^{m+1} (i/n) + (1/n) Σ_{j>i} X_(j)^{m+1}
    std::vector<double> g(n);
    double suffix = 0.0;
    for (std::size_t i = n; i >= 1; --i) {
        g[i - 1] = x[i - 1] * (static_cast<double>(i) / nd) + suffix / nd;
        suffix += x[i - 1];
    }
    return scaled_projection_variance(g, m);
}

}  // namespace extropy
