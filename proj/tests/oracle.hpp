#pragma once

// Reference computations used only by the tests. They rely on Boost's
// double-exponential quadrature and on brute-force sums, independent of the
// library's own Gauss-Kronrod integrator and order-statistic formulas.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

inline double integrate(const std::function<double(double)>& f, double a, double b) {
    boost::math::quadrature::tanh_sinh<double> q;
    return q.integrate(f, a, b, 1e-13);
}

inline double integrate_to_inf(const std::function<double(double)>& f, double a) {
    boost::math::quadrature::exp_sinh<double> q;
    return q.integrate(f, a, std::numeric_limits<double>::infinity(), 1e-13);
}

inline double pairwise_min(const std::vector<double>& x, double m) {
    const double n = static_cast<double>(x.size());
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) s += std::pow(std::min(x[i], x[j]), m + 1.0);
    return -s / (n * (n - 1.0) * (m + 1.0));
}

inline double pairwise_max(const std::vector<double>& x, double m) {
    const double n = static_cast<double>(x.size());
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) s += std::pow(std::max(x[i], x[j]), m + 1.0);
    return s / (n * (n - 1.0) * (m + 1.0));
}

inline double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double sd(const std::vector<double>& v) {
    const double mu = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - mu) * (x - mu);
    return std::sqrt(s / (static_cast<double>(v.size()) - 1.0));
}

/// Anderson-Darling A² against N(mean, sd) with estimated parameters, with the
/// small-sample adjustment A*² = A²(1 + 0.75/n + 2.25/n²). The 1% critical value is 1.035.
inline double anderson_darling(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const double mu = mean(v), s = sd(v);
    const double n = static_cast<double>(v.size());
    double a = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double zi = 0.5 * std::erfc(-(v[i] - mu) / s / std::sqrt(2.0));
        const double zj = 0.5 * std::erfc(-(v[v.size() - 1 - i] - mu) / s / std::sqrt(2.0));
        a += (2.0 * static_cast<double>(i + 1) - 1.0) * (std::log(zi) + std::log1p(-zj));
    }
    const double a2 = -n - a / n;
    return a2 * (1.0 + 0.75 / n + 2.25 / (n * n));
}

}  // namespace oracle

namespace oracle {

/// Brute-force IPCW pair sum with a known censoring survival K (evaluated at y-).
/// Records are (time, event) pairs; `use_min` selects the min or max kernel.
template <class Records, class Survival>
double ipcw_pairwise(const Records& recs, Survival K, double m, bool use_min) {
    const double n = static_cast<double>(recs.size());
    std::vector<std::pair<double, double>> obs;
    for (const auto& r : recs)
        if (r.event) obs.emplace_back(r.time, 1.0 / K(r.time));
    double s = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i)
        for (std::size_t j = i + 1; j < obs.size(); ++j) {
            const double k = use_min ? std::min(obs[i].first, obs[j].first) : std::max(obs[i].first, obs[j].first);
            s += std::pow(k, m + 1.0) * obs[i].second * obs[j].second;
        }
    return (use_min ? -s : s) / (n * (n - 1.0) * (m + 1.0));
}

}  // namespace oracle
