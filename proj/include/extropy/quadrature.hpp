#pragma once

#include <functional>
#include <span>

namespace extropy::quad {

struct Options {
    double abs_tol = 1e-11;
    double rel_tol = 1e-12;
    int max_intervals = 5000;
};

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
    bool converged = true;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature over [a, b]. The
/// integrand is never evaluated at the endpoints, so integrable endpoint
/// singularities are allowed.
Result integrate(const Integrand& f, double a, double b, const Options& opts = {});

/// Same, over consecutive segments of a sorted point list (kinks of the
/// integrand should be listed so that no panel straddles one).
Result integrate(const Integrand& f, std::span<const double> points, const Options& opts = {});

/// Integral over [a, +inf) through x = a + t / (1 - t).
Result integrate_to_infinity(const Integrand& f, double a, const Options& opts = {});

}  // namespace extropy::quad
