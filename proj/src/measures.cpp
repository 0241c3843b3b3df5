#include "extropy/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "extropy/error.hpp"
#include "extropy/format.hpp"

namespace extropy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Truncation points quantile(1 - 10^-k), k = kFirstCut..kLastCut.
constexpr int kFirstCut = 6;
constexpr int kLastCut = 12;
constexpr double kDivergenceRatio = 1.05;

const quad::Options kQuad{1e-12, 1e-12, 8000};

// Functional of the distribution evaluated at x, given (F(x), F̄(x)).
using Shape = double (*)(double cdf, double surv);

double shape_surv_sq(double, double s) { return s * s; }
double shape_one_minus_cdf_sq(double f, double s) { return s * (1.0 + f); }
double shape_cdf_sq(double f, double) { return f * f; }

std::vector<double> segment(const std::vector<double>& bps, double lo, double hi) {
    std::vector<double> pts{lo};
    for (double b : bps)
        if (b > lo && b < hi) pts.push_back(b);
    pts.push_back(hi);
    return pts;
}

// ∫_{lower}^{upper} w(x) shape(F, F̄) dx over the support, with truncation and
// divergence detection for unbounded supports.
MeasureValue integrate_support(const Distribution& model, const WeightSpec& weight, Shape shape) {
    const Support sup = model.support();
    const auto bps = model.breakpoints();
    auto integrand = [&](double x) {
        const double s = model.survival(x);
        const double f = 1.0 - s;
        const double v = shape(f, s);
        return v == 0.0 ? 0.0 : weight(x) * v;
    };

    MeasureValue out;
    out.method = MeasureValue::Method::Quadrature;
    if (!(sup.upper > sup.lower)) return out;

    if (std::isfinite(sup.upper)) {
        const auto pts = segment(bps, sup.lower, sup.upper);
        const quad::Result r = quad::integrate(integrand, pts, kQuad);
        out.value = r.value;
        out.abs_error_bound = r.abs_error;
        return out;
    }

    std::vector<double> cuts;
    for (int k = kFirstCut; k <= kLastCut; ++k) cuts.push_back(model.upper_quantile(std::pow(10.0, -k)));

    double err = 0.0;
    const quad::Result head = quad::integrate(integrand, segment(bps, sup.lower, cuts.front()), kQuad);
    err += head.abs_error;
    std::vector<double> partial{head.value};
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const quad::Result piece = quad::integrate(integrand, segment(bps, cuts[k], cuts[k + 1]), kQuad);
        err += piece.abs_error;
        partial.push_back(partial.back() + piece.value);
    }

    bool growing = true;
    for (std::size_t k = 0; k + 1 < partial.size(); ++k) {
        const double prev = std::fabs(partial[k]);
        const double next = std::fabs(partial[k + 1]);
        if (!(prev > 0.0) || next / prev <= kDivergenceRatio) {
            growing = false;
            break;
        }
    }
    if (growing) {
        out.value = kInf;
        out.divergent = true;
        out.abs_error_bound = kInf;
        return out;
    }

    const quad::Result tail = quad::integrate_to_infinity(integrand, cuts.back(), kQuad);
    out.value = partial.back() + tail.value;
    out.abs_error_bound = err + tail.abs_error;
    if (!std::isfinite(out.value)) {
        out.value = kInf;
        out.divergent = true;
    }
    return out;
}

double binomial(int n, int k) {
    double c = 1.0;
    for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return c;
}

bool small_nonneg_integer(double m) { return m >= 0.0 && m <= 40.0 && m == std::floor(m); }

// ∫_a^b x^m kernel((x-a)/(b-a)) dx / (b-a) with kernel moments given by mom(k) = ∫_0^1 t^k kernel(t) dt.
template <class Moment>
double uniform_moment_sum(double a, double b, int m, Moment mom) {
    const double d = b - a;
    double sum = 0.0;
    for (int k = 0; k <= m; ++k) sum += binomial(m, k) * std::pow(a, m - k) * std::pow(d, k) * mom(k);
    return d * sum;
}

// Σ_{i=1}^{n-1} c_i ∫_{x_i}^{x_{i+1}} x^m dx for the empirical step cdf with value i/n on [x_i, x_{i+1}).
template <class Coef>
double empirical_step_sum(const std::vector<double>& x, double m, Coef coef) {
    const std::size_t n = x.size();
    double sum = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double lo = x[i - 1], hi = x[i];
        if (hi == lo) continue;
        const double seg = (std::pow(hi, m + 1.0) - std::pow(lo, m + 1.0)) / (m + 1.0);
        sum += coef(static_cast<double>(i) / static_cast<double>(n)) * seg;
    }
    return sum;
}

// ∫_0^{lower} w(x) dx: the stretch below the support, where F = 0.
double below_support(const Distribution& model, const WeightSpec& weight) {
    const double l = model.support().lower;
    if (!(l > 0.0)) return 0.0;
    const double m = weight.exponent();
    return std::pow(l, m + 1.0) / (m + 1.0);
}

// Closed form of ∫ w F̄² (residual = true) or ∫ w (1 - F²) over the support, when one exists.
bool closed_form(const Distribution& model, const WeightSpec& weight, bool residual, double& value) {
    const double m = weight.exponent();
    switch (model.kind()) {
        case Distribution::Kind::Exponential: {
            const double lam = std::get<ExponentialLaw>(model.law()).rate;
            const double g = std::tgamma(m + 1.0);
            value = residual ? g / std::pow(2.0 * lam, m + 1.0)
                             : g * (2.0 / std::pow(lam, m + 1.0) - 1.0 / std::pow(2.0 * lam, m + 1.0));
            return true;
        }
        case Distribution::Kind::Power: {
            const double lam = std::get<PowerLaw>(model.law()).exponent;
            value = residual ? 1.0 / (m + 1.0) - 2.0 / (m + lam + 1.0) + 1.0 / (m + 2.0 * lam + 1.0)
                             : 1.0 / (m + 1.0) - 1.0 / (m + 2.0 * lam + 1.0);
            return true;
        }
        case Distribution::Kind::Uniform: {
            if (!small_nonneg_integer(m)) return false;
            const auto& l = std::get<UniformLaw>(model.law());
            if (residual)
                value = uniform_moment_sum(l.a, l.b, static_cast<int>(m),
                                           [](int k) { return 2.0 / ((k + 1.0) * (k + 2.0) * (k + 3.0)); });
            else
                value = uniform_moment_sum(l.a, l.b, static_cast<int>(m),
                                           [](int k) { return 2.0 / ((k + 1.0) * (k + 3.0)); });
            return true;
        }
        case Distribution::Kind::Degenerate:
            value = 0.0;
            return true;
        case Distribution::Kind::Empirical: {
            const auto& x = std::get<std::shared_ptr<const EmpiricalLaw>>(model.law())->sorted;
            if (residual)
                value = empirical_step_sum(x, m, [](double p) { return (1.0 - p) * (1.0 - p); });
            else
                value = empirical_step_sum(x, m, [](double p) { return 1.0 - p * p; });
            return true;
        }
        default:
            return false;
    }
}

MeasureValue half_integral(const Distribution& model, const WeightSpec& weight, const MeasureOptions& opts,
                           bool residual) {
    MeasureValue out;
    double v = 0.0;
    if (!opts.force_quadrature && closed_form(model, weight, residual, v)) {
        out.value = v;
        out.method = MeasureValue::Method::ClosedForm;
    } else {
        out = integrate_support(model, weight, residual ? shape_surv_sq : shape_one_minus_cdf_sq);
    }
    if (opts.origin == Origin::Zero && !out.divergent) out.value += below_support(model, weight);
    out.value *= 0.5;
    out.abs_error_bound *= 0.5;
    return out;
}

}  // namespace

WeightSpec WeightSpec::power(double m) {
    if (!(std::isfinite(m) && m > -1.0)) throw DomainError("weight exponent must satisfy m > -1, got " + format_double(m));
    return WeightSpec(Kind::Power, m);
}

double WeightSpec::operator()(double x) const {
    if (kind_ == Kind::Identity || m_ == 0.0) return 1.0;
    if (m_ == 1.0) return x;
    return std::pow(x, m_);
}

std::string WeightSpec::describe() const {
    return kind_ == Kind::Identity ? "identity" : "pow:" + format_double(m_);
}

std::string to_string(MeasureValue::Method method) {
    return method == MeasureValue::Method::ClosedForm ? "closed-form" : "quadrature";
}

MeasureValue gwcrj(const Distribution& model, const WeightSpec& weight, const MeasureOptions& opts) {
    MeasureValue out = half_integral(model, weight, opts, true);
    out.value = -out.value;
    return out;
}

MeasureValue gwncj(const Distribution& model, const WeightSpec& weight, const MeasureOptions& opts) {
    return half_integral(model, weight, opts, false);
}

MeasureValue cumulative_residual_extropy(const Distribution& model) {
    return gwcrj(model, WeightSpec::identity());
}

MeasureValue cumulative_past_extropy(const Distribution& model) {
    MeasureValue out;
    switch (model.kind()) {
        case Distribution::Kind::Uniform: {
            const auto& l = std::get<UniformLaw>(model.law());
            out.value = -(l.b - l.a) / 6.0;
            return out;
        }
        case Distribution::Kind::Power:
            out.value = -1.0 / (2.0 * (2.0 * std::get<PowerLaw>(model.law()).exponent + 1.0));
            return out;
        case Distribution::Kind::Degenerate:
            out.value = 0.0;
            return out;
        case Distribution::Kind::Empirical: {
            const auto& x = std::get<std::shared_ptr<const EmpiricalLaw>>(model.law())->sorted;
            out.value = -0.5 * empirical_step_sum(x, 0.0, [](double p) { return p * p; });
            return out;
        }
        default:
            break;
    }
    out = integrate_support(model, WeightSpec::identity(), shape_cdf_sq);
    out.value = -0.5 * out.value;
    out.abs_error_bound *= 0.5;
    return out;
}

MeasureValue extropy(const Distribution& model) {
    if (!model.has_density()) throw DomainError("extropy requires a density; " + model.describe() + " has none");
    MeasureValue out;
    switch (model.kind()) {
        case Distribution::Kind::Uniform: {
            const auto& l = std::get<UniformLaw>(model.law());
            out.value = -1.0 / (2.0 * (l.b - l.a));
            return out;
        }
        case Distribution::Kind::Exponential:
            out.value = -std::get<ExponentialLaw>(model.law()).rate / 4.0;
            return out;
        case Distribution::Kind::Power: {
            const double lam = std::get<PowerLaw>(model.law()).exponent;
            out.value = -lam * lam / (2.0 * (2.0 * lam - 1.0));
            return out;
        }
        default:
            break;
    }
    out.method = MeasureValue::Method::Quadrature;
    const Support sup = model.support();
    const auto bps = model.breakpoints();
    auto f2 = [&](double x) {
        const double f = model.pdf(x);
        return f * f;
    };
    quad::Result r;
    if (std::isfinite(sup.upper)) {
        r = quad::integrate(f2, segment(bps, sup.lower, sup.upper), kQuad);
    } else {
        const double cut = model.upper_quantile(1e-6);
        r = quad::integrate(f2, segment(bps, sup.lower, cut), kQuad);
        const quad::Result tail = quad::integrate_to_infinity(f2, cut, kQuad);
        r.value += tail.value;
        r.abs_error += tail.abs_error;
    }
    out.value = -0.5 * r.value;
    out.abs_error_bound = 0.5 * r.abs_error;
    if (!std::isfinite(out.value)) {
        out.value = -kInf;
        out.divergent = true;
    }
    return out;
}

MeasureValue wncj_max_order_stat(const Distribution& model, int n) {
    if (n < 1) throw DomainError("order statistic size must be >= 1");
    if (!model.has_density()) throw DomainError("order-statistic WNCJ requires a density");
    const double two_n = 2.0 * n;
    // (1 - u^{2n}) F^{-1}(u) / f(F^{-1}(u)), split at u = 1/2; the upper half is
    // written in s = 1 - u.
    auto lower = [&](double u) {
        const double x = model.quantile(u);
        const double f = model.pdf(x);
        return f > 0.0 ? (1.0 - std::pow(u, two_n)) * x / f : 0.0;
    };
    auto upper = [&](double s) {
        const double x = model.upper_quantile(s);
        const double f = model.pdf(x);
        return f > 0.0 ? -std::expm1(two_n * std::log1p(-s)) * x / f : 0.0;
    };
    const quad::Result a = quad::integrate(lower, 0.0, 0.5, kQuad);
    const quad::Result b = quad::integrate(upper, 0.0, 0.5, kQuad);
    MeasureValue out;
    out.method = MeasureValue::Method::Quadrature;
    out.value = 0.5 * (a.value + b.value);
    out.abs_error_bound = 0.5 * (a.abs_error + b.abs_error);
    if (!std::isfinite(out.value)) {
        out.value = kInf;
        out.divergent = true;
    }
    return out;
}

}  // namespace extropy
