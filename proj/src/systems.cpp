#include "extropy/systems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "extropy/error.hpp"
#include "extropy/format.hpp"

namespace extropy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const quad::Options kQuad{1e-12, 1e-12, 8000};
constexpr int kGrid = 10000;

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double horner(const std::vector<double>& c, double x) {
    // c[k] multiplies x^{k+1}
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc * x;
}

std::vector<double> expand_series(int n) {
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k - 1)] = -binomial(n, k) * ((k % 2) ? -1.0 : 1.0);
    return c;
}

double phi_of_complement(double c) { return 0.5 * c * (2.0 - c); }

}  // namespace

double phi(double u) { return 0.5 * (1.0 - u * u); }

DistortionFunction::DistortionFunction(Kind kind, int arity, std::vector<double> coeffs)
    : kind_(kind), arity_(arity), coeffs_(std::move(coeffs)) {
    // 1 - Σ a_k (1-s)^k expanded in powers of s; the constant term is 1 - Σ a_k = 0.
    const std::size_t n = coeffs_.size();
    s_coeffs_.assign(n, 0.0);
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t j = 1; j <= k; ++j)
            s_coeffs_[j - 1] -= coeffs_[k - 1] * binomial(static_cast<int>(k), static_cast<int>(j)) * ((j % 2) ? -1.0 : 1.0);
    switch (kind_) {
        case Kind::Parallel: tail_order_ = 1; tail_coef_ = arity_; break;
        case Kind::Series: tail_order_ = arity_; tail_coef_ = 1.0; break;
        case Kind::Identity: tail_order_ = 1; tail_coef_ = 1.0; break;
        case Kind::Polynomial: {
            double scale = 0.0;
            for (double a : coeffs_) scale += std::abs(a);
            tail_order_ = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (std::abs(s_coeffs_[j]) > 1e-12 * scale) {
                    tail_order_ = static_cast<int>(j + 1);
                    tail_coef_ = s_coeffs_[j];
                    break;
                }
            }
            if (tail_order_ == 0) throw DomainError("distortion polynomial is constant");
            break;
        }
    }
}

DistortionFunction DistortionFunction::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) throw DomainError("distortion polynomial needs at least one coefficient");
    double sum = 0.0;
    for (double a : coeffs) {
        if (!std::isfinite(a)) throw DomainError("distortion coefficients must be finite");
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw DomainError("distortion coefficients must sum to 1, got " + format_double(sum));
    const int n = static_cast<int>(coeffs.size());
    DistortionFunction q(Kind::Polynomial, n, std::move(coeffs));
    q.validate();
    return q;
}

DistortionFunction DistortionFunction::parallel(int n) {
    if (n < 1) throw DomainError("system size must be >= 1");
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    c.back() = 1.0;
    return DistortionFunction(Kind::Parallel, n, std::move(c));
}

DistortionFunction DistortionFunction::series(int n) {
    if (n < 1) throw DomainError("system size must be >= 1");
    return DistortionFunction(Kind::Series, n, expand_series(n));
}

DistortionFunction DistortionFunction::identity() { return DistortionFunction(Kind::Identity, 1, {1.0}); }

void DistortionFunction::validate() const {
    double prev = (*this)(0.0);
    if (std::abs(prev) > 1e-12) throw DomainError("distortion must satisfy q(0) = 0");
    for (int k = 1; k <= 1000; ++k) {
        const double v = (*this)(k / 1000.0);
        if (v < prev - 1e-12)
            throw DomainError("distortion is not nondecreasing near v = " + format_double(k / 1000.0));
        prev = v;
    }
}

double DistortionFunction::operator()(double v) const {
    switch (kind_) {
        case Kind::Identity: return v;
        case Kind::Parallel: return std::pow(v, arity_);
        case Kind::Series: return -std::expm1(arity_ * std::log1p(-v));
        case Kind::Polynomial: return horner(coeffs_, v);
    }
    return v;
}

double DistortionFunction::complement(double s) const {
    switch (kind_) {
        case Kind::Identity: return s;
        case Kind::Parallel: return -std::expm1(arity_ * std::log1p(-s));
        case Kind::Series: return std::pow(s, arity_);
        case Kind::Polynomial: return horner(s_coeffs_, s);
    }
    return s;
}

std::string DistortionFunction::describe() const {
    switch (kind_) {
        case Kind::Identity: return "identity";
        case Kind::Parallel: return "parallel:" + std::to_string(arity_);
        case Kind::Series: return "series:" + std::to_string(arity_);
        case Kind::Polynomial: break;
    }
    std::string s = "signature:";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s += (i ? "," : "") + format_double(coeffs_[i]);
    return s;
}

std::string to_string(DistortionFunction::Kind kind) {
    switch (kind) {
        case DistortionFunction::Kind::Polynomial: return "polynomial";
        case DistortionFunction::Kind::Parallel: return "parallel";
        case DistortionFunction::Kind::Series: return "series";
        case DistortionFunction::Kind::Identity: return "identity";
    }
    return "?";
}

DistortionFunction q_from_maximal_signature(const std::vector<double>& coeffs) {
    return DistortionFunction::polynomial(coeffs);
}

MeasureValue system_wncj(const Distribution& model, const DistortionFunction& q) {
    if (!model.has_density()) throw DomainError("system WNCJ requires components with a density");
    auto lower = [&](double u) {
        const double x = model.quantile(u);
        const double f = model.pdf(x);
        return f > 0.0 ? x * phi(q(u)) / f : 0.0;
    };
    auto upper = [&](double s) {
        const double x = model.upper_quantile(s);
        const double f = model.pdf(x);
        return f > 0.0 ? x * phi_of_complement(q.complement(s)) / f : 0.0;
    };
    const quad::Result a = quad::integrate(lower, 0.0, 0.5, kQuad);
    const quad::Result b = quad::integrate(upper, 0.0, 0.5, kQuad);
    MeasureValue out;
    out.method = MeasureValue::Method::Quadrature;
    out.value = a.value + b.value;
    out.abs_error_bound = a.abs_error + b.abs_error;
    if (!std::isfinite(out.value)) {
        out.value = kInf;
        out.divergent = true;
    }
    return out;
}

double distortion_integral(const DistortionFunction& q) {
    const quad::Result a = quad::integrate([&](double u) { return phi(q(u)); }, 0.0, 0.5, kQuad);
    const quad::Result b =
        quad::integrate([&](double s) { return phi_of_complement(q.complement(s)); }, 0.0, 0.5, kQuad);
    return a.value + b.value;
}

DensityRatioRange density_ratio_range(const Distribution& model) {
    if (!model.has_density()) throw DomainError("density bounds require a density");
    switch (model.kind()) {
        case Distribution::Kind::Uniform: {
            const auto& l = std::get<UniformLaw>(model.law());
            const double w = l.b - l.a;
            return {1.0 / (w * l.b), l.a > 0.0 ? 1.0 / (w * l.a) : kInf, true};
        }
        case Distribution::Kind::Exponential: return {0.0, kInf, true};
        case Distribution::Kind::Power: {
            // λ x^{λ-2} on (0, 1)
            const double lam = std::get<PowerLaw>(model.law()).exponent;
            if (lam == 2.0) return {2.0, 2.0, true};
            if (lam > 2.0) return {0.0, lam, true};
            return {lam, kInf, true};
        }
        default: break;
    }
    const Support sup = model.support();
    double lo = kInf, hi = 0.0;
    auto visit = [&](double x) {
        if (!(x > 0.0)) {
            hi = kInf;
            return;
        }
        const double r = model.pdf(x) / x;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    };
    for (int k = 1; k <= kGrid; ++k) visit(model.quantile(static_cast<double>(k) / (kGrid + 1)));
    visit(model.quantile(1e-9));
    visit(model.upper_quantile(1e-9));
    if (!std::isfinite(sup.upper)) lo = 0.0;
    if (sup.lower == 0.0 && model.pdf(model.quantile(1e-12)) > 0.0) hi = kInf;
    return {lo, hi, false};
}

DensityBounds system_bounds_density(const Distribution& model, const DistortionFunction& q) {
    DensityBounds out{distortion_integral(q), density_ratio_range(model), std::nullopt, std::nullopt};
    if (std::isfinite(out.ratio.sup_ratio) && out.ratio.sup_ratio > 0.0) out.lower = out.iq / out.ratio.sup_ratio;
    if (out.ratio.inf_ratio > 0.0) out.upper = out.iq / out.ratio.inf_ratio;
    if (!out.lower && !out.upper)
        throw BoundUnavailable("f(x)/x has infimum 0 and supremum +inf on the support of " + model.describe());
    return out;
}

RatioRange phi_ratio_range(const DistortionFunction& q1, const DistortionFunction& q2) {
    // u -> 0: both φ values tend to 1/2.
    double lo = 1.0, hi = 1.0;
    for (int k = 1; k <= kGrid; ++k) {
        const double u = static_cast<double>(k) / (kGrid + 1);
        double r;
        if (u <= 0.5) {
            r = phi(q2(u)) / phi(q1(u));
        } else {
            const double s = 1.0 - u;
            r = phi_of_complement(q2.complement(s)) / phi_of_complement(q1.complement(s));
        }
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    // u -> 1: ratio of the leading terms of 1 - q(1 - s).
    double tail;
    if (q2.tail_order() < q1.tail_order()) tail = kInf;
    else if (q2.tail_order() > q1.tail_order()) tail = 0.0;
    else tail = q2.tail_coefficient() / q1.tail_coefficient();
    return {std::min(lo, tail), std::max(hi, tail)};
}

SandwichBounds system_bounds_distortion(const Distribution& model, const DistortionFunction& q) {
    const RatioRange r = phi_ratio_range(DistortionFunction::identity(), q);
    const double ref = gwncj(model, WeightSpec::power(1.0)).value;
    return {r.inf, r.sup, ref, r.inf * ref, r.sup * ref};
}

SandwichBounds compare_systems(const Distribution& model, const DistortionFunction& q1, const DistortionFunction& q2) {
    const RatioRange r = phi_ratio_range(q1, q2);
    const double ref = system_wncj(model, q1).value;
    return {r.inf, r.sup, ref, r.inf * ref, r.sup * ref};
}

}  // namespace extropy
