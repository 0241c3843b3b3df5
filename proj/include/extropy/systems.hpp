#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extropy/distribution.hpp"
#include "extropy/measures.hpp"

namespace extropy {

/// Distortion q with F_T = q(F_X) for a coherent system of i.d. components.
class DistortionFunction {
public:
    enum class Kind { Polynomial, Parallel, Series, Identity };

    /// q(v) = Σ_k a_k v^k with coeffs = (a_1, ..., a_n).
    static DistortionFunction polynomial(std::vector<double> coeffs);
    /// Maximum of n components: q(v) = v^n.
    static DistortionFunction parallel(int n);
    /// Minimum of n components: q(v) = 1 - (1 - v)^n.
    static DistortionFunction series(int n);
    static DistortionFunction identity();

    Kind kind() const { return kind_; }
    int arity() const { return arity_; }
    /// Coefficients of v^1..v^n (expanded for the named structures).
    const std::vector<double>& coefficients() const { return coeffs_; }

    double operator()(double v) const;
    /// 1 - q(1 - s), accurate for small s.
    double complement(double s) const;
    /// 1 - q(1 - s) ~ tail_coefficient * s^tail_order as s -> 0.
    int tail_order() const { return tail_order_; }
    double tail_coefficient() const { return tail_coef_; }

    std::string describe() const;

private:
    DistortionFunction(Kind kind, int arity, std::vector<double> coeffs);
    void validate() const;

    Kind kind_;
    int arity_;
    std::vector<double> coeffs_;     // in v
    std::vector<double> s_coeffs_;   // of 1 - q(1 - s) in s, index 0 = s^1
    int tail_order_ = 1;
    double tail_coef_ = 1.0;
};

/// Coefficients of the maximal signature, listed from v^1 upward.
DistortionFunction q_from_maximal_signature(const std::vector<double>& coeffs);

/// φ(u) = (1 - u²)/2.
double phi(double u);

/// WNCJ of the system lifetime: ∫_0^1 F^{-1}(v) φ(q(v)) / f(F^{-1}(v)) dv.
MeasureValue system_wncj(const Distribution& model, const DistortionFunction& q);

/// Iq = ∫_0^1 φ(q(u)) du.
double distortion_integral(const DistortionFunction& q);

struct DensityRatioRange {
    double inf_ratio;  // m' = inf f(x)/x over the support
    double sup_ratio;  // M' = sup f(x)/x
    bool exact;        // false when obtained by scanning a quantile grid
};

/// Range of f(x)/x over the support: analytic for the parametric laws, a
/// quantile-grid scan for composite ones.
DensityRatioRange density_ratio_range(const Distribution& model);

struct DensityBounds {
    double iq;
    DensityRatioRange ratio;
    std::optional<double> lower;  // Iq / M', absent when M' is infinite
    std::optional<double> upper;  // Iq / m', absent when m' is zero
};

/// Iq/M' <= WNCJ(T) <= Iq/m'. Throws BoundUnavailable when neither side exists.
DensityBounds system_bounds_density(const Distribution& model, const DistortionFunction& q);

struct RatioRange {
    double inf;  // may be 0
    double sup;  // may be +inf
};

/// inf/sup of φ(q2(u))/φ(q1(u)) over 10^4 interior grid points and the limits at u -> 0, 1.
RatioRange phi_ratio_range(const DistortionFunction& q1, const DistortionFunction& q2);

struct SandwichBounds {
    double c_low;      // B1 or D1
    double c_high;     // B2 or D2
    double reference;  // WNCJ of the component (B) or of the first system (D)
    double lower;      // c_low * reference
    double upper;      // c_high * reference
};

/// B1 WNCJ(X) <= WNCJ(T) <= B2 WNCJ(X).
SandwichBounds system_bounds_distortion(const Distribution& model, const DistortionFunction& q);

/// D1 WNCJ(T1) <= WNCJ(T2) <= D2 WNCJ(T1).
SandwichBounds compare_systems(const Distribution& model, const DistortionFunction& q1, const DistortionFunction& q2);

std::string to_string(DistortionFunction::Kind kind);

}  // namespace extropy
