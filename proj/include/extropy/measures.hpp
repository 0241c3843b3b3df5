#pragma once

#include <string>

#include "extropy/distribution.hpp"

namespace extropy {

/// w(x) in the weighted measures: the power family x^m (m > -1) or w = 1.
class WeightSpec {
public:
    enum class Kind { Power, Identity };

    static WeightSpec power(double m);
    static WeightSpec identity() { return WeightSpec(Kind::Identity, 0.0); }

    Kind kind() const { return kind_; }
    /// Exponent of the equivalent power weight (0 for Identity).
    double exponent() const { return m_; }
    double operator()(double x) const;
    std::string describe() const;

private:
    WeightSpec(Kind kind, double m) : kind_(kind), m_(m) {}
    Kind kind_;
    double m_;
};

struct MeasureValue {
    enum class Method { ClosedForm, Quadrature };

    double value = 0.0;  // may be +inf / -inf
    Method method = Method::ClosedForm;
    double abs_error_bound = 0.0;
    bool divergent = false;
};

std::string to_string(MeasureValue::Method method);

/// Lower end of the integration range. `Support` starts at the left end of the
/// support (the convention behind the closed forms for shifted laws and the
/// zero value for point masses); `Zero` integrates over [0, inf) literally,
/// adding the constant stretch below the support.
enum class Origin { Support, Zero };

struct MeasureOptions {
    Origin origin = Origin::Support;
    /// Skip closed forms; used to cross-check them.
    bool force_quadrature = false;
};

/// -1/2 ∫ w(x) F̄²(x) dx  (≤ 0).
MeasureValue gwcrj(const Distribution& model, const WeightSpec& weight, const MeasureOptions& opts = {});
/// 1/2 ∫ w(x) (1 - F²(x)) dx  (≥ 0).
MeasureValue gwncj(const Distribution& model, const WeightSpec& weight, const MeasureOptions& opts = {});
/// -1/2 ∫ f²(x) dx. Requires a density.
MeasureValue extropy(const Distribution& model);
/// WNCJ of the maximum of n i.i.d. copies, evaluated on the probability scale.
MeasureValue wncj_max_order_stat(const Distribution& model, int n);
/// CRJ = gwcrj with unit weight.
MeasureValue cumulative_residual_extropy(const Distribution& model);
/// CPJ = -1/2 ∫ F²(x) dx over the support; -inf for unbounded support.
MeasureValue cumulative_past_extropy(const Distribution& model);

}  // namespace extropy
