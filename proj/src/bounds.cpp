#include "extropy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "extropy/error.hpp"
#include "extropy/format.hpp"
#include "extropy/measures.hpp"

namespace extropy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const quad::Options kQuad{1e-12, 1e-12, 8000};

BoundReport judge(BoundReport r) {
    switch (r.relation) {
        case BoundReport::Relation::GreaterEqual:
            r.slack = (r.lhs == r.rhs) ? 0.0 : r.lhs - r.rhs;
            r.satisfied = r.slack >= -kInequalityTolerance;
            break;
        case BoundReport::Relation::LessEqual:
            r.slack = (r.lhs == r.rhs) ? 0.0 : r.rhs - r.lhs;
            r.satisfied = r.slack >= -kInequalityTolerance;
            break;
        case BoundReport::Relation::Equal:
            r.slack = r.lhs - r.rhs;
            r.satisfied = std::abs(r.slack) <= kIdentityTolerance;
            break;
    }
    return r;
}

// ∫_lo^hi g over the pieces cut by the model's breakpoints.
double integrate_pieces(const Distribution& model, const quad::Integrand& g, double lo, double hi,
                        const quad::Options& opts) {
    if (!(hi > lo)) return 0.0;
    std::vector<double> pts{lo};
    for (double b : model.breakpoints())
        if (b > lo && b < hi) pts.push_back(b);
    pts.push_back(hi);
    return quad::integrate(g, pts, opts).value;
}

double wncj_from_zero(const Distribution& model) {
    return gwncj(model, WeightSpec::power(1.0), {Origin::Zero, false}).value;
}

double second_moment(const Distribution& model) {
    return model.expectation([](double x) { return x * x; }, kQuad).value;
}

// A(t) = ∫_0^t F, B(t) = ∫_0^t x F(x) dx; F vanishes left of the support.
double cdf_integral(const Distribution& model, double t, bool weighted, const quad::Options& opts) {
    const double lo = model.support().lower;
    return integrate_pieces(
        model, [&](double x) { return (weighted ? x : 1.0) * model.cdf(x); }, lo, t, opts);
}

}  // namespace

std::string to_string(BoundReport::Relation relation) {
    switch (relation) {
        case BoundReport::Relation::GreaterEqual: return ">=";
        case BoundReport::Relation::LessEqual: return "<=";
        case BoundReport::Relation::Equal: return "=";
    }
    return "?";
}

BoundReport bound_logsum(const Distribution& model) {
    BoundReport r;
    r.name = "logsum";
    r.relation = BoundReport::Relation::GreaterEqual;
    r.lhs = gwncj(model, WeightSpec::power(1.0)).value;
    if (!model.has_density()) {
        r.excluded = true;
        r.note = "requires a density";
        r.rhs = 0.0;
        return judge(r);
    }
    // E log(X (1 - F²(X))) on the probability scale.
    auto lower = [&](double u) { return std::log(model.quantile(u)) + std::log1p(-u * u); };
    auto upper = [&](double s) { return std::log(model.upper_quantile(s)) + std::log(s) + std::log(2.0 - s); };
    const double e_log = quad::integrate(lower, 0.0, 0.5, kQuad).value + quad::integrate(upper, 0.0, 0.5, kQuad).value;
    const double j = extropy(model).value;
    if (!std::isfinite(e_log)) {
        r.rhs = 0.0;
        r.note = "E log(X(1-F^2(X))) diverges; bound is vacuous";
        return judge(r);
    }
    const double c_star = 0.5 * std::exp(e_log);
    r.rhs = c_star * std::exp(2.0 * j);
    r.note = "C* = " + format_double(c_star) + ", J = " + format_double(j);
    return judge(r);
}

BoundReport bound_second_moment(const Distribution& model) {
    BoundReport r;
    r.name = "second_moment";
    r.relation = BoundReport::Relation::GreaterEqual;
    r.lhs = wncj_from_zero(model);
    r.rhs = 0.25 * second_moment(model);
    if (!model.has_density()) {
        r.excluded = true;
        r.note = "hypothesis needs a continuous law";
    }
    return judge(r);
}

BoundReport bound_support_shift(const Distribution& model, double a) {
    const Support sup = model.support();
    if (!(std::isfinite(a) && a >= 0.0)) throw DomainError("shift must be finite and >= 0");
    if (a > sup.lower) throw DomainError("support must lie in [a, inf); left end is " + format_double(sup.lower));
    BoundReport r;
    r.name = "support_shift";
    r.relation = BoundReport::Relation::GreaterEqual;
    r.lhs = gwncj(model, WeightSpec::power(1.0)).value;
    const double ncj = gwncj(model, WeightSpec::identity()).value;
    r.rhs = (a == 0.0) ? 0.0 : a * ncj;
    r.note = "a = " + format_double(a);
    return judge(r);
}

double mit(const Distribution& model, double t, const quad::Options& opts) {
    const double f = model.cdf(t);
    if (!(f > 0.0)) return 0.0;
    return cdf_integral(model, t, false, opts) / f;
}

double smit(const Distribution& model, double t, const quad::Options& opts) {
    const double f = model.cdf(t);
    if (!(f > 0.0)) return 0.0;
    return 2.0 * t * mit(model, t, opts) - 2.0 * cdf_integral(model, t, true, opts) / f;
}

BoundReport identity_mit_smit(const Distribution& model, const quad::Options& opts) {
    BoundReport r;
    r.name = "mit_smit_identity";
    r.relation = BoundReport::Relation::Equal;
    r.lhs = wncj_from_zero(model);
    const double ex2 = model.expectation([](double x) { return x * x; }, opts).value;
    // X F(X) MIT(X) = X A(X) and F(X) SMIT(X) = 2 X A(X) - 2 B(X).
    const double e_mit = model.expectation([&](double x) { return x * mit(model, x, opts) * model.cdf(x); }, opts).value;
    const double e_smit = model.expectation([&](double x) { return smit(model, x, opts) * model.cdf(x); }, opts).value;
    r.rhs = 0.5 * (0.5 * ex2 + e_mit - 0.5 * e_smit);
    const double printed = 0.5 * (ex2 + e_mit - 0.5 * e_smit);
    r.note = "with E(X^2) in place of E(X^2)/2 the right side is " + format_double(printed);
    return judge(r);
}

double cumulative_hazard_integral(const Distribution& model, double x) {
    const double lo = model.support().lower;
    return integrate_pieces(model, [&](double v) { return model.hazard(v); }, lo, x, kQuad);
}

double hazard_moment(const Distribution& model, double t) {
    const double lo = model.support().lower;
    return integrate_pieces(model, [&](double x) { return -x * std::log(model.survival(x)); }, lo, t, kQuad);
}

BoundReport bound_hazard(const Distribution& model) {
    BoundReport r;
    r.name = "hazard";
    r.relation = BoundReport::Relation::LessEqual;
    r.lhs = wncj_from_zero(model);
    if (!model.has_density()) {
        r.excluded = true;
        r.note = "requires a hazard rate";
        r.rhs = kInf;
        return judge(r);
    }
    const double es = model.expectation([&](double x) { return hazard_moment(model, x); }, kQuad).value;
    r.rhs = 0.5 * (second_moment(model) + es);
    r.note = "E S(X) = " + format_double(es);
    return judge(r);
}

BoundReport hazard_statement_diagnostic(const Distribution& model) {
    BoundReport r;
    r.name = "hazard_reversed";
    r.relation = BoundReport::Relation::GreaterEqual;
    r.diagnostic = true;
    r.lhs = wncj_from_zero(model);
    if (!model.has_density()) {
        r.excluded = true;
        r.note = "requires a hazard rate";
        return judge(r);
    }
    r.rhs = model.expectation([&](double x) { return hazard_moment(model, x); }, kQuad).value;
    BoundReport out = judge(r);
    out.note = out.satisfied ? "holds for this model" : "refuted for this model";
    return out;
}

std::vector<BoundReport> run_bounds(const Distribution& model) {
    std::vector<BoundReport> out;
    out.push_back(bound_logsum(model));
    out.push_back(bound_second_moment(model));
    out.push_back(bound_support_shift(model, model.support().lower));
    out.push_back(identity_mit_smit(model));
    out.push_back(bound_hazard(model));
    out.push_back(hazard_statement_diagnostic(model));
    return out;
}

}  // namespace extropy
