#pragma once

#include <string>
#include <vector>

#include "extropy/distribution.hpp"
#include "extropy/quadrature.hpp"

namespace extropy {

struct BoundReport {
    enum class Relation { GreaterEqual, LessEqual, Equal };

    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    Relation relation = Relation::GreaterEqual;
    bool satisfied = false;
    /// lhs - rhs for >= and identities, rhs - lhs for <=.
    double slack = 0.0;
    /// Model lies outside the hypothesis of the inequality (reported, not judged).
    bool excluded = false;
    /// Informational check whose failure is expected for some models.
    bool diagnostic = false;
    std::string note;
};

std::string to_string(BoundReport::Relation relation);

/// Tolerances used to judge reports.
inline constexpr double kInequalityTolerance = 1e-9;
inline constexpr double kIdentityTolerance = 1e-7;

/// WNCJ >= C* exp(2 J) with C* = exp(E log(X (1 - F²(X)))) / 2.
BoundReport bound_logsum(const Distribution& model);

/// WNCJ over [0, inf) >= E(X²)/4.
BoundReport bound_second_moment(const Distribution& model);

/// WNCJ >= a * NCJ for a law supported in [a, inf), 0 <= a <= left support end.
BoundReport bound_support_shift(const Distribution& model, double a);

/// Mean inactivity time E(t - X | X <= t).
double mit(const Distribution& model, double t, const quad::Options& opts = {});
/// Second moment of the inactivity time E((t - X)² | X <= t).
double smit(const Distribution& model, double t, const quad::Options& opts = {});

/// WNCJ over [0, inf) = 1/2 [E(X²)/2 + E(X F(X) MIT(X)) - 1/2 E(F(X) SMIT(X))],
/// evaluated by nested quadrature with tolerance `opts`.
BoundReport identity_mit_smit(const Distribution& model, const quad::Options& opts = {1e-12, 1e-12, 8000});

/// ∫_0^x h(v) dv by quadrature of the hazard.
double cumulative_hazard_integral(const Distribution& model, double x);

/// S(t) = ∫_0^t x (-log F̄(x)) dx.
double hazard_moment(const Distribution& model, double t);

/// WNCJ over [0, inf) <= 1/2 [E(X²) + E(S(X))].
BoundReport bound_hazard(const Distribution& model);

/// The reversed statement WNCJ >= E(S(X)); evaluated for information only.
BoundReport hazard_statement_diagnostic(const Distribution& model);

/// Every check above for one model (support shift with a = left support end).
std::vector<BoundReport> run_bounds(const Distribution& model);

}  // namespace extropy
