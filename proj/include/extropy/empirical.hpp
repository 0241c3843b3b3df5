#pragma once

#include <cstddef>

#include "extropy/estimators.hpp"

namespace extropy {

/// Plug-in WNCJ of the empirical cdf: 1/4 Σ (X²_(i+1) − X²_(i)) (1 − (i/n)²).
EstimateResult wncj_empirical_step(const CompleteSample& sample);

/// Spacing (Vasicek-type) WNCJ estimator with half-window `window`, 1 <= window < n/2.
/// Indices past either end are clamped to the sample extremes.
EstimateResult wncj_empirical_vasicek(const CompleteSample& sample, std::size_t window);
/// Same with the default window floor(sqrt(n)).
EstimateResult wncj_empirical_vasicek(const CompleteSample& sample);
std::size_t default_vasicek_window(std::size_t n);

/// Plug-in negative cumulative extropy: 1/2 Σ (X_(i+1) − X_(i)) (1 − (i/n)²).
EstimateResult ncj_empirical(const CompleteSample& sample);

/// Plug-in negative cumulative residual extropy: 1/2 Σ (X_(i+1) − X_(i)) (1 − i/n)².
EstimateResult ncre_empirical(const CompleteSample& sample);

}  // namespace extropy
