#pragma once

#include <vector>

#include "extropy/bounds.hpp"
#include "extropy/distribution.hpp"
#include "extropy/measures.hpp"

namespace extropy {

/// Law of X given a finite partition: component i is the conditional law on
/// cell i, which has probability weight i.
class MixtureModel {
public:
    MixtureModel(std::vector<double> weights, std::vector<Distribution> components);

    const std::vector<double>& weights() const { return weights_; }
    const std::vector<Distribution>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }

    /// Unconditional law of X.
    Distribution to_distribution() const;

private:
    std::vector<double> weights_;
    std::vector<Distribution> components_;
};

/// Values of the conditional WNCJ on each cell.
std::vector<MeasureValue> cwncj(const MixtureModel& mix);

/// E[WNCJ(X | G)] <= WNCJ(X). `note` marks the equality case of identical components.
BoundReport cwncj_expectation_gap(const MixtureModel& mix);

struct CoarseningReport {
    std::vector<BoundReport> cells;  // one per coarse cell
    MixtureModel coarse;
    bool all_satisfied() const;
};

/// Merge fine cells into coarse ones: coarse cell g is the weight-renormalized
/// mixture of the fine components listed in grouping[g].
MixtureModel coarsen(const MixtureModel& fine, const std::vector<std::vector<std::size_t>>& grouping);

/// Per coarse cell: Σ (relative weight) WNCJ(fine) <= WNCJ(coarse).
CoarseningReport cwncj_coarsening(const MixtureModel& fine, const std::vector<std::vector<std::size_t>>& grouping);

}  // namespace extropy
