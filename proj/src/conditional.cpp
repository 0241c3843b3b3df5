#include "extropy/conditional.hpp"

#include <cmath>

#include "extropy/error.hpp"
#include "extropy/format.hpp"

namespace extropy {
namespace {

double wncj(const Distribution& d) { return gwncj(d, WeightSpec::power(1.0)).value; }

BoundReport gap_report(const std::vector<double>& weights, const std::vector<Distribution>& parts,
                       const Distribution& whole, const char* name) {
    BoundReport r;
    r.name = name;
    r.relation = BoundReport::Relation::LessEqual;
    double total = 0.0;
    for (double w : weights) total += w;
    for (std::size_t i = 0; i < parts.size(); ++i) r.lhs += weights[i] / total * wncj(parts[i]);
    r.rhs = wncj(whole);
    bool identical = true;
    for (const auto& p : parts) identical = identical && p == parts.front();
    if (identical) r.note = "identical components: equality case";
    r.slack = r.rhs - r.lhs;
    r.satisfied = r.slack >= -kInequalityTolerance;
    return r;
}

}  // namespace

MixtureModel::MixtureModel(std::vector<double> weights, std::vector<Distribution> components)
    : weights_(std::move(weights)), components_(std::move(components)) {
    if (weights_.empty() || weights_.size() != components_.size())
        throw DomainError("mixture needs one weight per component and at least one component");
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w > 0.0)) throw DomainError("mixture weights must be > 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw DomainError("mixture weights must sum to 1, got " + format_double(sum));
}

Distribution MixtureModel::to_distribution() const {
    if (components_.size() == 1) return components_.front();
    std::vector<std::pair<double, Distribution>> parts;
    for (std::size_t i = 0; i < components_.size(); ++i) parts.emplace_back(weights_[i], components_[i]);
    return Distribution::mixture(parts);
}

std::vector<MeasureValue> cwncj(const MixtureModel& mix) {
    std::vector<MeasureValue> out;
    for (const auto& c : mix.components()) out.push_back(gwncj(c, WeightSpec::power(1.0)));
    return out;
}

BoundReport cwncj_expectation_gap(const MixtureModel& mix) {
    return gap_report(mix.weights(), mix.components(), mix.to_distribution(), "conditional_expectation_gap");
}

bool CoarseningReport::all_satisfied() const {
    for (const auto& c : cells)
        if (!c.satisfied) return false;
    return true;
}

MixtureModel coarsen(const MixtureModel& fine, const std::vector<std::vector<std::size_t>>& grouping) {
    std::vector<int> seen(fine.size(), 0);
    std::vector<double> weights;
    std::vector<Distribution> parts;
    for (const auto& cell : grouping) {
        if (cell.empty()) throw DomainError("coarsening has an empty cell");
        double w = 0.0;
        std::vector<std::pair<double, Distribution>> members;
        for (std::size_t idx : cell) {
            if (idx >= fine.size()) throw DomainError("coarsening refers to component " + std::to_string(idx));
            if (seen[idx]++) throw DomainError("component " + std::to_string(idx) + " appears in two cells");
            w += fine.weights()[idx];
        }
        for (std::size_t idx : cell) members.emplace_back(fine.weights()[idx] / w, fine.components()[idx]);
        weights.push_back(w);
        parts.push_back(members.size() == 1 ? members.front().second : Distribution::mixture(members));
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw DomainError("component " + std::to_string(i) + " is not assigned to a cell");
    return MixtureModel(std::move(weights), std::move(parts));
}

CoarseningReport cwncj_coarsening(const MixtureModel& fine, const std::vector<std::vector<std::size_t>>& grouping) {
    MixtureModel coarse = coarsen(fine, grouping);
    std::vector<BoundReport> cells;
    for (std::size_t g = 0; g < grouping.size(); ++g) {
        std::vector<double> w;
        std::vector<Distribution> parts;
        for (std::size_t idx : grouping[g]) {
            w.push_back(fine.weights()[idx]);
            parts.push_back(fine.components()[idx]);
        }
        BoundReport r = gap_report(w, parts, coarse.components()[g], "coarsening_cell");
        r.name += "[" + std::to_string(g) + "]";
        cells.push_back(std::move(r));
    }
    return {std::move(cells), std::move(coarse)};
}

}  // namespace extropy
