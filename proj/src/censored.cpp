#include "extropy/censored.hpp"

#include <algorithm>
#include <cmath>

#include "extropy/error.hpp"
#include "extropy/format.hpp"
#include "extropy/random.hpp"

namespace extropy {
namespace {

constexpr int kMaxRedraws = 50;

struct Weighted {
    double powered;  // Y^{m+1}
    double weight;   // 1 / K̂(Y-)
};

// Pair sum Σ_{i<j} k(Y_i, Y_j) w_i w_j over usable uncensored records, in O(n log n).
EstimateResult ipcw_estimate(const CensoredSample& sample, double m, bool use_min) {
    if (!(std::isfinite(m) && m > -1.0)) throw DomainError("estimator requires m > -1, got " + format_double(m));
    if (sample.size() < 2) throw InsufficientData("need at least 2 records");
    if (sample.events() == 0) throw InsufficientData("all records are censored");

    const KaplanMeierCurve k = km_censoring(sample);
    EstimateResult r;
    r.n = sample.size();
    r.m = m;
    r.method = use_min ? "t1cm" : "t2cm";

    std::vector<std::pair<double, double>> usable;  // (time, weight)
    std::size_t excluded = 0;
    for (const auto& rec : sample.records()) {
        if (!rec.event) continue;
        const double kl = k.left_limit(rec.time);
        if (!(kl > 0.0)) {
            ++excluded;
            continue;
        }
        usable.emplace_back(rec.time, 1.0 / kl);
    }
    if (excluded > 0)
        r.warnings.push_back("excluded " + std::to_string(excluded) + " uncensored record(s) with zero censoring survival");
    if (usable.size() < 2) {
        r.warnings.push_back("insufficient-pairs");
        r.point = 0.0;
        return r;
    }
    std::sort(usable.begin(), usable.end());

    const double p = m + 1.0;
    std::vector<Weighted> w(usable.size());
    for (std::size_t i = 0; i < usable.size(); ++i)
        w[i] = {p == 1.0 ? usable[i].first : std::pow(usable[i].first, p), usable[i].second};

    double sum = 0.0;
    if (use_min) {
        double suffix = 0.0;
        std::vector<double> after(w.size());
        for (std::size_t i = w.size(); i-- > 0;) {
            after[i] = suffix;
            suffix += w[i].weight;
        }
        for (std::size_t i = 0; i < w.size(); ++i) sum += w[i].powered * w[i].weight * after[i];
        sum = -sum;
    } else {
        double prefix = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            sum += w[i].powered * w[i].weight * prefix;
            prefix += w[i].weight;
        }
    }
    const double n = static_cast<double>(sample.size());
    r.point = sum / (n * (n - 1.0) * (m + 1.0));
    return r;
}

double percentile(const std::vector<double>& sorted, double q) {
    const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

CensoredSample::CensoredSample(std::vector<CensoredRecord> records) : records_(std::move(records)) {
    if (records_.empty()) throw InsufficientData("censored sample needs at least one record");
    for (const auto& r : records_)
        if (!(std::isfinite(r.time) && r.time >= 0.0)) throw DomainError("observed times must be finite and >= 0");
}

std::size_t CensoredSample::events() const {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(), [](const CensoredRecord& r) { return r.event; }));
}

KaplanMeierCurve::KaplanMeierCurve(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {}

double KaplanMeierCurve::at(double t) const {
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    if (it == times_.begin()) return 1.0;
    return values_[static_cast<std::size_t>(it - times_.begin()) - 1];
}

double KaplanMeierCurve::left_limit(double t) const {
    const auto it = std::lower_bound(times_.begin(), times_.end(), t);
    if (it == times_.begin()) return 1.0;
    return values_[static_cast<std::size_t>(it - times_.begin()) - 1];
}

KaplanMeierCurve km_censoring(const CensoredSample& sample) {
    std::vector<CensoredRecord> recs = sample.records();
    std::sort(recs.begin(), recs.end(), [](const CensoredRecord& a, const CensoredRecord& b) { return a.time < b.time; });

    std::vector<double> times, values;
    double k = 1.0;
    std::size_t at_risk = recs.size();
    for (std::size_t i = 0; i < recs.size();) {
        const double t = recs[i].time;
        std::size_t events = 0, censored = 0;
        while (i < recs.size() && recs[i].time == t) {
            (recs[i].event ? events : censored) += 1;
            ++i;
        }
        if (censored > 0) {
            const std::size_t risk = at_risk - events;
            k *= 1.0 - static_cast<double>(censored) / static_cast<double>(risk);
            times.push_back(t);
            values.push_back(k);
        }
        at_risk -= events + censored;
    }
    return KaplanMeierCurve(std::move(times), std::move(values));
}

EstimateResult t1cm(const CensoredSample& sample, double m) { return ipcw_estimate(sample, m, true); }

EstimateResult t2cm(const CensoredSample& sample, double m) { return ipcw_estimate(sample, m, false); }

EstimateResult bootstrap_ci(const CensoredSample& sample, double m, CensoredEstimator which, std::size_t replicates,
                            double level, std::uint64_t seed) {
    if (replicates < 100) throw DomainError("bootstrap needs at least 100 replicates");
    if (!(level > 0.0 && level < 1.0)) throw DomainError("confidence level must lie in (0,1)");
    const bool use_min = which == CensoredEstimator::T1c;

    EstimateResult r = ipcw_estimate(sample, m, use_min);
    r.level = level;
    r.method = std::string(use_min ? "t1cm" : "t2cm") + "+bootstrap";

    const auto& recs = sample.records();
    const std::size_t n = recs.size();
    std::vector<double> stats;
    stats.reserve(replicates);
    std::size_t failed = 0;
    std::vector<CensoredRecord> draw(n);
    for (std::size_t b = 0; b < replicates; ++b) {
        Rng rng(seed, b);
        bool ok = false;
        for (int attempt = 0; attempt <= kMaxRedraws && !ok; ++attempt) {
            std::size_t events = 0;
            for (auto& d : draw) {
                d = recs[rng.index(n)];
                events += d.event ? 1 : 0;
            }
            if (events < 2) continue;
            const EstimateResult e = ipcw_estimate(CensoredSample(draw), m, use_min);
            stats.push_back(e.point);
            ok = true;
        }
        if (!ok) ++failed;
    }
    if (failed > 0)
        r.warnings.push_back(std::to_string(failed) + " bootstrap replicate(s) stayed degenerate after redraws");
    if (stats.size() < 2) {
        r.warnings.push_back("bootstrap distribution unavailable");
        return r;
    }
    std::sort(stats.begin(), stats.end());
    double mean = 0.0;
    for (double s : stats) mean += s;
    mean /= static_cast<double>(stats.size());
    double ss = 0.0;
    for (double s : stats) ss += (s - mean) * (s - mean);
    r.variance = ss / (static_cast<double>(stats.size()) - 1.0);
    const double alpha = 1.0 - level;
    r.ci_low = percentile(stats, 0.5 * alpha);
    r.ci_high = percentile(stats, 1.0 - 0.5 * alpha);
    return r;
}

}  // namespace extropy
