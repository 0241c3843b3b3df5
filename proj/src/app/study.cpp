#include "extropy/study.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "extropy/censored.hpp"
#include "extropy/empirical.hpp"
#include "extropy/error.hpp"
#include "extropy/estimators.hpp"
#include "extropy/format.hpp"
#include "extropy/measures.hpp"
#include "extropy/report.hpp"
#include "extropy/spec.hpp"

namespace extropy {
namespace {

using nlohmann::json;

struct Outcome {
    bool ok = false;
    double point = 0.0;
    bool has_ci = false;
    bool covered = false;
};

template <typename T>
T require_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("field '") + key + "': " + e.what());
    }
}

json number(double v) { return json_number(v); }
double read_number(const json& j) { return json_to_double(j); }

std::optional<double> finite(const MeasureValue& v) {
    if (v.divergent || !std::isfinite(v.value)) return std::nullopt;
    return v.value;
}

Outcome evaluate(const std::string& est, const std::vector<double>& lifetimes, const std::vector<CensoredRecord>& recs,
                 const StudyConfig& cfg, std::optional<double> truth, std::uint64_t boot_seed) {
    Outcome o;
    EstimateResult r;
    try {
        if (est == "t1cm" || est == "t2cm") {
            const CensoredSample s(recs);
            const auto which = est == "t1cm" ? CensoredEstimator::T1c : CensoredEstimator::T2c;
            if (cfg.bootstrap > 0)
                r = bootstrap_ci(s, cfg.m, which, cfg.bootstrap, cfg.level, boot_seed);
            else
                r = est == "t1cm" ? t1cm(s, cfg.m) : t2cm(s, cfg.m);
        } else {
            const CompleteSample s(lifetimes);
            if (est == "t1m") r = t1m(s, cfg.m, cfg.level);
            else if (est == "t2m") r = t2m(s, cfg.m, cfg.level);
            else if (est == "wncj-step") r = wncj_empirical_step(s);
            else if (est == "wncj-vasicek") r = wncj_empirical_vasicek(s);
            else if (est == "ncj") r = ncj_empirical(s);
            else r = ncre_empirical(s);
        }
    } catch (const InsufficientData&) {
        return o;
    }
    o.ok = true;
    o.point = r.point;
    if (r.ci_low && r.ci_high && truth) {
        o.has_ci = true;
        o.covered = *r.ci_low <= *truth && *truth <= *r.ci_high;
    }
    return o;
}

}  // namespace

const std::vector<std::string>& known_estimators() {
    static const std::vector<std::string> names{"t1m",       "t2m",          "t1cm", "t2cm",
                                                "wncj-step", "wncj-vasicek", "ncj",  "ncre"};
    return names;
}

bool is_censored_estimator(const std::string& name) { return name == "t1cm" || name == "t2cm"; }

std::optional<double> estimator_truth(const std::string& est, const Distribution& model, double m) {
    // U-statistics target the integral over [0, inf); the spacing estimators start at the sample minimum.
    const MeasureOptions zero{Origin::Zero, false};
    if (est == "t1m" || est == "t1cm") return finite(gwcrj(model, WeightSpec::power(m), zero));
    if (est == "t2m" || est == "t2cm") return finite(gwncj(model, WeightSpec::power(m), zero));
    if (est == "wncj-step" || est == "wncj-vasicek") return finite(gwncj(model, WeightSpec::power(1.0)));
    if (est == "ncj") return finite(gwncj(model, WeightSpec::identity()));
    if (est == "ncre") {
        const auto v = finite(gwcrj(model, WeightSpec::identity()));
        return v ? std::optional<double>(-*v) : std::nullopt;
    }
    throw ConfigError("unknown estimator '" + est + "'");
}

StudyConfig parse_study_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("study config must be a JSON object");
    StudyConfig c;
    c.schema_version = doc.value("schema_version", kSchemaVersion);
    if (c.schema_version != kSchemaVersion)
        throw ConfigError("unsupported schema_version " + std::to_string(c.schema_version));
    c.scenario = doc.value("scenario", std::string("study"));
    c.model_spec = require_field<std::string>(doc, "model");
    c.m = doc.value("m", 1.0);
    c.estimators = require_field<std::vector<std::string>>(doc, "estimators");
    c.n_grid = require_field<std::vector<std::size_t>>(doc, "n");
    c.replications = require_field<std::size_t>(doc, "replications");
    if (doc.contains("seed") && !doc.at("seed").is_null()) c.seed = require_field<std::uint64_t>(doc, "seed");
    if (doc.contains("censoring") && !doc.at("censoring").is_null())
        c.censoring_spec = require_field<std::string>(doc, "censoring");
    c.level = doc.value("level", 0.95);
    c.bootstrap = doc.value("bootstrap", std::size_t{0});
    c.output = doc.value("output", std::string());

    if (c.replications < 1) throw ConfigError("replications must be >= 1");
    if (c.n_grid.empty()) throw ConfigError("n grid must be nonempty");
    for (std::size_t n : c.n_grid)
        if (n < 2) throw ConfigError("every n must be >= 2");
    if (c.estimators.empty()) throw ConfigError("estimators must be nonempty");
    if (!(c.m > -1.0)) throw ConfigError("m must be > -1");
    if (!(c.level > 0.0 && c.level < 1.0)) throw ConfigError("level must lie in (0,1)");
    if (c.bootstrap != 0 && c.bootstrap < 100) throw ConfigError("bootstrap needs 0 or at least 100 replicates");
    for (const auto& e : c.estimators) {
        const auto& k = known_estimators();
        if (std::find(k.begin(), k.end(), e) == k.end()) throw ConfigError("unknown estimator '" + e + "'");
        if (is_censored_estimator(e) && !c.censoring_spec)
            throw ConfigError("estimator '" + e + "' needs a censoring model");
    }
    try {
        parse_model(c.model_spec);
        if (c.censoring_spec) parse_model(*c.censoring_spec);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("model spec: ") + e.what());
    }
    return c;
}

json to_json(const StudyConfig& c) {
    json j{{"schema_version", c.schema_version},
           {"scenario", c.scenario},
           {"model", c.model_spec},
           {"m", c.m},
           {"estimators", c.estimators},
           {"n", c.n_grid},
           {"replications", c.replications},
           {"level", c.level},
           {"bootstrap", c.bootstrap}};
    j["seed"] = c.seed ? json(*c.seed) : json(nullptr);
    j["censoring"] = c.censoring_spec ? json(*c.censoring_spec) : json(nullptr);
    if (!c.output.empty()) j["output"] = c.output;
    return j;
}

StudyReport run_study(const StudyConfig& cfg, unsigned workers) {
    if (!cfg.seed) throw ConfigError("a seed is required for simulation");
    const std::uint64_t seed = *cfg.seed;
    const Distribution model = parse_model(cfg.model_spec);
    const std::optional<Distribution> censoring =
        cfg.censoring_spec ? std::optional<Distribution>(parse_model(*cfg.censoring_spec)) : std::nullopt;
    workers = std::max(1u, workers);

    std::vector<std::optional<double>> truths;
    for (const auto& e : cfg.estimators) truths.push_back(estimator_truth(e, model, cfg.m));

    StudyReport report;
    report.config = cfg;
    report.config.output.clear();  // the destination is not part of what was simulated
    const std::size_t n_est = cfg.estimators.size();
    for (std::size_t k = 0; k < cfg.n_grid.size(); ++k) {
        const std::size_t n = cfg.n_grid[k];
        std::vector<Outcome> outcomes(cfg.replications * n_est);
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            std::vector<double> x(n);
            std::vector<CensoredRecord> recs(censoring ? n : 0);
            for (;;) {
                const std::size_t r = next.fetch_add(1);
                if (r >= cfg.replications) return;
                const std::uint64_t stream = (static_cast<std::uint64_t>(k) << 32) | r;
                Rng rng(seed, stream);
                for (std::size_t i = 0; i < n; ++i) {
                    x[i] = model.draw(rng);
                    if (censoring) {
                        const double c = censoring->draw(rng);
                        recs[i] = {std::min(x[i], c), x[i] <= c};
                    }
                }
                const std::uint64_t boot_seed = mix_seed(seed ^ 0x5bd1e995ULL, stream);
                for (std::size_t e = 0; e < n_est; ++e)
                    outcomes[r * n_est + e] = evaluate(cfg.estimators[e], x, recs, cfg, truths[e], boot_seed);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();

        for (std::size_t e = 0; e < n_est; ++e) {
            StudyRow row;
            row.n = n;
            row.estimator = cfg.estimators[e];
            row.replications = cfg.replications;
            double sum = 0.0;
            std::size_t ok = 0, ci = 0, covered = 0;
            for (std::size_t r = 0; r < cfg.replications; ++r) {
                const Outcome& o = outcomes[r * n_est + e];
                if (!o.ok) continue;
                ++ok;
                sum += o.point;
                if (o.has_ci) {
                    ++ci;
                    covered += o.covered ? 1 : 0;
                }
            }
            row.failures = cfg.replications - ok;
            if (ok > 0) {
                row.mean = sum / static_cast<double>(ok);
                double ss = 0.0;
                for (std::size_t r = 0; r < cfg.replications; ++r) {
                    const Outcome& o = outcomes[r * n_est + e];
                    if (o.ok) ss += (o.point - row.mean) * (o.point - row.mean);
                }
                row.sd = ok > 1 ? std::sqrt(ss / static_cast<double>(ok - 1)) : 0.0;
                row.se = row.sd / std::sqrt(static_cast<double>(ok));
            }
            row.truth = truths[e];
            if (row.truth && ok > 0) row.bias = row.mean - *row.truth;
            if (ci > 0) row.coverage = static_cast<double>(covered) / static_cast<double>(ci);
            row.coverage_replications = ci;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

json to_json(const StudyReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json j{{"n", r.n},
               {"estimator", r.estimator},
               {"replications", r.replications},
               {"failures", r.failures},
               {"mean", number(r.mean)},
               {"sd", number(r.sd)},
               {"se", number(r.se)},
               {"coverage_replications", r.coverage_replications}};
        if (r.truth) j["truth"] = number(*r.truth);
        if (r.bias) j["bias"] = number(*r.bias);
        if (r.coverage) j["coverage"] = number(*r.coverage);
        rows.push_back(std::move(j));
    }
    return json{{"schema_version", rep.schema_version}, {"config", to_json(rep.config)}, {"rows", std::move(rows)}};
}

StudyReport report_from_json(const json& doc) {
    StudyReport rep;
    rep.schema_version = require_field<int>(doc, "schema_version");
    if (rep.schema_version != kSchemaVersion)
        throw ConfigError("unsupported schema_version " + std::to_string(rep.schema_version));
    rep.config = parse_study_config(doc.at("config"));
    for (const auto& j : doc.at("rows")) {
        StudyRow r;
        r.n = j.at("n").get<std::size_t>();
        r.estimator = j.at("estimator").get<std::string>();
        r.replications = j.at("replications").get<std::size_t>();
        r.failures = j.at("failures").get<std::size_t>();
        r.mean = read_number(j.at("mean"));
        r.sd = read_number(j.at("sd"));
        r.se = read_number(j.at("se"));
        r.coverage_replications = j.at("coverage_replications").get<std::size_t>();
        if (j.contains("truth")) r.truth = read_number(j.at("truth"));
        if (j.contains("bias")) r.bias = read_number(j.at("bias"));
        if (j.contains("coverage")) r.coverage = read_number(j.at("coverage"));
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

std::string report_to_csv(const StudyReport& rep) {
    std::ostringstream out;
    out << "scenario,n,estimator,replications,failures,mean,sd,se,truth,bias,coverage\n";
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
    for (const auto& r : rep.rows) {
        out << rep.config.scenario << ',' << r.n << ',' << r.estimator << ',' << r.replications << ',' << r.failures
            << ',' << format_double(r.mean) << ',' << format_double(r.sd) << ',' << format_double(r.se) << ','
            << opt(r.truth) << ',' << opt(r.bias) << ',' << opt(r.coverage) << '\n';
    }
    return out.str();
}

}  // namespace extropy
