#include "extropy/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "extropy/bounds.hpp"
#include "extropy/censored.hpp"
#include "extropy/conditional.hpp"
#include "extropy/empirical.hpp"
#include "extropy/error.hpp"
#include "extropy/format.hpp"
#include "extropy/io.hpp"
#include "extropy/report.hpp"
#include "extropy/spec.hpp"
#include "extropy/study.hpp"
#include "extropy/systems.hpp"

namespace extropy {
namespace {

using nlohmann::json;

constexpr const char* kModelHelp =
    "Model spec: exp:RATE | uniform:A,B | power:LAMBDA | degenerate:C | affine:SCALE,SHIFT,<model>";

struct Common {
    std::string format = "json";
    bool allow_divergent = false;
};

std::optional<std::uint64_t> env_seed() {
    const char* s = std::getenv("EXTROPY_SEED");
    if (!s || !*s) return std::nullopt;
    std::uint64_t v = 0;
    const std::string text(s);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ConfigError("EXTROPY_SEED must be a nonnegative integer, got '" + text + "'");
    return v;
}

// Aligned "key  value" text rendering of a flat JSON object (nested values inline).
void print_text(std::ostream& out, const json& doc) {
    std::size_t width = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << it.key();
        if (it->is_string()) out << it->get<std::string>();
        else if (it->is_number_float()) out << format_double(it->get<double>());
        else out << it->dump();
        out << '\n';
    }
}

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_null()) return "-";
    return v.dump();
}

void print_table(std::ostream& out, const json& rows, const std::vector<std::string>& cols) {
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    for (const auto& r : rows)
        for (std::size_t i = 0; i < cols.size(); ++i)
            width[i] = std::max(width[i], cell(r.value(cols[i], json(nullptr))).size());
    for (std::size_t i = 0; i < cols.size(); ++i)
        out << std::left << std::setw(static_cast<int>(width[i]) + 2) << cols[i];
    out << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << std::left << std::setw(static_cast<int>(width[i]) + 2) << cell(r.value(cols[i], json(nullptr)));
        out << '\n';
    }
}

const std::vector<std::string> kBoundColumns{"name",      "relation", "lhs",  "rhs", "slack",
                                             "satisfied", "excluded", "diagnostic", "note"};

json envelope(const char* command) { return json{{"schema_version", kSchemaVersion}, {"command", command}}; }

int emit(std::ostream& out, const Common& common, const json& doc, bool divergent, std::ostream& err) {
    if (common.format == "text") {
        json flat;
        for (auto it = doc.begin(); it != doc.end(); ++it)
            if (!it->is_array()) flat[it.key()] = *it;
        print_text(out, flat);
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (!it->is_array() || it->empty() || !it->front().is_object()) continue;
            out << '\n' << it.key() << ":\n";
            std::vector<std::string> cols;
            for (auto c = it->front().begin(); c != it->front().end(); ++c) cols.push_back(c.key());
            if (it->front().contains("relation")) cols = kBoundColumns;
            print_table(out, *it, cols);
        }
    } else {
        out << doc.dump(2) << '\n';
    }
    if (divergent && !common.allow_divergent) {
        err << "error: divergent integral (pass --allow-divergent to accept)\n";
        return kExitDivergent;
    }
    return kExitOk;
}

// ---- measure ------------------------------------------------------------

struct MeasureArgs {
    std::string model, weight = "pow:1", kind = "gwncj", origin = "support";
    int n = 1;
};

int cmd_measure(const MeasureArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
    const Distribution model = parse_model(a.model);
    const WeightSpec weight = parse_weight(a.weight);
    MeasureOptions opts;
    if (a.origin == "zero") opts.origin = Origin::Zero;
    else if (a.origin != "support") throw ConfigError("origin must be 'support' or 'zero'");
    MeasureValue v;
    json doc = envelope("measure");
    doc["model"] = model.describe();
    doc["kind"] = a.kind;
    if (a.kind == "gwncj" || a.kind == "gwcrj") {
        v = a.kind == "gwncj" ? gwncj(model, weight, opts) : gwcrj(model, weight, opts);
        doc["weight"] = weight.describe();
        doc["origin"] = a.origin;
    } else if (a.kind == "extropy") {
        v = extropy(model);
    } else if (a.kind == "crj") {
        v = cumulative_residual_extropy(model);
    } else if (a.kind == "cpj") {
        v = cumulative_past_extropy(model);
    } else if (a.kind == "wncj-max") {
        v = wncj_max_order_stat(model, a.n);
        doc["n"] = a.n;
    } else {
        throw ConfigError("unknown measure kind '" + a.kind + "'");
    }
    doc.update(to_json(v));
    return emit(out, common, doc, v.divergent, err);
}

// ---- estimate -----------------------------------------------------------

struct EstimateArgs {
    std::string input, estimator;
    double m = 1.0, level = 0.95;
    std::size_t window = 0, bootstrap = 0;
    std::optional<std::uint64_t> seed;
};

int cmd_estimate(const EstimateArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
    const SampleFile file = read_sample_csv_file(a.input);
    EstimateResult r;
    try {
        if (is_censored_estimator(a.estimator)) {
            const CensoredSample s(file.as_records());
            const auto which = a.estimator == "t1cm" ? CensoredEstimator::T1c : CensoredEstimator::T2c;
            if (a.bootstrap > 0) {
                const auto seed = a.seed ? a.seed : env_seed();
                if (!seed) throw ConfigError("bootstrap needs --seed or EXTROPY_SEED");
                r = bootstrap_ci(s, a.m, which, a.bootstrap, a.level, *seed);
            } else {
                r = which == CensoredEstimator::T1c ? t1cm(s, a.m) : t2cm(s, a.m);
            }
        } else {
            const CompleteSample s(file.as_values());
            if (a.estimator == "t1m") r = t1m(s, a.m, a.level);
            else if (a.estimator == "t2m") r = t2m(s, a.m, a.level);
            else if (a.estimator == "wncj-step") r = wncj_empirical_step(s);
            else if (a.estimator == "wncj-vasicek")
                r = a.window ? wncj_empirical_vasicek(s, a.window) : wncj_empirical_vasicek(s);
            else if (a.estimator == "ncj") r = ncj_empirical(s);
            else if (a.estimator == "ncre") r = ncre_empirical(s);
            else throw ConfigError("unknown estimator '" + a.estimator + "'");
        }
    } catch (const BoundUnavailable&) {
        throw;
    } catch (const DomainError& e) {
        // invalid observations are data problems; invalid m/window are usage problems
        const std::string what = e.what();
        if (what.find("must be finite and >= 0") != std::string::npos) throw DataError(what);
        throw;
    }
    json doc = envelope("estimate");
    doc["input"] = a.input;
    doc["estimator"] = a.estimator;
    doc.update(to_json(r));
    return emit(out, common, doc, false, err);
}

// ---- simulate -----------------------------------------------------------

struct SimulateArgs {
    std::string config, output, report_format;
    unsigned workers = 1;
    std::optional<std::uint64_t> seed;
};

int cmd_simulate(const SimulateArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
    std::ifstream in(a.config);
    if (!in) throw DataError("cannot open config '" + a.config + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    StudyConfig cfg = parse_study_config(doc);
    if (a.seed) cfg.seed = a.seed;
    if (!cfg.seed) cfg.seed = env_seed();
    if (!cfg.seed) throw ConfigError("simulation needs a seed (config, --seed, or EXTROPY_SEED)");
    if (!a.output.empty()) cfg.output = a.output;

    const StudyReport rep = run_study(cfg, a.workers);
    std::string fmt = a.report_format;
    if (fmt.empty()) {
        const auto& p = cfg.output;
        fmt = (p.size() >= 4 && p.compare(p.size() - 4, 4, ".csv") == 0) ? "csv" : "json";
    }
    std::string body;
    if (fmt == "csv") body = report_to_csv(rep);
    else if (fmt == "json") body = to_json(rep).dump(2) + "\n";
    else throw ConfigError("report format must be json or csv");

    if (cfg.output.empty()) {
        out << body;
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) throw DataError("cannot write '" + cfg.output + "'");
        f << body;
        if (common.format == "text") out << "wrote " << cfg.output << '\n';
        else out << json{{"schema_version", kSchemaVersion}, {"command", "simulate"}, {"output", cfg.output}}.dump(2) << '\n';
    }
    (void)err;
    return kExitOk;
}

// ---- bounds -------------------------------------------------------------

int cmd_bounds(const std::vector<std::string>& models, bool grid, const Common& common, std::ostream& out,
               std::ostream& err) {
    std::vector<std::string> specs = models;
    if (grid) specs.insert(specs.end(), {"uniform:0,1", "uniform:2,5", "exp:0.5", "exp:2", "power:1.5", "power:3"});
    if (specs.empty()) throw ConfigError("bounds needs --model or --grid");
    json doc = envelope("bounds");
    json rows = json::array();
    for (const auto& s : specs) {
        const Distribution model = parse_model(s);
        for (const auto& r : run_bounds(model)) {
            json j = to_json(r);
            j["model"] = model.describe();
            rows.push_back(std::move(j));
        }
    }
    doc["rows"] = std::move(rows);
    if (common.format == "text") {
        std::vector<std::string> cols{"model"};
        cols.insert(cols.end(), kBoundColumns.begin(), kBoundColumns.end());
        print_table(out, doc["rows"], cols);
        return kExitOk;
    }
    return emit(out, common, doc, false, err);
}

// ---- system -------------------------------------------------------------

struct SystemArgs {
    std::string model, signature;
    int parallel = 0, series = 0;
};

int cmd_system(const SystemArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
    const Distribution model = parse_model(a.model);
    const int chosen = (a.signature.empty() ? 0 : 1) + (a.parallel ? 1 : 0) + (a.series ? 1 : 0);
    if (chosen != 1) throw ConfigError("give exactly one of --signature, --parallel, --series");
    const DistortionFunction q = !a.signature.empty() ? q_from_maximal_signature(parse_real_list(a.signature))
                                 : a.parallel       ? DistortionFunction::parallel(a.parallel)
                                                    : DistortionFunction::series(a.series);
    const MeasureValue v = system_wncj(model, q);
    json doc = envelope("system");
    doc["model"] = model.describe();
    doc["distortion"] = q.describe();
    doc["wncj"] = json_number(v.value);
    doc["abs_error_bound"] = json_number(v.abs_error_bound);
    doc["divergent"] = v.divergent;
    try {
        const DensityBounds d = system_bounds_density(model, q);
        doc["density_iq"] = d.iq;
        doc["density_inf_ratio"] = json_number(d.ratio.inf_ratio);
        doc["density_sup_ratio"] = json_number(d.ratio.sup_ratio);
        doc["density_lower"] = d.lower ? json_number(*d.lower) : json(nullptr);
        doc["density_upper"] = d.upper ? json_number(*d.upper) : json(nullptr);
    } catch (const BoundUnavailable& e) {
        doc["density_bounds"] = std::string("unavailable: ") + e.what();
    }
    const SandwichBounds b = system_bounds_distortion(model, q);
    doc["b1"] = json_number(b.c_low);
    doc["b2"] = json_number(b.c_high);
    doc["component_wncj"] = json_number(b.reference);
    doc["distortion_lower"] = json_number(b.lower);
    doc["distortion_upper"] = json_number(b.upper);
    return emit(out, common, doc, v.divergent, err);
}

// ---- mixture ------------------------------------------------------------

std::string model_spec_from_json(const json& m) {
    if (m.is_string()) return m.get<std::string>();
    if (!m.is_object()) throw ConfigError("model must be a spec string or an object");
    const std::string name = m.contains("name") ? m.at("name").get<std::string>() : m.at("family").get<std::string>();
    std::string spec = name + ":";
    const auto params = m.at("params").get<std::vector<double>>();
    for (std::size_t i = 0; i < params.size(); ++i) spec += (i ? "," : "") + format_double(params[i]);
    return spec;
}

std::vector<std::vector<std::size_t>> parse_grouping(const std::string& text) {
    std::vector<std::vector<std::size_t>> out;
    std::stringstream ss(text);
    std::string cellText;
    while (std::getline(ss, cellText, ';')) {
        std::vector<std::size_t> cell;
        for (double v : parse_real_list(cellText)) {
            if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v)))
                throw ConfigError("grouping entries must be component indices");
            cell.push_back(static_cast<std::size_t>(v));
        }
        out.push_back(std::move(cell));
    }
    return out;
}

int cmd_mixture(const std::string& input, const std::string& inline_json, const std::string& grouping,
                const Common& common, std::ostream& out, std::ostream& err) {
    json doc_in;
    try {
        if (!inline_json.empty()) {
            doc_in = json::parse(inline_json);
        } else {
            std::ifstream in(input);
            if (!in) throw DataError("cannot open '" + input + "'");
            doc_in = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("mixture is not valid JSON: ") + e.what());
    }
    if (!doc_in.is_array() || doc_in.empty()) throw ConfigError("mixture must be a nonempty JSON array");
    std::vector<double> weights;
    std::vector<Distribution> parts;
    for (const auto& c : doc_in) {
        weights.push_back(c.at("weight").get<double>());
        parts.push_back(parse_model(model_spec_from_json(c.at("model"))));
    }
    const MixtureModel mix(weights, parts);
    const auto values = cwncj(mix);
    json doc = envelope("mixture");
    json comps = json::array();
    bool divergent = false;
    for (std::size_t i = 0; i < mix.size(); ++i) {
        json j{{"index", i}, {"weight", weights[i]}, {"model", parts[i].describe()}};
        j.update(to_json(values[i]));
        divergent = divergent || values[i].divergent;
        comps.push_back(std::move(j));
    }
    doc["components"] = std::move(comps);
    const BoundReport gap = cwncj_expectation_gap(mix);
    doc["expectation_gap"] = to_json(gap);
    if (!grouping.empty()) {
        const CoarseningReport c = cwncj_coarsening(mix, parse_grouping(grouping));
        json cells = json::array();
        for (const auto& r : c.cells) cells.push_back(to_json(r));
        doc["coarsening"] = std::move(cells);
    }
    if (common.format == "text") {
        json flat = doc;
        flat.erase("expectation_gap");
        emit(out, common, flat, false, err);
        out << "\nexpectation_gap:\n";
        print_table(out, json::array({doc["expectation_gap"]}), kBoundColumns);
        return divergent && !common.allow_divergent ? kExitDivergent : kExitOk;
    }
    return emit(out, common, doc, divergent, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted cumulative residual / negative cumulative extropy toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--allow-divergent", common.allow_divergent, "Exit 0 even when an integral diverges");

    MeasureArgs ma;
    auto* measure = app.add_subcommand("measure", "Evaluate a measure for a parametric model");
    measure->add_option("--model", ma.model, kModelHelp)->required();
    measure->add_option("--weight", ma.weight, "Weight spec: pow:M or identity");
    measure->add_option("--kind", ma.kind, "gwncj | gwcrj | extropy | crj | cpj | wncj-max");
    measure->add_option("--n", ma.n, "Order-statistic size for wncj-max");
    measure->add_option("--origin", ma.origin, "Integrate from the support start (support) or from zero (zero)");

    EstimateArgs ea;
    std::uint64_t est_seed = 0;
    auto* estimate = app.add_subcommand("estimate", "Estimate from a CSV sample (column x, or time,status)");
    estimate->add_option("--input", ea.input, "CSV file")->required();
    estimate->add_option("--estimator", ea.estimator, "t1m | t2m | t1cm | t2cm | wncj-step | wncj-vasicek | ncj | ncre")
        ->required();
    estimate->add_option("--m", ea.m, "Weight exponent for t1m/t2m/t1cm/t2cm");
    estimate->add_option("--level", ea.level, "Confidence level");
    estimate->add_option("--window", ea.window, "Spacing window for wncj-vasicek (default floor(sqrt(n)))");
    estimate->add_option("--bootstrap", ea.bootstrap, "Bootstrap replicates for t1cm/t2cm confidence intervals");
    auto* est_seed_opt = estimate->add_option("--seed", est_seed, "Bootstrap seed (default: EXTROPY_SEED)");

    SimulateArgs sa;
    std::uint64_t sim_seed = 0;
    auto* simulate = app.add_subcommand("simulate", "Run a Monte Carlo study from a JSON config");
    simulate->add_option("--config", sa.config, "Study config (JSON)")->required();
    simulate->add_option("--workers", sa.workers, "Worker threads (does not change results)");
    simulate->add_option("--output", sa.output, "Report path (overrides the config)");
    simulate->add_option("--report-format", sa.report_format, "json | csv (default: from the output extension)");
    auto* sim_seed_opt = simulate->add_option("--seed", sim_seed, "Seed (overrides the config and EXTROPY_SEED)");

    std::vector<std::string> bound_models;
    bool bound_grid = false;
    auto* bounds = app.add_subcommand("bounds", "Evaluate the inequality and identity checks");
    bounds->add_option("--model", bound_models, kModelHelp);
    bounds->add_flag("--grid", bound_grid, "Also run the standard six-model grid");

    SystemArgs ya;
    auto* system = app.add_subcommand("system", "WNCJ of a coherent system and its bounds");
    system->add_option("--model", ya.model, kModelHelp)->required();
    system->add_option("--signature", ya.signature, "Maximal signature coefficients of v^1..v^n, comma separated");
    system->add_option("--parallel", ya.parallel, "Parallel system of N components");
    system->add_option("--series", ya.series, "Series system of N components");

    std::string mix_input, mix_json, mix_grouping;
    auto* mixture = app.add_subcommand("mixture", "Conditional WNCJ over a finite partition");
    mixture->add_option("--input", mix_input, "JSON file: [{\"weight\": w, \"model\": ...}, ...]");
    mixture->add_option("--json", mix_json, "Same document given inline");
    mixture->add_option("--grouping", mix_grouping, "Coarsening cells, e.g. \"0,1;2\"");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (est_seed_opt->count()) ea.seed = est_seed;
    if (sim_seed_opt->count()) sa.seed = sim_seed;

    try {
        if (measure->parsed()) return cmd_measure(ma, common, out, err);
        if (estimate->parsed()) return cmd_estimate(ea, common, out, err);
        if (simulate->parsed()) return cmd_simulate(sa, common, out, err);
        if (bounds->parsed()) return cmd_bounds(bound_models, bound_grid, common, out, err);
        if (system->parsed()) return cmd_system(ya, common, out, err);
        if (mixture->parsed()) {
            if (mix_input.empty() == mix_json.empty()) throw ConfigError("give exactly one of --input, --json");
            return cmd_mixture(mix_input, mix_json, mix_grouping, common, out, err);
        }
    } catch (const DataError& e) {
        err << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const InsufficientData& e) {
        err << "insufficient data: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {  // ParseError, ConfigError
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace extropy
