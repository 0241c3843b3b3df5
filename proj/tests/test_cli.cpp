#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "extropy/bounds.hpp"
#include "extropy/cli.hpp"
#include "extropy/estimators.hpp"
#include "extropy/systems.hpp"
#include "extropy/report.hpp"
#include "extropy/study.hpp"
#include "json.hpp"

using namespace extropy;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
    json doc() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& body) {
    const fs::path dir = fs::temp_directory_path() / "extropy_cli_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p, std::ios::binary) << body;
    return p;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("measure") {
        const auto r = cli({"measure", "--model", "exp:1", "--weight", "pow:1", "--kind", "gwncj"});
        REQUIRE(r.code == kExitOk);
        const auto d = r.doc();
        CHECK(d["schema_version"] == 1);
        CHECK(d["command"] == "measure");
        CHECK(d["value"].get<double>() == doctest::Approx(0.875));

        CHECK(cli({"measure", "--model", "uniform:0,1", "--kind", "wncj-max", "--n", "3"}).doc()["value"].get<double>() ==
              doctest::Approx(0.1875));
        CHECK(cli({"measure", "--model", "uniform:2,3", "--origin", "zero"}).doc()["value"].get<double>() ==
              doctest::Approx(1 + 19.0 / 24).epsilon(1e-12));
    }

    TEST_CASE("divergent integrals") {
        const auto r = cli({"measure", "--model", "exp:1", "--weight", "identity", "--kind", "cpj"});
        CHECK(r.code == kExitDivergent);
        CHECK(r.doc()["divergent"] == true);
        CHECK(r.doc()["value"] == "-inf");
        CHECK(cli({"--allow-divergent", "measure", "--model", "exp:1", "--weight", "identity", "--kind", "cpj"}).code == kExitOk);
    }

    TEST_CASE("usage errors") {
        CHECK(cli({}).code == kExitUsage);
        CHECK(cli({"measure"}).code == kExitUsage);
        CHECK(cli({"measure", "--model", "gamma:2"}).code == kExitUsage);
        CHECK(cli({"measure", "--model", "exp:-1"}).code == kExitUsage);
        CHECK(cli({"measure", "--model", "exp:1", "--weight", "pow:-2"}).code == kExitUsage);
        CHECK(cli({"measure", "--model", "exp:1", "--kind", "nope"}).code == kExitUsage);
        CHECK(cli({"system", "--model", "exp:1"}).code == kExitUsage);
        CHECK(cli({"system", "--model", "exp:1", "--parallel", "2", "--series", "2"}).code == kExitUsage);
        CHECK(cli({"system", "--model", "exp:1", "--signature", "0,4,-4"}).code == kExitUsage);
        CHECK(cli({"--format", "xml", "measure", "--model", "exp:1"}).code == kExitUsage);
        const auto bad = cli({"measure", "--model", "exp:1x"});
        CHECK(bad.code == kExitUsage);
        CHECK_FALSE(bad.err.empty());
    }

    TEST_CASE("estimate from a complete sample") {
        const auto p = scratch("complete.csv", "x\n0.5\n1.2\n0.3\n2.0\n");
        const auto t2 = cli({"estimate", "--input", p.string(), "--estimator", "t2m", "--m", "1"});
        REQUIRE(t2.code == kExitOk);
        // pairwise maxima squared: 1.44 + .25 + 4 + 1.44 + 4 + 4, averaged over 6 pairs, divided by 4
        CHECK(t2.doc()["point"].get<double>() == doctest::Approx(15.13 / 24).epsilon(1e-14));
        const auto t1 = cli({"estimate", "--input", p.string(), "--estimator", "t1m", "--m", "1"});
        CHECK(t1.doc()["point"].get<double>() == doctest::Approx(-2.21 / 24).epsilon(1e-14));
        CHECK(t2.doc()["n"] == 4);

        const auto text = cli({"--format", "text", "estimate", "--input", p.string(), "--estimator", "t2m"});
        CHECK(text.code == kExitOk);
        CHECK(text.out.find("point") != std::string::npos);
    }

    TEST_CASE("uncensored records give identical point values") {
        const auto plain = scratch("plain.csv", "x\n0.5\n1.2\n0.3\n2.0\n0.9\n");
        const auto recs = scratch("records.csv", "time,status\n0.5,1\n1.2,1\n0.3,1\n2.0,1\n0.9,1\n");
        for (const auto& [a, b] : {std::pair{"t2m", "t2cm"}, std::pair{"t1m", "t1cm"}}) {
            const double x = cli({"estimate", "--input", plain.string(), "--estimator", a}).doc()["point"].get<double>();
            const double y = cli({"estimate", "--input", recs.string(), "--estimator", b}).doc()["point"].get<double>();
            CHECK(x == y);
        }
    }

    TEST_CASE("censored bootstrap honours EXTROPY_SEED") {
        const auto p = scratch("cens.csv", "time,status\n0.5,1\n1.2,0\n0.3,1\n2.0,1\n0.9,0\n1.6,1\n0.1,1\n2.4,0\n");
        const std::vector<std::string> base{"estimate", "--input", p.string(), "--estimator", "t2cm", "--bootstrap", "200"};
        ::setenv("EXTROPY_SEED", "17", 1);
        const auto a = cli(base);
        const auto b = cli(base);
        ::unsetenv("EXTROPY_SEED");
        REQUIRE(a.code == kExitOk);
        CHECK(a.out == b.out);
        auto explicit_seed = base;
        explicit_seed.insert(explicit_seed.end(), {"--seed", "17"});
        CHECK(cli(explicit_seed).out == a.out);
        explicit_seed.back() = "18";
        CHECK(cli(explicit_seed).doc()["ci_low"] != a.doc()["ci_low"]);
        CHECK(a.doc()["method"] == "t2cm+bootstrap");
    }

    TEST_CASE("data errors carry line numbers") {
        const auto neg = cli({"estimate", "--input", scratch("neg.csv", "x\n1\n-2\n").string(), "--estimator", "t2m"});
        CHECK(neg.code == kExitData);
        CHECK(neg.err.find("line 3") != std::string::npos);
        const auto txt = cli({"estimate", "--input", scratch("txt.csv", "x\n1\nabc\n2\n").string(), "--estimator", "t2m"});
        CHECK(txt.code == kExitData);
        CHECK(txt.err.find("line 3") != std::string::npos);
        const auto status = cli({"estimate", "--input", scratch("st.csv", "time,status\n1,1\n2,2\n").string(), "--estimator", "t2cm"});
        CHECK(status.code == kExitData);
        CHECK(status.err.find("line 3") != std::string::npos);
        CHECK(cli({"estimate", "--input", "/nonexistent/file.csv", "--estimator", "t2m"}).code == kExitData);
        const auto cens = scratch("c2.csv", "time,status\n1,1\n2,0\n3,1\n");
        CHECK(cli({"estimate", "--input", cens.string(), "--estimator", "t2m"}).code == kExitData);
        CHECK(cli({"estimate", "--input", scratch("crlf.csv", "\xEF\xBB\xBFx\r\n1\r\n2\r\n").string(), "--estimator", "t2m"}).code ==
              kExitOk);
    }

    TEST_CASE("system") {
        const auto r = cli({"system", "--model", "exp:1", "--signature", "0,4,-4,1"});
        REQUIRE(r.code == kExitOk);
        CHECK(std::abs(r.doc()["wncj"].get<double>() - 0.3602) <= 1e-4);
        const auto p = cli({"system", "--model", "uniform:0,1", "--parallel", "2"}).doc();
        CHECK(p["wncj"].get<double>() == doctest::Approx(1.0 / 6));
        CHECK(p["b1"].get<double>() == doctest::Approx(1.0));
        CHECK(p["b2"].get<double>() == doctest::Approx(2.0));
        CHECK(p["density_lower"].is_null());
        CHECK(cli({"system", "--model", "uniform:0,1", "--series", "3"}).doc()["wncj"].get<double>() ==
              doctest::Approx(system_wncj(Distribution::uniform(0, 1), DistortionFunction::series(3)).value));
    }

    TEST_CASE("bounds") {
        const auto r = cli({"bounds", "--grid"});
        REQUIRE(r.code == kExitOk);
        for (const auto& row : r.doc()["rows"]) {
            if (row["diagnostic"].get<bool>()) continue;
            CHECK(row["satisfied"] == true);
        }
        CHECK(cli({"bounds"}).code == kExitUsage);
        CHECK(cli({"--format", "text", "bounds", "--model", "power:2"}).out.find("logsum") != std::string::npos);
    }

    TEST_CASE("mixture") {
        const std::string doc = R"([{"weight":0.5,"model":"uniform:0,1"},{"weight":0.5,"model":"uniform:2,3"}])";
        const auto r = cli({"mixture", "--json", doc, "--grouping", "0;1"});
        REQUIRE(r.code == kExitOk);
        const auto d = r.doc();
        CHECK(d["components"][1]["value"].get<double>() == doctest::Approx(19.0 / 24));
        CHECK(d["expectation_gap"]["satisfied"] == true);
        CHECK(d["coarsening"].size() == 2);
        CHECK(cli({"mixture", "--json", doc, "--grouping", "0"}).code == kExitUsage);
        CHECK(cli({"mixture", "--json", "[{\"weight\":0.5}"}).code == kExitUsage);
    }

    TEST_CASE("simulate writes a report that round-trips") {
        const auto cfg = scratch("study.json", R"({"schema_version":1,"scenario":"rt","model":"exp:1","m":1,
            "estimators":["t1m","t2m"],"n":[10,20],"replications":30,"seed":5})");
        const auto out = fs::temp_directory_path() / "extropy_cli_tests" / "rt.json";
        const auto r = cli({"simulate", "--config", cfg.string(), "--output", out.string(), "--workers", "2"});
        REQUIRE(r.code == kExitOk);
        std::ifstream in(out);
        const json written = json::parse(in);
        const StudyReport rep = report_from_json(written);
        CHECK(to_json(rep) == written);
        CHECK(rep.rows.size() == 4);
        CHECK_FALSE(written["config"].contains("output"));

        const auto csv = cli({"simulate", "--config", cfg.string(), "--report-format", "csv"});
        CHECK(csv.out.rfind("scenario", 0) == 0);

        const auto noseed = scratch("noseed.json", R"({"model":"exp:1","estimators":["t2m"],"n":[5],"replications":3})");
        ::unsetenv("EXTROPY_SEED");
        CHECK(cli({"simulate", "--config", noseed.string()}).code == kExitUsage);
        ::setenv("EXTROPY_SEED", "9", 1);
        const auto env = cli({"simulate", "--config", noseed.string()});
        ::unsetenv("EXTROPY_SEED");
        CHECK(env.code == kExitOk);
        CHECK(env.out == cli({"simulate", "--config", noseed.string(), "--seed", "9"}).out);
        CHECK(cli({"simulate", "--config", scratch("bad.json", R"({"model":"exp:1","estimators":["zz"],"n":[5],"replications":3,"seed":1})").string()})
                  .code == kExitUsage);
    }

    TEST_CASE("json round trips of result types") {
        const MeasureValue v = gwncj(Distribution::exponential(2), WeightSpec::power(0.5));
        CHECK(measure_from_json(to_json(v)).value == v.value);
        const BoundReport b = bound_second_moment(Distribution::uniform(0, 1));
        const BoundReport b2 = bound_from_json(to_json(b));
        CHECK(b2.lhs == b.lhs);
        CHECK(b2.relation == b.relation);
        CHECK(b2.name == b.name);
        const MeasureValue inf = cumulative_past_extropy(Distribution::exponential(1));
        CHECK(std::isinf(measure_from_json(to_json(inf)).value));
        const EstimateResult e = t2m(CompleteSample({0.4, 1.1, 2.5, 0.7}), 1.0);
        const EstimateResult e2 = estimate_from_json(to_json(e));
        CHECK(e2.point == e.point);
        CHECK(e2.variance == e.variance);
        CHECK(e2.method == e.method);
    }
}
