#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "widow/harness.hpp"

using namespace widow;
using namespace widow::harness;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto p = fs::temp_directory_path() / ("widow_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentConfig small(Algorithm a, const std::string& bench = "F1") {
    ExperimentConfig c;
    c.algorithm = a;
    c.benchmark = bench;
    c.dim = bench == "F1" ? 5 : 0;
    c.pop = 10;
    c.max_iter = 40;
    c.runs = 4;
    c.seed = 100;
    return c;
}

}  // namespace

TEST_CASE("format_double round-trips") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(kInf) == "inf");
    CHECK(format_double(-kInf) == "-inf");
    CHECK(format_double(std::nan("")) == "nan");
    for (double v : {1.0 / 3.0, 1e-300, -12569.486618173014, 3.0000123577463933})
        CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("config validation") {
    ExperimentConfig c;
    CHECK_NOTHROW(c.validate());
    CHECK(c.resolved_dim() == 30);
    c.benchmark = "F99";
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.benchmark = "F16";
    c.dim = 5;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.dim = 0;
    CHECK(c.resolved_dim() == 2);
    c.runs = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.runs = 1;
    c.algorithm = Algorithm::ga;
    c.pop = 7;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.benchmark = "custom";
    c.pop = 8;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("settings and JSON") {
    ExperimentConfig c;
    apply_setting(c, "tent.u", "0.45");
    apply_setting(c, "inertia.variant", "cos_sqrt");
    apply_setting(c, "bwoa.cannibalism_rate", "0.3");
    apply_setting(c, "pso.inertia", "0.6");
    apply_setting(c, "ga.tournament_size", "3");
    apply_setting(c, "algorithm", "pso");
    apply_setting(c, "seed", "18446744073709551615");
    CHECK(c.msbwoa.tent_u == 0.45);
    CHECK(c.msbwoa.inertia == msbwoa::InertiaVariant::cos_sqrt);
    CHECK(c.bwoa.cannibalism_rate == 0.3);
    CHECK(c.pso.inertia == 0.6);
    CHECK(c.ga.tournament_size == 3);
    CHECK(c.algorithm == Algorithm::pso);
    CHECK(c.seed == 18446744073709551615ULL);
    CHECK_THROWS_AS(apply_setting(c, "nope", "1"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "pop", "-3"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "tent.u", "abc"), ConfigError);

    const auto back = config_from_json(config_to_json(c));
    CHECK(config_to_json(back) == config_to_json(c));
    CHECK(back.dim == 30);

    const auto partial = config_from_json(R"({"benchmark": "F9", "runs": 3, "tent": {"u": 0.4}})");
    CHECK(partial.benchmark == "F9");
    CHECK(partial.runs == 3);
    CHECK(partial.msbwoa.tent_u == 0.4);
    CHECK(partial.pop == 30);
    CHECK_THROWS_AS(config_from_json("{not json"), ConfigError);
    CHECK_THROWS_AS(config_from_json(R"({"colour": 1})"), ConfigError);
}

TEST_CASE("a single run gives degenerate statistics") {
    auto c = small(Algorithm::msbwoa);
    c.runs = 1;
    const auto rep = run_experiment(c);
    REQUIRE(rep.summary);
    const double g = rep.runs[0].result.gbest_score;
    CHECK(rep.summary->mean == g);
    CHECK(rep.summary->median == g);
    CHECK(rep.summary->best == g);
    CHECK(rep.summary->worst == g);
    CHECK(rep.summary->std == 0.0);
}

TEST_CASE("batch run i equals a standalone run with seed + i") {
    for (auto a : {Algorithm::msbwoa, Algorithm::bwoa, Algorithm::pso, Algorithm::ga}) {
        const auto c = small(a, "F7");  // noisy objective exercises the noise seed too
        const auto rep = run_experiment(c);
        for (std::size_t i = 0; i < c.runs; ++i) {
            CHECK(rep.runs[i].seed == c.seed + i);
            CHECK(rep.runs[i].result == run_once(c, c.seed + i));
        }
    }
}

TEST_CASE("parallel jobs do not change results") {
    auto c = small(Algorithm::bwoa);
    c.runs = 6;
    const auto serial = run_experiment(c);
    c.jobs = 3;
    const auto parallel = run_experiment(c);
    for (std::size_t i = 0; i < c.runs; ++i) CHECK(serial.runs[i].result == parallel.runs[i].result);
    CHECK(*serial.summary == *parallel.summary);
}

TEST_CASE("failed runs are recorded and the rest continue") {
    ExperimentConfig c;
    c.benchmark = "custom";
    c.dim = 2;
    c.pop = 6;
    c.max_iter = 5;
    c.runs = 3;
    int calls = 0;
    c.custom_objective = [&calls](std::span<const double> x) {
        // only the first run's evaluations are allowed
        if (++calls > 6 + 5 * 13) throw std::runtime_error("objective exploded");
        return x[0] * x[0];
    };
    const auto rep = run_experiment(c);
    CHECK(rep.failed_count() == 2);
    CHECK_FALSE(rep.runs[0].failed);
    CHECK(rep.runs[1].error == "objective exploded");
    REQUIRE(rep.summary);
    CHECK(rep.summary->count == 1);
}

TEST_CASE("outputs: layout, determinism and manifest round-trip") {
    const auto dir1 = scratch("out1");
    const auto dir2 = scratch("out2");
    auto c = small(Algorithm::msbwoa);
    write_outputs({run_experiment(c)}, dir1);
    write_outputs({run_experiment(c)}, dir2);
    for (const char* f : {"manifest.json", "summary.csv", "curve_msbwoa_0.csv", "curve_msbwoa_3.csv",
                          "mean_curve_msbwoa.csv"}) {
        CAPTURE(f);
        REQUIRE(fs::exists(dir1 / f));
        CHECK(slurp(dir1 / f) == slurp(dir2 / f));
    }
    const auto curve = read_curve_csv(dir1 / "curve_msbwoa_2.csv");
    CHECK(curve.size() == c.max_iter);

    // re-reading the curves reproduces the manifest summary exactly
    std::vector<double> finals;
    for (std::size_t i = 0; i < c.runs; ++i)
        finals.push_back(read_curve_csv(dir1 / ("curve_msbwoa_" + std::to_string(i) + ".csv")).back());
    const auto summaries = load_manifest_summaries(dir1 / "manifest.json");
    REQUIRE(summaries.size() == 1);
    REQUIRE(summaries[0]);
    CHECK(*summaries[0] == stats::summarize(finals));

    const auto configs = load_manifest(dir1 / "manifest.json");
    REQUIRE(configs.size() == 1);
    CHECK(config_to_json(configs[0]) == config_to_json(c));
}

TEST_CASE("compare") {
    std::vector<ExperimentConfig> cs{small(Algorithm::msbwoa), small(Algorithm::bwoa), small(Algorithm::pso),
                                     small(Algorithm::ga)};
    const auto reports = compare(cs);
    REQUIRE(reports.size() == 4);
    std::size_t total_runs = 0;
    for (const auto& r : reports) total_runs += r.runs.size();
    CHECK(total_runs == 4 * cs[0].runs);

    const auto dir = scratch("cmp");
    write_outputs(reports, dir);
    for (const char* a : {"msbwoa", "bwoa", "pso", "ga"}) {
        const auto mean = read_curve_csv(dir / ("mean_curve_" + std::string(a) + ".csv"));
        CHECK(mean.size() == cs[0].max_iter);
    }
    std::istringstream summary(slurp(dir / "summary.csv"));
    std::string line;
    int rows = -1;
    while (std::getline(summary, line)) ++rows;
    CHECK(rows == 4);

    const auto twins = compare({small(Algorithm::msbwoa), small(Algorithm::msbwoa)});
    CHECK(*twins[0].summary == *twins[1].summary);

    auto odd = small(Algorithm::bwoa);
    odd.max_iter = 41;
    CHECK_THROWS_AS(compare({small(Algorithm::msbwoa), odd}), ConfigError);
}

TEST_CASE("diagnostics") {
    DiagnosticsOptions o;
    o.kind = DiagnosticKind::inertia;
    o.n = 3;
    const auto inertia = diagnostics(o);
    CHECK(inertia.csv.rfind("iteration,w_nonlinear,w_constant\n0,1,0.9\n", 0) == 0);

    o.kind = DiagnosticKind::schedules;
    CHECK(diagnostics(o).csv.rfind("iteration,w,k_min,k_max,u\n0,1,0,1,1\n", 0) == 0);

    o.kind = DiagnosticKind::tent;
    o.n = 100000;
    const auto tent = diagnostics(o);
    REQUIRE(tent.histogram.size() == 10);
    for (double f : tent.histogram) {
        CHECK(f >= 0.08);
        CHECK(f <= 0.12);
    }
    CHECK(tent.histogram_csv.rfind("bin_lower,bin_upper,frequency\n0,0.1,", 0) == 0);

    o.kind = DiagnosticKind::sine;
    const auto sine = diagnostics(o);
    CHECK(*std::max_element(sine.histogram.begin(), sine.histogram.end()) > 0.15);

    CHECK_THROWS_AS(parse_diagnostic_kind("logistic"), ConfigError);
    o.n = 0;
    CHECK_THROWS_AS(diagnostics(o), ConfigError);
}

TEST_CASE("benchmark metadata JSON") {
    const auto j = benchmarks_json();
    CHECK(j.find("\"F23\"") != std::string::npos);
    CHECK(j.find("\"known_min\"") != std::string::npos);
}
