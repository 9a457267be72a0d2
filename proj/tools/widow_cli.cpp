// widow: command-line front end for the black widow optimizers.
//
//   widow run         --algo msbwoa --benchmark F9 --runs 30 --out results/
//   widow compare     --algo msbwoa,bwoa,pso,ga --benchmark F1 --out results/
//   widow diagnostics --kind tent --n 100000 --out tent.csv
//   widow replay      --manifest results/manifest.json --out rerun/
//   widow benchmarks
//
// Exit codes: 0 success, 2 usage or configuration error, 1 internal error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "widow/harness.hpp"

namespace harness = widow::harness;

namespace {

constexpr int kUsageError = 2;
constexpr int kInternalError = 1;

struct CommonFlags {
    std::string config_file;
    std::string benchmark;
    std::size_t dim = 0;
    std::size_t pop = 0;
    std::size_t iters = 0;
    std::size_t runs = 0;
    std::uint64_t seed = 0;
    std::size_t jobs = 0;
    std::vector<std::string> settings;
    std::string out = "widow-out";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_file, "JSON experiment config; flags override it");
    cmd->add_option("--benchmark", f.benchmark, "Benchmark label F1..F23");
    cmd->add_option("--dim", f.dim, "Dimension (F1-F13 only)");
    cmd->add_option("--pop", f.pop, "Population size");
    cmd->add_option("--iters", f.iters, "Maximum iterations");
    cmd->add_option("--runs", f.runs, "Independent seeded runs");
    cmd->add_option("--seed", f.seed, "Base seed; run i uses seed + i");
    cmd->add_option("--jobs", f.jobs, "Runs executed in parallel");
    cmd->add_option("--set", f.settings, "Extra key=value settings, e.g. tent.u=0.45");
    cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw widow::ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

harness::ExperimentConfig resolve(const CLI::App* cmd, const CommonFlags& f) {
    harness::ExperimentConfig c;
    if (!f.config_file.empty()) c = harness::config_from_json(slurp(f.config_file));
    if (cmd->count("--benchmark")) c.benchmark = f.benchmark;
    if (cmd->count("--dim")) c.dim = f.dim;
    if (cmd->count("--pop")) c.pop = f.pop;
    if (cmd->count("--iters")) c.max_iter = f.iters;
    if (cmd->count("--runs")) c.runs = f.runs;
    if (cmd->count("--seed")) c.seed = f.seed;
    if (cmd->count("--jobs")) c.jobs = f.jobs;
    for (const auto& kv : f.settings) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw widow::ConfigError("--set expects key=value, got '" + kv + "'");
        harness::apply_setting(c, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (c.benchmark == "custom") throw widow::ConfigError("custom benchmarks are library-only");
    return c;
}

void print_summary(const std::vector<harness::ExperimentReport>& reports) {
    std::cout << std::left << std::setw(10) << "algorithm" << std::setw(8) << "failed"
              << std::setw(16) << "mean" << std::setw(16) << "std" << std::setw(16) << "median"
              << std::setw(16) << "best" << "worst\n";
    for (const auto& r : reports) {
        std::cout << std::setw(10) << harness::to_string(r.config.algorithm) << std::setw(8)
                  << r.failed_count();
        if (r.summary) {
            std::cout << std::setprecision(8) << std::setw(16) << r.summary->mean << std::setw(16)
                      << r.summary->std << std::setw(16) << r.summary->median << std::setw(16)
                      << r.summary->best << r.summary->worst << "\n";
        } else {
            std::cout << "all runs failed\n";
        }
    }
}

int finish(const std::vector<harness::ExperimentReport>& reports, const std::string& out) {
    harness::write_outputs(reports, out);
    print_summary(reports);
    std::cout << "wrote " << out << "/manifest.json\n";
    for (const auto& r : reports)
        if (!r.summary) return kInternalError;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"widow: black widow optimizers, baselines and benchmark harness"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    std::string run_algo = "msbwoa";
    auto* run_cmd = app.add_subcommand("run", "Seeded batch of one algorithm on one benchmark");
    run_cmd->add_option("--algo", run_algo, "msbwoa, bwoa, pso or ga")->capture_default_str();
    add_common(run_cmd, run_flags);

    CommonFlags cmp_flags;
    std::vector<std::string> cmp_algos{"msbwoa", "bwoa", "pso", "ga"};
    auto* cmp_cmd = app.add_subcommand("compare", "Several algorithms on a shared budget");
    cmp_cmd->add_option("--algo", cmp_algos, "Comma-separated algorithms")->delimiter(',')->capture_default_str();
    add_common(cmp_cmd, cmp_flags);

    std::string diag_kind = "inertia";
    harness::DiagnosticsOptions diag;
    std::string diag_variant = "cos_sin_sqrt";
    std::string diag_out;
    auto* diag_cmd = app.add_subcommand("diagnostics", "Schedule and chaotic-map diagnostics as CSV");
    diag_cmd->add_option("--kind", diag_kind, "inertia, schedules, tent or sine")->capture_default_str();
    diag_cmd->add_option("--n", diag.n, "Rows (iterations or iterates)")->capture_default_str();
    diag_cmd->add_option("--u", diag.tent_u, "Tent-map breakpoint")->capture_default_str();
    diag_cmd->add_option("--x0", diag.x0, "Chaotic-map seed value in (0,1)")->capture_default_str();
    diag_cmd->add_option("--seed", diag.seed, "Seed for re-seeding draws")->capture_default_str();
    diag_cmd->add_option("--constant-w", diag.constant_w, "Reference constant inertia weight")
        ->capture_default_str();
    diag_cmd->add_option("--variant", diag_variant, "cos_sin_sqrt, cos_sqrt or literal")
        ->capture_default_str();
    diag_cmd->add_option("--out", diag_out, "CSV path (stdout when omitted)");

    std::string manifest_path;
    std::string replay_out = "widow-replay";
    std::size_t replay_jobs = 0;
    auto* replay_cmd = app.add_subcommand("replay", "Re-run the resolved configs of a manifest");
    replay_cmd->add_option("--manifest", manifest_path, "manifest.json to replay")->required();
    replay_cmd->add_option("--out", replay_out, "Output directory")->capture_default_str();
    replay_cmd->add_option("--jobs", replay_jobs, "Override parallel runs");

    auto* list_cmd = app.add_subcommand("benchmarks", "Print benchmark metadata as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        if (*run_cmd) {
            auto c = resolve(run_cmd, run_flags);
            if (run_cmd->count("--algo") || run_flags.config_file.empty())
                c.algorithm = harness::parse_algorithm(run_algo);
            return finish({harness::run_experiment(c)}, run_flags.out);
        }
        if (*cmp_cmd) {
            const auto base = resolve(cmp_cmd, cmp_flags);
            std::vector<harness::ExperimentConfig> configs;
            for (const auto& a : cmp_algos) {
                auto c = base;
                c.algorithm = harness::parse_algorithm(a);
                configs.push_back(std::move(c));
            }
            return finish(harness::compare(configs), cmp_flags.out);
        }
        if (*diag_cmd) {
            diag.kind = harness::parse_diagnostic_kind(diag_kind);
            diag.variant = widow::msbwoa::parse_inertia_variant(diag_variant);
            const auto result = harness::diagnostics(diag);
            if (diag_out.empty()) {
                std::cout << result.csv;
                if (!result.histogram_csv.empty()) std::cout << "\n" << result.histogram_csv;
                return 0;
            }
            std::ofstream(diag_out, std::ios::binary) << result.csv;
            if (!result.histogram_csv.empty()) {
                std::filesystem::path hist(diag_out);
                hist.replace_filename(hist.stem().string() + "_histogram.csv");
                std::ofstream(hist, std::ios::binary) << result.histogram_csv;
                std::cout << result.histogram_csv;
            }
            return 0;
        }
        if (*replay_cmd) {
            auto configs = harness::load_manifest(manifest_path);
            if (replay_cmd->count("--jobs"))
                for (auto& c : configs) c.jobs = replay_jobs;
            std::vector<harness::ExperimentReport> reports;
            for (const auto& c : configs) reports.push_back(harness::run_experiment(c));
            return finish(reports, replay_out);
        }
        if (*list_cmd) {
            std::cout << harness::benchmarks_json() << "\n";
            return 0;
        }
    } catch (const widow::ConfigError& e) {
        std::cerr << "widow: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "widow: internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kUsageError;
}
