#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "widow/baselines.hpp"
#include "widow/bwoa.hpp"
#include "widow/core.hpp"
#include "widow/msbwoa.hpp"
#include "widow/stats.hpp"

namespace widow::harness {

enum class Algorithm { msbwoa, bwoa, pso, ga };

Algorithm parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm algorithm);

/// One batch of seeded runs of one algorithm on one benchmark.
struct ExperimentConfig {
    Algorithm algorithm = Algorithm::msbwoa;
    /// "F1" ... "F23", or "custom" with custom_objective set.
    std::string benchmark = "F1";
    /// 0 selects the benchmark's default dimension.
    std::size_t dim = 0;
    std::size_t pop = 30;
    std::size_t max_iter = 500;
    std::size_t runs = 30;
    std::uint64_t seed = 0;
    /// Runs executed concurrently; does not affect results.
    std::size_t jobs = 1;

    msbwoa::MsbwoaParams msbwoa;
    bwoa::BwoaRates bwoa;
    pso::PsoParams pso;
    ga::GaParams ga;

    // Only for benchmark == "custom"; never serialized except the bounds.
    Objective custom_objective;
    double custom_lower = -1.0;
    double custom_upper = 1.0;

    std::size_t resolved_dim() const;
    SearchSpace space() const;
    /// Throws ConfigError.
    void validate() const;
};

/// Apply one dotted key such as "pop", "tent.u", "inertia.variant",
/// "bwoa.cannibalism_rate", "pso.inertia" or "ga.tournament_size".
/// Throws ConfigError for unknown keys or malformed values.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

/// JSON document with the resolved configuration (dim filled in).
std::string config_to_json(const ExperimentConfig& config);
/// Parse a JSON document; keys absent from the document keep base values.
ExperimentConfig config_from_json(std::string_view text, const ExperimentConfig& base = {});

/// Run index i uses seed + i.
std::uint64_t run_seed(const ExperimentConfig& config, std::size_t run_index);

/// One standalone run of config's algorithm with the given seed.
RunResult run_once(const ExperimentConfig& config, std::uint64_t seed);

struct RunRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    bool failed = false;
    std::string error;
    RunResult result;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<RunRecord> runs;
    /// Over successful runs only; nullopt when every run failed.
    std::optional<stats::StatsSummary> summary;

    std::size_t failed_count() const;
    std::vector<double> final_scores() const;
    /// Mean of the successful runs' curves.
    Vector mean_curve() const;
};

/// Validate, execute config.runs runs (up to config.jobs at a time) and
/// aggregate. A run whose objective throws is recorded as failed.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Several algorithms on a shared benchmark and budget. Throws ConfigError
/// when benchmark, dim, pop, max_iter or runs differ between configs.
std::vector<ExperimentReport> compare(const std::vector<ExperimentConfig>& configs);

/// Write manifest.json, summary.csv, curve_<algo>_<run>.csv and
/// mean_curve_<algo>.csv into dir (created if missing).
void write_outputs(const std::vector<ExperimentReport>& reports, const std::filesystem::path& dir);

/// Resolved configurations stored in a manifest.
std::vector<ExperimentConfig> load_manifest(const std::filesystem::path& manifest);

/// Summary recorded in the manifest for each experiment, in order.
std::vector<std::optional<stats::StatsSummary>> load_manifest_summaries(
    const std::filesystem::path& manifest);

/// Re-read an iteration,best_fitness curve CSV.
Vector read_curve_csv(const std::filesystem::path& path);

/// Benchmark registry as a JSON array (id, name, dim, lower, upper, known_min).
std::string benchmarks_json();

// Diagnostics

enum class DiagnosticKind { inertia, schedules, tent, sine };

DiagnosticKind parse_diagnostic_kind(std::string_view name);

struct DiagnosticsOptions {
    DiagnosticKind kind = DiagnosticKind::inertia;
    std::size_t n = 500;
    double tent_u = 0.499;
    double x0 = 0.3;
    std::uint64_t seed = 0;  // re-seeding draws for the chaotic maps
    double constant_w = 0.9;
    msbwoa::InertiaVariant variant = msbwoa::InertiaVariant::cos_sin_sqrt;
};

struct DiagnosticsOutput {
    /// Main CSV (header included).
    std::string csv;
    /// Map kinds only: bin_lower,bin_upper,frequency over 10 bins.
    std::string histogram_csv;
    Vector histogram;
};

/// inertia: iteration,w_nonlinear,w_constant for t = 0..n-1 with
/// t_max = max(n - 1, 1). schedules: iteration,w,k_min,k_max,u on the same
/// grid. tent/sine: one `value` column with n iterates from x0.
DiagnosticsOutput diagnostics(const DiagnosticsOptions& options);

/// Shortest round-trip decimal text for a double ("inf"/"nan" for
/// non-finite values).
std::string format_double(double value);

}  // namespace widow::harness
