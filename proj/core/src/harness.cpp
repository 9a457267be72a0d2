#include "widow/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "widow/chaos.hpp"
#include "widow/objectives.hpp"

namespace widow::harness {

using json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kManifestFormat = "widow-manifest/1";

double parse_double(std::string_view key, std::string_view text) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw ConfigError("invalid number for '" + std::string(key) + "': '" + std::string(text) + "'");
    return v;
}

std::uint64_t parse_uint(std::string_view key, std::string_view text) {
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw ConfigError("invalid non-negative integer for '" + std::string(key) + "': '" +
                          std::string(text) + "'");
    return v;
}

std::size_t parse_size(std::string_view key, std::string_view text) {
    return static_cast<std::size_t>(parse_uint(key, text));
}

json number_or_text(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

double read_number(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_double("number", j.get<std::string>());
    throw ConfigError("manifest: expected a number");
}

std::string read_text(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

json config_json(const ExperimentConfig& c) {
    json j;
    j["algorithm"] = std::string(to_string(c.algorithm));
    j["benchmark"] = c.benchmark;
    j["dim"] = c.resolved_dim();
    j["pop"] = c.pop;
    j["max_iter"] = c.max_iter;
    j["runs"] = c.runs;
    j["seed"] = c.seed;
    j["jobs"] = c.jobs;
    j["tent"] = json{{"u", c.msbwoa.tent_u}};
    j["inertia"] = json{{"variant", std::string(msbwoa::to_string(c.msbwoa.inertia))}};
    j["bwoa"] = json{{"procreating_rate", c.bwoa.procreating_rate},
                     {"cannibalism_rate", c.bwoa.cannibalism_rate},
                     {"mutation_rate", c.bwoa.mutation_rate}};
    j["pso"] = json{{"inertia", c.pso.inertia},
                    {"cognitive", c.pso.cognitive},
                    {"social", c.pso.social},
                    {"vmax_fraction", c.pso.vmax_fraction}};
    j["ga"] = json{{"crossover_prob", c.ga.crossover_prob},
                   {"mutation_prob", c.ga.mutation_prob_for(c.resolved_dim())},
                   {"tournament_size", c.ga.tournament_size},
                   {"blend_alpha", c.ga.blend_alpha}};
    if (c.benchmark == "custom") j["custom"] = json{{"lower", c.custom_lower}, {"upper", c.custom_upper}};
    return j;
}

void apply_json(ExperimentConfig& config, const json& node, const std::string& prefix) {
    if (!node.is_object()) throw ConfigError("config: expected a JSON object");
    for (const auto& [key, value] : node.items()) {
        const std::string path = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            apply_json(config, value, path);
        } else if (value.is_string()) {
            apply_setting(config, path, value.get<std::string>());
        } else if (value.is_number() || value.is_boolean()) {
            apply_setting(config, path, value.dump());
        } else {
            throw ConfigError("config: unsupported value for '" + path + "'");
        }
    }
}

json summary_json(const std::optional<stats::StatsSummary>& s) {
    if (!s) return nullptr;
    return json{{"count", s->count},
                {"mean", number_or_text(s->mean)},
                {"std", number_or_text(s->std)},
                {"median", number_or_text(s->median)},
                {"best", number_or_text(s->best)},
                {"worst", number_or_text(s->worst)}};
}

std::string curve_csv(const Vector& curve) {
    std::string out = "iteration,best_fitness\n";
    for (std::size_t t = 0; t < curve.size(); ++t)
        out += std::to_string(t) + "," + format_double(curve[t]) + "\n";
    return out;
}

std::vector<std::string> experiment_labels(const std::vector<ExperimentReport>& reports) {
    std::map<std::string, int> seen;
    std::vector<std::string> labels;
    for (const auto& r : reports) {
        std::string base(to_string(r.config.algorithm));
        const int n = ++seen[base];
        labels.push_back(n == 1 ? base : base + "-" + std::to_string(n));
    }
    return labels;
}

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "msbwoa") return Algorithm::msbwoa;
    if (name == "bwoa") return Algorithm::bwoa;
    if (name == "pso") return Algorithm::pso;
    if (name == "ga") return Algorithm::ga;
    throw ConfigError("unknown algorithm '" + std::string(name) +
                      "' (expected msbwoa, bwoa, pso or ga)");
}

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::msbwoa: return "msbwoa";
        case Algorithm::bwoa: return "bwoa";
        case Algorithm::pso: return "pso";
        case Algorithm::ga: return "ga";
    }
    return "msbwoa";
}

std::size_t ExperimentConfig::resolved_dim() const {
    if (dim != 0) return dim;
    if (benchmark == "custom") return 0;
    try {
        return objectives::find(benchmark).dim_default;
    } catch (const objectives::UnknownBenchmark&) {
        return 0;
    }
}

SearchSpace ExperimentConfig::space() const {
    if (benchmark == "custom") return SearchSpace::uniform(resolved_dim(), custom_lower, custom_upper);
    return objectives::find(benchmark).space(resolved_dim());
}

void ExperimentConfig::validate() const {
    if (benchmark == "custom") {
        if (!custom_objective) throw ConfigError("custom benchmark needs an objective");
        if (dim == 0) throw ConfigError("custom benchmark needs an explicit dim");
        if (!(custom_lower < custom_upper)) throw ConfigError("custom bounds must satisfy lower < upper");
    } else {
        const objectives::BenchmarkSpec* spec = nullptr;
        try {
            spec = &objectives::find(benchmark);
        } catch (const objectives::UnknownBenchmark& e) {
            throw ConfigError(e.what());
        }
        if (!spec->scalable && dim != 0 && dim != spec->dim_default)
            throw ConfigError(benchmark + " is fixed at dim " + std::to_string(spec->dim_default));
    }
    if (runs < 1) throw ConfigError("runs must be >= 1");
    if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
    if (jobs < 1) throw ConfigError("jobs must be >= 1");
    switch (algorithm) {
        case Algorithm::msbwoa:
            msbwoa.validate();
            if (pop < 2) throw ConfigError("msbwoa: pop must be >= 2");
            break;
        case Algorithm::bwoa:
            bwoa.validate();
            if (pop < 4) throw ConfigError("bwoa: pop must be >= 4");
            if (bwoa::parent_pool_size(bwoa, pop) < 2)
                throw ConfigError("bwoa: procreating_rate * pop must select at least two parents");
            break;
        case Algorithm::pso:
            pso.validate();
            if (pop < 2) throw ConfigError("pso: pop must be >= 2");
            break;
        case Algorithm::ga:
            if (pop < 4 || pop % 2 != 0) throw ConfigError("ga: pop must be even and >= 4");
            ga.validate(pop);
            break;
    }
}

void apply_setting(ExperimentConfig& c, std::string_view key, std::string_view value) {
    if (key == "algorithm") c.algorithm = parse_algorithm(value);
    else if (key == "benchmark") c.benchmark = std::string(value);
    else if (key == "dim") c.dim = parse_size(key, value);
    else if (key == "pop") c.pop = parse_size(key, value);
    else if (key == "max_iter" || key == "iters") c.max_iter = parse_size(key, value);
    else if (key == "runs") c.runs = parse_size(key, value);
    else if (key == "seed") c.seed = parse_uint(key, value);
    else if (key == "jobs") c.jobs = parse_size(key, value);
    else if (key == "tent.u") c.msbwoa.tent_u = parse_double(key, value);
    else if (key == "inertia.variant") c.msbwoa.inertia = msbwoa::parse_inertia_variant(value);
    else if (key == "bwoa.procreating_rate") c.bwoa.procreating_rate = parse_double(key, value);
    else if (key == "bwoa.cannibalism_rate") c.bwoa.cannibalism_rate = parse_double(key, value);
    else if (key == "bwoa.mutation_rate") c.bwoa.mutation_rate = parse_double(key, value);
    else if (key == "pso.inertia") c.pso.inertia = parse_double(key, value);
    else if (key == "pso.cognitive") c.pso.cognitive = parse_double(key, value);
    else if (key == "pso.social") c.pso.social = parse_double(key, value);
    else if (key == "pso.vmax_fraction") c.pso.vmax_fraction = parse_double(key, value);
    else if (key == "ga.crossover_prob") c.ga.crossover_prob = parse_double(key, value);
    else if (key == "ga.mutation_prob") c.ga.mutation_prob = parse_double(key, value);
    else if (key == "ga.tournament_size") c.ga.tournament_size = parse_size(key, value);
    else if (key == "ga.blend_alpha") c.ga.blend_alpha = parse_double(key, value);
    else if (key == "custom.lower") c.custom_lower = parse_double(key, value);
    else if (key == "custom.upper") c.custom_upper = parse_double(key, value);
    else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

std::string config_to_json(const ExperimentConfig& config) { return config_json(config).dump(2); }

ExperimentConfig config_from_json(std::string_view text, const ExperimentConfig& base) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: malformed JSON: ") + e.what());
    }
    ExperimentConfig config = base;
    apply_json(config, j, "");
    return config;
}

std::uint64_t run_seed(const ExperimentConfig& config, std::size_t run_index) {
    return config.seed + static_cast<std::uint64_t>(run_index);
}

RunResult run_once(const ExperimentConfig& config, std::uint64_t seed) {
    const SearchSpace space = config.space();
    // F7 noise gets its own stream so it never perturbs the optimizer's draws
    const Objective objective = config.benchmark == "custom"
                                    ? config.custom_objective
                                    : objectives::make_objective(config.benchmark,
                                                                 seed ^ 0x9E3779B97F4A7C15ULL);
    OptimizerConfig oc;
    oc.pop = config.pop;
    oc.max_iter = config.max_iter;
    oc.seed = seed;
    switch (config.algorithm) {
        case Algorithm::msbwoa: return msbwoa::run(objective, space, oc, config.msbwoa);
        case Algorithm::bwoa: return bwoa::run(objective, space, oc, config.bwoa);
        case Algorithm::pso: return pso::run(objective, space, oc, config.pso);
        case Algorithm::ga: return ga::run(objective, space, oc, config.ga);
    }
    throw ConfigError("unknown algorithm");
}

std::size_t ExperimentReport::failed_count() const {
    return static_cast<std::size_t>(
        std::count_if(runs.begin(), runs.end(), [](const RunRecord& r) { return r.failed; }));
}

std::vector<double> ExperimentReport::final_scores() const {
    std::vector<double> out;
    for (const auto& r : runs)
        if (!r.failed) out.push_back(r.result.gbest_score);
    return out;
}

Vector ExperimentReport::mean_curve() const {
    std::vector<Vector> curves;
    for (const auto& r : runs)
        if (!r.failed) curves.push_back(r.result.curve);
    return stats::mean_curve(curves);
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    config.validate();
    ExperimentReport report;
    report.config = config;
    report.runs.resize(config.runs);

    auto execute = [&](std::size_t i) {
        RunRecord& rec = report.runs[i];
        rec.index = i;
        rec.seed = run_seed(config, i);
        try {
            rec.result = run_once(config, rec.seed);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            rec.failed = true;
            rec.error = e.what();
        }
    };

    const std::size_t workers = std::min(config.jobs, config.runs);
    if (workers <= 1) {
        for (std::size_t i = 0; i < config.runs; ++i) execute(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < config.runs; i = next++) {
                    try {
                        execute(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    const auto scores = report.final_scores();
    if (!scores.empty()) report.summary = stats::summarize(scores);
    return report;
}

std::vector<ExperimentReport> compare(const std::vector<ExperimentConfig>& configs) {
    if (configs.empty()) throw ConfigError("compare: no configurations");
    const ExperimentConfig& ref = configs.front();
    for (const auto& c : configs) {
        if (c.benchmark != ref.benchmark || c.resolved_dim() != ref.resolved_dim() ||
            c.pop != ref.pop || c.max_iter != ref.max_iter || c.runs != ref.runs)
            throw ConfigError(
                "compare: benchmark, dim, pop, max_iter and runs must match across algorithms");
    }
    for (const auto& c : configs) c.validate();
    std::vector<ExperimentReport> reports;
    for (const auto& c : configs) reports.push_back(run_experiment(c));
    return reports;
}

void write_outputs(const std::vector<ExperimentReport>& reports, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto labels = experiment_labels(reports);

    std::string summary =
        "algorithm,benchmark,dim,pop,max_iter,runs,failed,mean,std,median,best,worst\n";
    json experiments = json::array();

    for (std::size_t e = 0; e < reports.size(); ++e) {
        const ExperimentReport& rep = reports[e];
        const ExperimentConfig& c = rep.config;
        const std::string& label = labels[e];

        json runs = json::array();
        for (const auto& r : rep.runs) {
            json run{{"index", r.index}, {"seed", r.seed}};
            if (r.failed) {
                run["status"] = "failed";
                run["error"] = r.error;
            } else {
                const std::string file = "curve_" + label + "_" + std::to_string(r.index) + ".csv";
                write_text(dir / file, curve_csv(r.result.curve));
                run["status"] = "ok";
                run["gbest_score"] = number_or_text(r.result.gbest_score);
                run["curve_file"] = file;
            }
            runs.push_back(std::move(run));
        }
        if (rep.summary) write_text(dir / ("mean_curve_" + label + ".csv"), curve_csv(rep.mean_curve()));

        summary += label + "," + c.benchmark + "," + std::to_string(c.resolved_dim()) + "," +
                   std::to_string(c.pop) + "," + std::to_string(c.max_iter) + "," +
                   std::to_string(c.runs) + "," + std::to_string(rep.failed_count());
        if (rep.summary) {
            const auto& s = *rep.summary;
            for (double v : {s.mean, s.std, s.median, s.best, s.worst}) summary += "," + format_double(v);
        } else {
            summary += ",nan,nan,nan,nan,nan";
        }
        summary += "\n";

        experiments.push_back(json{{"label", label},
                                   {"config", config_json(c)},
                                   {"runs", std::move(runs)},
                                   {"failed", rep.failed_count()},
                                   {"summary", summary_json(rep.summary)}});
    }

    write_text(dir / "summary.csv", summary);
    json manifest{{"format", kManifestFormat}, {"experiments", std::move(experiments)}};
    write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

namespace {

json read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open manifest '" + path.string() + "'");
    json j;
    try {
        j = json::parse(read_text(in));
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("manifest: malformed JSON: ") + e.what());
    }
    if (!j.contains("format") || j["format"] != kManifestFormat || !j.contains("experiments"))
        throw ConfigError("manifest: not a widow manifest");
    return j;
}

}  // namespace

std::vector<ExperimentConfig> load_manifest(const std::filesystem::path& manifest) {
    const json j = read_manifest(manifest);
    std::vector<ExperimentConfig> configs;
    for (const auto& e : j["experiments"]) {
        ExperimentConfig c;
        apply_json(c, e.at("config"), "");
        configs.push_back(std::move(c));
    }
    return configs;
}

std::vector<std::optional<stats::StatsSummary>> load_manifest_summaries(
    const std::filesystem::path& manifest) {
    const json j = read_manifest(manifest);
    std::vector<std::optional<stats::StatsSummary>> out;
    for (const auto& e : j["experiments"]) {
        const json& s = e.at("summary");
        if (s.is_null()) {
            out.emplace_back();
            continue;
        }
        stats::StatsSummary sum;
        sum.count = s.at("count").get<std::size_t>();
        sum.mean = read_number(s.at("mean"));
        sum.std = read_number(s.at("std"));
        sum.median = read_number(s.at("median"));
        sum.best = read_number(s.at("best"));
        sum.worst = read_number(s.at("worst"));
        out.emplace_back(sum);
    }
    return out;
}

Vector read_curve_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::string line;
    if (!std::getline(in, line) || line != "iteration,best_fitness")
        throw std::runtime_error("'" + path.string() + "': unexpected header");
    Vector curve;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("'" + path.string() + "': bad row");
        curve.push_back(parse_double("best_fitness", std::string_view(line).substr(comma + 1)));
    }
    return curve;
}

std::string benchmarks_json() {
    json arr = json::array();
    for (const auto& s : objectives::registry()) {
        arr.push_back(json{{"id", s.id},
                           {"name", s.name},
                           {"dim", s.dim_default},
                           {"scalable", s.scalable},
                           {"lower", s.lower},
                           {"upper", s.upper},
                           {"known_min", s.known_min}});
    }
    return arr.dump(2);
}

DiagnosticKind parse_diagnostic_kind(std::string_view name) {
    if (name == "inertia") return DiagnosticKind::inertia;
    if (name == "schedules") return DiagnosticKind::schedules;
    if (name == "tent") return DiagnosticKind::tent;
    if (name == "sine") return DiagnosticKind::sine;
    throw ConfigError("unknown diagnostic kind '" + std::string(name) +
                      "' (expected inertia, schedules, tent or sine)");
}

DiagnosticsOutput diagnostics(const DiagnosticsOptions& o) {
    if (o.n < 1) throw ConfigError("diagnostics: n must be >= 1");
    DiagnosticsOutput out;
    const std::size_t t_max = std::max<std::size_t>(o.n - 1, 1);

    switch (o.kind) {
        case DiagnosticKind::inertia: {
            out.csv = "iteration,w_nonlinear,w_constant\n";
            for (std::size_t t = 0; t < o.n; ++t)
                out.csv += std::to_string(t) + "," +
                           format_double(msbwoa::w_schedule(std::min(t, t_max), t_max, o.variant)) +
                           "," + format_double(o.constant_w) + "\n";
            return out;
        }
        case DiagnosticKind::schedules: {
            out.csv = "iteration,w,k_min,k_max,u\n";
            for (std::size_t t = 0; t < o.n; ++t) {
                const std::size_t tc = std::min(t, t_max);
                out.csv += std::to_string(t) + "," +
                           format_double(msbwoa::w_schedule(tc, t_max, o.variant)) + "," +
                           format_double(msbwoa::k_schedule(tc, t_max, 1.0)) + "," +
                           format_double(msbwoa::k_schedule(tc, t_max, 0.0)) + "," +
                           format_double(msbwoa::u_schedule(tc, t_max)) + "\n";
            }
            return out;
        }
        case DiagnosticKind::tent:
        case DiagnosticKind::sine: {
            if (!(o.tent_u > 0.0 && o.tent_u < 1.0)) throw ConfigError("diagnostics: u must lie in (0, 1)");
            if (!(o.x0 > 0.0 && o.x0 < 1.0)) throw ConfigError("diagnostics: x0 must lie in (0, 1)");
            RngStream rng(o.seed);
            const auto kind = o.kind == DiagnosticKind::tent ? chaos::MapKind::tent : chaos::MapKind::sine;
            const Vector values = chaos::chaotic_sequence({o.tent_u, o.x0}, o.n, kind, rng);
            out.csv = "value\n";
            for (double v : values) out.csv += format_double(v) + "\n";
            out.histogram = chaos::unit_histogram(values, 10);
            out.histogram_csv = "bin_lower,bin_upper,frequency\n";
            for (std::size_t b = 0; b < out.histogram.size(); ++b)
                out.histogram_csv += format_double(static_cast<double>(b) / 10.0) + "," +
                                     format_double(static_cast<double>(b + 1) / 10.0) + "," +
                                     format_double(out.histogram[b]) + "\n";
            return out;
        }
    }
    return out;
}

}  // namespace widow::harness
