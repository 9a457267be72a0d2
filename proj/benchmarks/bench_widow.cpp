#include <benchmark/benchmark.h>

#include "widow/baselines.hpp"
#include "widow/bwoa.hpp"
#include "widow/msbwoa.hpp"
#include "widow/objectives.hpp"

namespace {

void BM_Objective(benchmark::State& state, const char* id) {
    const auto& spec = widow::objectives::find(id);
    const auto f = widow::objectives::make_objective(id, 0);
    const widow::Vector x(spec.dim_default, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(f(x));
}
BENCHMARK_CAPTURE(BM_Objective, F1, "F1");
BENCHMARK_CAPTURE(BM_Objective, F9, "F9");
BENCHMARK_CAPTURE(BM_Objective, F10, "F10");
BENCHMARK_CAPTURE(BM_Objective, F15, "F15");
BENCHMARK_CAPTURE(BM_Objective, F23, "F23");

template <typename Run>
void short_run(benchmark::State& state, Run run) {
    const auto f = widow::objectives::make_objective("F9", 0);
    const auto space = widow::objectives::find("F9").space(30);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const widow::OptimizerConfig cfg{30, 50, seed++, {}};
        benchmark::DoNotOptimize(run(f, space, cfg).gbest_score);
    }
}

void BM_Msbwoa(benchmark::State& s) {
    short_run(s, [](auto& f, auto& sp, auto& c) { return widow::msbwoa::run(f, sp, c); });
}
void BM_Bwoa(benchmark::State& s) {
    short_run(s, [](auto& f, auto& sp, auto& c) { return widow::bwoa::run(f, sp, c); });
}
void BM_Pso(benchmark::State& s) {
    short_run(s, [](auto& f, auto& sp, auto& c) { return widow::pso::run(f, sp, c); });
}
void BM_Ga(benchmark::State& s) {
    short_run(s, [](auto& f, auto& sp, auto& c) { return widow::ga::run(f, sp, c); });
}
BENCHMARK(BM_Msbwoa)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Bwoa)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pso)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ga)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
