#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "widow/baselines.hpp"
#include "widow/objectives.hpp"

using namespace widow;

TEST_CASE("pso parameter validation") {
    CHECK_NOTHROW(pso::PsoParams{}.validate());
    CHECK_THROWS_AS((pso::PsoParams{0.7, 1.5, 1.5, 0.0}.validate()), ConfigError);
    CHECK_THROWS_AS((pso::PsoParams{0.7, 1.5, 1.5, 1.5}.validate()), ConfigError);
    CHECK_THROWS_AS((pso::PsoParams{-0.7, 1.5, 1.5, 0.2}.validate()), ConfigError);
    OptimizerConfig cfg;
    cfg.pop = 1;
    CHECK_THROWS_AS(pso::run(objectives::sphere, SearchSpace::uniform(2, -1, 1), cfg), ConfigError);
}

TEST_CASE("velocities never exceed vmax") {
    const auto space = SearchSpace::uniform(5, -100, 100);
    const pso::PsoParams params{};
    const auto vmax = pso::velocity_limits(params, space);
    CHECK(vmax[0] == doctest::Approx(40.0));
    RngStream rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        Vector v(5), x(5), pb(5), gb(5);
        for (std::size_t d = 0; d < 5; ++d) {
            v[d] = rng.uniform(-200, 200);
            x[d] = rng.uniform(-100, 100);
            pb[d] = rng.uniform(-100, 100);
            gb[d] = rng.uniform(-100, 100);
        }
        pso::update_velocity(v, x, pb, gb, vmax, params, rng);
        for (std::size_t d = 0; d < 5; ++d) REQUIRE(std::abs(v[d]) <= vmax[d]);
    }
}

TEST_CASE("pso solves the 2-d sphere") {
    OptimizerConfig cfg;
    cfg.pop = 20;
    cfg.max_iter = 200;
    cfg.seed = 5;
    const auto r = pso::run(objectives::sphere, SearchSpace::uniform(2, -100, 100), cfg);
    CHECK(r.gbest_score < 1e-4);

    // random search with the same evaluation budget is worse
    RngStream rng(5);
    double best = kInf;
    for (int i = 0; i < 20 * 201; ++i)
        best = std::min(best, objectives::sphere(std::vector{rng.uniform(-100, 100), rng.uniform(-100, 100)}));
    CHECK(r.gbest_score < best);
}

TEST_CASE("pso flat landscape") {
    OptimizerConfig cfg;
    cfg.pop = 5;
    cfg.max_iter = 10;
    const auto r = pso::run([](std::span<const double>) { return -1.0; }, SearchSpace::uniform(2, -1, 1), cfg);
    for (double c : r.curve) CHECK(c == -1.0);
}

TEST_CASE("ga parameter validation") {
    CHECK_NOTHROW(ga::GaParams{}.validate(10));
    CHECK_THROWS_AS((ga::GaParams{1.5}.validate(10)), ConfigError);
    CHECK_THROWS_AS((ga::GaParams{0.9, -1.0, 1}.validate(10)), ConfigError);
    CHECK_THROWS_AS((ga::GaParams{0.9, -1.0, 12}.validate(10)), ConfigError);
    CHECK(ga::GaParams{}.mutation_prob_for(4) == 0.25);
    OptimizerConfig cfg;
    cfg.pop = 5;
    CHECK_THROWS_AS(ga::run(objectives::sphere, SearchSpace::uniform(2, -1, 1), cfg), ConfigError);
    cfg.pop = 2;
    CHECK_THROWS_AS(ga::run(objectives::sphere, SearchSpace::uniform(2, -1, 1), cfg), ConfigError);
}

TEST_CASE("blend crossover children lie in the extended parent interval") {
    RngStream rng(12);
    for (int trial = 0; trial < 2000; ++trial) {
        Vector a(3), b(3);
        for (std::size_t d = 0; d < 3; ++d) {
            a[d] = rng.uniform(-10, 10);
            b[d] = rng.uniform(-10, 10);
        }
        const double alpha = rng.uniform(0, 1);
        auto [c1, c2] = ga::blend_crossover(a, b, alpha, rng);
        for (std::size_t d = 0; d < 3; ++d) {
            const double lo = std::min(a[d], b[d]);
            const double hi = std::max(a[d], b[d]);
            const double ext = alpha * (hi - lo);
            REQUIRE(c1[d] >= lo - ext - 1e-12);
            REQUIRE(c1[d] <= hi + ext + 1e-12);
            REQUIRE(c2[d] >= lo - ext - 1e-12);
            REQUIRE(c2[d] <= hi + ext + 1e-12);
        }
    }
}

TEST_CASE("tournament picks the fitter of its draws") {
    Population pop{{{0.0}, 3.0}, {{1.0}, 1.0}, {{2.0}, 2.0}};
    RngStream rng(1);
    for (int i = 0; i < 200; ++i) CHECK(pop[ga::tournament(pop, 3, rng)].fitness <= 3.0);
    // with size = 50 the best member wins almost surely
    int best = 0;
    for (int i = 0; i < 200; ++i) best += ga::tournament(pop, 50, rng) == 1;
    CHECK(best == 200);
}

TEST_CASE("ga without variation keeps a flat curve") {
    OptimizerConfig cfg;
    cfg.pop = 10;
    cfg.max_iter = 30;
    cfg.seed = 4;
    double initial = 0.0;
    cfg.observer = [&](std::size_t, std::string_view stage, const Population& p) {
        if (stage == "init") initial = p.front().fitness;
    };
    const auto r = ga::run(objectives::sphere, SearchSpace::uniform(3, -5, 5), cfg, ga::GaParams{0.0, 0.0});
    for (double c : r.curve) CHECK(c == initial);
}

TEST_CASE("ga elitism never regresses") {
    OptimizerConfig cfg;
    cfg.pop = 20;
    cfg.max_iter = 200;
    cfg.seed = 9;
    double initial = 0.0;
    double last_best = kInf;
    cfg.observer = [&](std::size_t, std::string_view stage, const Population& p) {
        if (stage == "init") initial = p.front().fitness;
        REQUIRE(p.front().fitness <= last_best);
        last_best = p.front().fitness;
    };
    const auto r = ga::run(objectives::sphere, SearchSpace::uniform(2, -100, 100), cfg);
    CHECK(r.gbest_score <= initial);
}
