#include "widow/baselines.hpp"

#include <algorithm>
#include <cmath>

namespace widow {

namespace {

void check_common(const OptimizerConfig& config, std::size_t min_pop, const char* name) {
    if (config.pop < min_pop)
        throw ConfigError(std::string(name) + ": pop must be >= " + std::to_string(min_pop));
    if (config.max_iter < 1) throw ConfigError(std::string(name) + ": max_iter must be >= 1");
}

}  // namespace

namespace pso {

void PsoParams::validate() const {
    if (!(inertia > 0.0 && cognitive > 0.0 && social > 0.0))
        throw ConfigError("pso: inertia, cognitive and social must be positive");
    if (!(vmax_fraction > 0.0 && vmax_fraction <= 1.0))
        throw ConfigError("pso: vmax_fraction must lie in (0, 1]");
}

Vector velocity_limits(const PsoParams& params, const SearchSpace& space) {
    Vector vmax(space.dim());
    for (std::size_t d = 0; d < space.dim(); ++d) vmax[d] = params.vmax_fraction * space.width(d);
    return vmax;
}

void update_velocity(Vector& velocity, std::span<const double> position,
                     std::span<const double> pbest, std::span<const double> gbest,
                     std::span<const double> vmax, const PsoParams& params, RandomSource& rng) {
    for (std::size_t d = 0; d < velocity.size(); ++d) {
        const double r1 = rng.uniform();
        const double r2 = rng.uniform();
        const double v = params.inertia * velocity[d] +
                         params.cognitive * r1 * (pbest[d] - position[d]) +
                         params.social * r2 * (gbest[d] - position[d]);
        velocity[d] = std::clamp(v, -vmax[d], vmax[d]);
    }
}

RunResult run(const Objective& objective, const SearchSpace& space, const OptimizerConfig& config,
              const PsoParams& params) {
    params.validate();
    check_common(config, 2, "pso");

    RngStream rng(config.seed);
    const Vector vmax = velocity_limits(params, space);
    const std::size_t dim = space.dim();

    Population swarm = init_population_uniform(space, config.pop, rng);
    std::vector<Vector> velocity(config.pop, Vector(dim));
    for (auto& v : velocity)
        for (std::size_t d = 0; d < dim; ++d) v[d] = rng.uniform(-vmax[d], vmax[d]);
    for (auto& p : swarm) p.fitness = widow::evaluate(objective, p.position);
    Population pbest = swarm;

    RunResult result = make_result(dim, config.max_iter);
    {
        Population ranked = pbest;
        sort_population(ranked);
        update_best(ranked, result);
    }
    if (config.observer) config.observer(0, "init", swarm);

    for (std::size_t t = 0; t < config.max_iter; ++t) {
        const Vector gbest = result.gbest_position;
        for (std::size_t i = 0; i < swarm.size(); ++i) {
            update_velocity(velocity[i], swarm[i].position, pbest[i].position, gbest, vmax, params,
                            rng);
            for (std::size_t d = 0; d < dim; ++d) swarm[i].position[d] += velocity[i][d];
            clamp_in_place(swarm[i].position, space);
            swarm[i].fitness = widow::evaluate(objective, swarm[i].position);
            if (swarm[i].fitness < pbest[i].fitness) pbest[i] = swarm[i];
        }
        if (config.observer) config.observer(t, "iteration", swarm);
        Population ranked = pbest;
        sort_population(ranked);
        record_best(ranked, result, t);
    }
    return result;
}

}  // namespace pso

namespace ga {

void GaParams::validate(std::size_t pop) const {
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0))
        throw ConfigError("ga: crossover_prob must lie in [0, 1]");
    if (mutation_prob > 1.0) throw ConfigError("ga: mutation_prob must lie in [0, 1]");
    if (tournament_size < 2) throw ConfigError("ga: tournament_size must be >= 2");
    if (tournament_size > pop) throw ConfigError("ga: tournament_size must not exceed pop");
    if (!(blend_alpha >= 0.0)) throw ConfigError("ga: blend_alpha must be >= 0");
}

double GaParams::mutation_prob_for(std::size_t dim) const {
    return mutation_prob < 0.0 ? 1.0 / static_cast<double>(dim) : mutation_prob;
}

std::size_t tournament(const Population& pop, std::size_t size, RandomSource& rng) {
    std::size_t best = rng.index(pop.size());
    for (std::size_t i = 1; i < size; ++i) {
        const std::size_t c = rng.index(pop.size());
        if (pop[c].fitness < pop[best].fitness) best = c;
    }
    return best;
}

std::pair<Vector, Vector> blend_crossover(std::span<const double> x1, std::span<const double> x2,
                                          double alpha, RandomSource& rng) {
    if (x1.size() != x2.size()) throw ContractError("blend_crossover: dimension mismatch");
    Vector c1(x1.size());
    Vector c2(x1.size());
    for (std::size_t d = 0; d < x1.size(); ++d) {
        const double lo = std::min(x1[d], x2[d]);
        const double hi = std::max(x1[d], x2[d]);
        const double ext = alpha * (hi - lo);
        c1[d] = rng.uniform(lo - ext, hi + ext);
        c2[d] = rng.uniform(lo - ext, hi + ext);
    }
    return {std::move(c1), std::move(c2)};
}

RunResult run(const Objective& objective, const SearchSpace& space, const OptimizerConfig& config,
              const GaParams& params) {
    check_common(config, 4, "ga");
    if (config.pop % 2 != 0) throw ConfigError("ga: pop must be even");
    params.validate(config.pop);

    RngStream rng(config.seed);
    const double pm = params.mutation_prob_for(space.dim());

    Population pop = init_population_uniform(space, config.pop, rng);
    evaluate_and_sort(pop, objective);
    RunResult result = make_result(space.dim(), config.max_iter);
    update_best(pop, result);
    if (config.observer) config.observer(0, "init", pop);

    auto finish_child = [&](Vector x) {
        for (std::size_t d = 0; d < x.size(); ++d)
            if (rng.uniform() < pm) x[d] = rng.uniform(space.lower(d), space.upper(d));
        clamp_in_place(x, space);
        const double f = widow::evaluate(objective, x);
        return Individual{std::move(x), f};
    };

    for (std::size_t t = 0; t < config.max_iter; ++t) {
        Population next;
        next.reserve(config.pop);
        next.push_back(pop.front());
        while (next.size() < config.pop) {
            const Individual& a = pop[tournament(pop, params.tournament_size, rng)];
            const Individual& b = pop[tournament(pop, params.tournament_size, rng)];
            Vector c1 = a.position;
            Vector c2 = b.position;
            if (rng.uniform() < params.crossover_prob)
                std::tie(c1, c2) = blend_crossover(a.position, b.position, params.blend_alpha, rng);
            next.push_back(finish_child(std::move(c1)));
            if (next.size() < config.pop) next.push_back(finish_child(std::move(c2)));
        }
        sort_population(next);
        pop = std::move(next);
        if (config.observer) config.observer(t, "iteration", pop);
        record_best(pop, result, t);
    }
    return result;
}

}  // namespace ga

}  // namespace widow
