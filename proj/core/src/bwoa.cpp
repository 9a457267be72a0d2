#include "widow/bwoa.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace widow::bwoa {

namespace {

// ceil that ignores representation error just above an integer
std::size_t ceil_count(double x) {
    return static_cast<std::size_t>(std::max(0.0, std::ceil(x - 1e-9)));
}

}  // namespace

void BwoaRates::validate() const {
    if (!(procreating_rate > 0.0 && procreating_rate <= 1.0))
        throw ConfigError("bwoa: procreating_rate must lie in (0, 1]");
    if (!(cannibalism_rate >= 0.0 && cannibalism_rate < 1.0))
        throw ConfigError("bwoa: cannibalism_rate must lie in [0, 1)");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0))
        throw ConfigError("bwoa: mutation_rate must lie in [0, 1]");
}

std::size_t reproduction_count(const BwoaRates& rates, std::size_t pop) {
    return static_cast<std::size_t>(std::lround(rates.procreating_rate * static_cast<double>(pop) / 2.0));
}

std::size_t mutation_count(const BwoaRates& rates, std::size_t pop) {
    return static_cast<std::size_t>(std::lround(rates.mutation_rate * static_cast<double>(pop)));
}

std::size_t parent_pool_size(const BwoaRates& rates, std::size_t pop) {
    return std::min(pop, ceil_count(rates.procreating_rate * static_cast<double>(pop)));
}

std::size_t survivor_count(std::size_t n, double cannibalism_rate) {
    if (n == 0) return 0;
    return std::clamp<std::size_t>(ceil_count((1.0 - cannibalism_rate) * static_cast<double>(n)), 1, n);
}

std::pair<Vector, Vector> crossover(std::span<const double> x1, std::span<const double> x2,
                                    std::span<const double> alpha) {
    if (x1.size() != x2.size() || x1.size() != alpha.size())
        throw ContractError("crossover: dimension mismatch");
    Vector y1(x1.size());
    Vector y2(x1.size());
    for (std::size_t d = 0; d < x1.size(); ++d) {
        y1[d] = alpha[d] * x1[d] + (1.0 - alpha[d]) * x2[d];
        y2[d] = alpha[d] * x2[d] + (1.0 - alpha[d]) * x1[d];
    }
    return {std::move(y1), std::move(y2)};
}

Population procreate(const Individual& parent1, const Individual& parent2,
                     const SearchSpace& space, RandomSource& rng) {
    const std::size_t dim = space.dim();
    if (parent1.position.size() != dim || parent2.position.size() != dim)
        throw ContractError("procreate: parent dimension mismatch");
    const std::size_t rounds = (dim + 1) / 2;
    Population brood;
    brood.reserve(2 * rounds);
    Vector alpha(dim);
    for (std::size_t r = 0; r < rounds; ++r) {
        for (double& a : alpha) a = rng.uniform();
        auto [y1, y2] = crossover(parent1.position, parent2.position, alpha);
        clamp_in_place(y1, space);
        clamp_in_place(y2, space);
        brood.push_back(Individual{std::move(y1), kInf});
        brood.push_back(Individual{std::move(y2), kInf});
    }
    return brood;
}

Population cannibalize(Population brood, double cannibalism_rate) {
    sort_population(brood);
    brood.resize(survivor_count(brood.size(), cannibalism_rate));
    return brood;
}

Individual mutate_member(const Individual& x, const SearchSpace& space, RandomSource& rng) {
    if (x.position.size() != space.dim()) throw ContractError("mutate_member: dimension mismatch");
    Individual out{x.position, kInf};
    const std::size_t d = rng.index(space.dim());
    out.position[d] = rng.uniform(space.lower(d), space.upper(d));
    clamp_in_place(out.position, space);
    return out;
}

RunResult run(const Objective& objective, const SearchSpace& space, const OptimizerConfig& config,
              const BwoaRates& rates) {
    rates.validate();
    if (config.pop < 4) throw ConfigError("bwoa: pop must be >= 4");
    if (config.max_iter < 1) throw ConfigError("bwoa: max_iter must be >= 1");
    const std::size_t pool_size = parent_pool_size(rates, config.pop);
    if (pool_size < 2)
        throw ConfigError("bwoa: procreating_rate * pop must select at least two parents");
    const std::size_t nr = reproduction_count(rates, config.pop);
    const std::size_t nm = mutation_count(rates, config.pop);

    RngStream rng(config.seed);
    auto notify = [&](std::size_t t, std::string_view stage, const Population& p) {
        if (config.observer) config.observer(t, stage, p);
    };

    Population pop = init_population_uniform(space, config.pop, rng);
    evaluate_and_sort(pop, objective);
    RunResult result = make_result(space.dim(), config.max_iter);
    update_best(pop, result);
    notify(0, "init", pop);

    for (std::size_t t = 0; t < config.max_iter; ++t) {
        const Population pool(pop.begin(), pop.begin() + static_cast<std::ptrdiff_t>(pool_size));

        Population offspring;
        for (std::size_t i = 0; i < nr; ++i) {
            const std::size_t a = rng.index(pool_size);
            std::size_t b = rng.index(pool_size - 1);
            if (b >= a) ++b;
            Population brood = procreate(pool[a], pool[b], space, rng);
            for (auto& child : brood) child.fitness = widow::evaluate(objective, child.position);
            for (auto& survivor : cannibalize(std::move(brood), rates.cannibalism_rate))
                offspring.push_back(std::move(survivor));
        }

        Population mutants;
        mutants.reserve(nm);
        for (std::size_t i = 0; i < nm; ++i) {
            Individual m = mutate_member(pool[rng.index(pool_size)], space, rng);
            m.fitness = widow::evaluate(objective, m.position);
            mutants.push_back(std::move(m));
        }

        // current generation first so ties favour incumbents; keeps the elite
        Population merged = std::move(pop);
        merged.insert(merged.end(), std::make_move_iterator(offspring.begin()),
                      std::make_move_iterator(offspring.end()));
        merged.insert(merged.end(), std::make_move_iterator(mutants.begin()),
                      std::make_move_iterator(mutants.end()));
        sort_population(merged);
        merged.resize(config.pop);
        pop = std::move(merged);

        notify(t, "iteration", pop);
        record_best(pop, result, t);
    }
    return result;
}

}  // namespace widow::bwoa
