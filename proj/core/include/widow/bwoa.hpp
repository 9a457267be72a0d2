#pragma once

#include <cstddef>
#include <utility>

#include "widow/core.hpp"
#include "widow/rng.hpp"

namespace widow::bwoa {

struct BwoaRates {
    double procreating_rate = 0.6;  // (0, 1]
    double cannibalism_rate = 0.44; // [0, 1)
    double mutation_rate = 0.4;     // [0, 1]

    /// Throws ConfigError when a rate leaves its interval.
    void validate() const;
};

/// Reproduction events per generation: round(procreating_rate * pop / 2).
std::size_t reproduction_count(const BwoaRates& rates, std::size_t pop);
/// Mutation events per generation: round(mutation_rate * pop).
std::size_t mutation_count(const BwoaRates& rates, std::size_t pop);
/// Size of the parent pool: ceil(procreating_rate * pop).
std::size_t parent_pool_size(const BwoaRates& rates, std::size_t pop);
/// Survivors of one brood of n: max(1, ceil((1 - cannibalism_rate) * n)).
std::size_t survivor_count(std::size_t n, double cannibalism_rate);

/// Paired arithmetic crossover with per-dimension weights alpha:
/// y1 = alpha*x1 + (1-alpha)*x2, y2 = alpha*x2 + (1-alpha)*x1.
std::pair<Vector, Vector> crossover(std::span<const double> x1, std::span<const double> x2,
                                    std::span<const double> alpha);

/// Brood of one pairing: ceil(dim/2) crossover rounds, two children each,
/// with a fresh uniform alpha vector per round. Children are clamped and
/// left unevaluated.
Population procreate(const Individual& parent1, const Individual& parent2,
                     const SearchSpace& space, RandomSource& rng);

/// Sort by fitness and keep the survivor_count best.
Population cannibalize(Population brood, double cannibalism_rate);

/// Copy of x with one uniformly chosen coordinate re-drawn uniformly inside
/// its bounds. Fitness is reset to +inf.
Individual mutate_member(const Individual& x, const SearchSpace& space, RandomSource& rng);

/// Black widow optimization with procreation, sibling cannibalism and
/// mutation. Requires pop >= 4, max_iter >= 1 and a parent pool of at least
/// two; throws ConfigError otherwise.
RunResult run(const Objective& objective, const SearchSpace& space, const OptimizerConfig& config,
              const BwoaRates& rates = {});

}  // namespace widow::bwoa
