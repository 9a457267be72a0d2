#pragma once

#include <cstddef>
#include <utility>

#include "widow/core.hpp"
#include "widow/rng.hpp"

namespace widow::pso {

/// Constriction-coefficient defaults.
struct PsoParams {
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
    /// Velocity limit as a fraction of each dimension's width.
    double vmax_fraction = 0.2;

    void validate() const;
};

/// Per-dimension velocity limit vmax_fraction * (ub - lb).
Vector velocity_limits(const PsoParams& params, const SearchSpace& space);

/// One velocity update: w*v + c1*r1*(pbest - x) + c2*r2*(gbest - x), each
/// component clamped to [-vmax, vmax]. Draws r1 then r2 per dimension.
void update_velocity(Vector& velocity, std::span<const double> position,
                     std::span<const double> pbest, std::span<const double> gbest,
                     std::span<const double> vmax, const PsoParams& params, RandomSource& rng);

/// Global-best PSO with velocity clamping. Requires pop >= 2, max_iter >= 1.
RunResult run(const Objective& objective, const SearchSpace& space, const OptimizerConfig& config,
              const PsoParams& params = {});

}  // namespace widow::pso

namespace widow::ga {

struct GaParams {
    double crossover_prob = 0.9;
    /// Per-gene mutation probability; a negative value means 1 / dim.
    double mutation_prob = -1.0;
    std::size_t tournament_size = 2;
    /// BLX-alpha extension of the parent interval.
    double blend_alpha = 0.5;

    void validate(std::size_t pop) const;
    double mutation_prob_for(std::size_t dim) const;
};

/// Index of the fittest of `size` members drawn uniformly with replacement.
std::size_t tournament(const Population& pop, std::size_t size, RandomSource& rng);

/// BLX-alpha: each child coordinate is uniform on
/// [min - alpha*I, max + alpha*I] with I = |x1 - x2|. Not clamped.
std::pair<Vector, Vector> blend_crossover(std::span<const double> x1, std::span<const double> x2,
                                          double alpha, RandomSource& rng);

/// Real-coded GA: tournament selection, blend crossover, per-gene uniform
/// mutation, elitism of one. Requires an even pop >= 4, max_iter >= 1.
RunResult run(const Objective& objective, const SearchSpace& space, const OptimizerConfig& config,
              const GaParams& params = {});

}  // namespace widow::ga
