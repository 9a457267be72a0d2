#pragma once

#include <cstddef>
#include <string_view>

#include "widow/core.hpp"
#include "widow/rng.hpp"

namespace widow::msbwoa {

/// Inertia-weight schedule shapes. `cos_sin_sqrt` is the default:
/// w(t) = cos(pi/2 * sin(sqrt(t / t_max))). `literal` is the product
/// cos(pi/2) * sin(sqrt(t / t_max)), which is zero to rounding and is kept
/// only so it can be compared against.
enum class InertiaVariant { cos_sin_sqrt, cos_sqrt, literal };

InertiaVariant parse_inertia_variant(std::string_view name);
std::string_view to_string(InertiaVariant variant);

struct MsbwoaParams {
    double tent_u = 0.499;
    InertiaVariant inertia = InertiaVariant::cos_sin_sqrt;

    void validate() const;
};

/// Mutation scale k = 1 - r * (1 - (t / t_max)^2), in [0, 1].
double k_schedule(std::size_t t, std::size_t t_max, double r);

/// Inertia weight for iteration t of t_max.
double w_schedule(std::size_t t, std::size_t t_max,
                  InertiaVariant variant = InertiaVariant::cos_sin_sqrt);

/// Perturbation radius coefficient u = 1 - sqrt(t / t_max), in [0, 1].
double u_schedule(std::size_t t, std::size_t t_max);

/// Per-iteration schedule values. t is 0-based and t < t_max inside a run.
struct ScheduleState {
    std::size_t t = 0;
    std::size_t t_max = 1;
    double w = 1.0;
    double u = 1.0;

    static ScheduleState at(std::size_t t, std::size_t t_max,
                            InertiaVariant variant = InertiaVariant::cos_sin_sqrt);
};

/// X_worst * (1 + k * n), per dimension, before clamping.
Vector mutation_candidate(std::span<const double> worst, double k, std::span<const double> n);

/// w * X + r1 * (X_gbest - X), per dimension, before clamping.
Vector inertia_candidate(std::span<const double> x, std::span<const double> gbest, double w,
                         std::span<const double> r1);

/// X + u * (ub - lb) * r~ when coin >= 0.5, X - u * (ub - lb) * r~ otherwise,
/// before clamping.
Vector perturbation_candidate(std::span<const double> x, double u, double coin,
                              std::span<const double> magnitude, const SearchSpace& space);

/// Mutate the last (worst) member of a sorted population. Draws r for k, then
/// one standard normal per dimension. The clamped candidate replaces the worst
/// member only if strictly better. Returns true on replacement.
bool mutate_worst(Population& pop, const ScheduleState& state, RandomSource& rng,
                  const SearchSpace& space, const Objective& objective);

/// For each member in order: draw r1 per dimension, pull toward gbest with
/// inertia w, clamp, evaluate, greedy-accept. gbest is fixed for the stage.
/// Returns the number of accepted moves.
std::size_t inertia_update(Population& pop, std::span<const double> gbest,
                           const ScheduleState& state, RandomSource& rng, const SearchSpace& space,
                           const Objective& objective);

/// For each member in order: draw the direction coin, then one magnitude per
/// dimension; step by u * (ub - lb) * magnitude, clamp, evaluate,
/// greedy-accept. Returns the number of accepted moves.
std::size_t random_perturbation(Population& pop, const ScheduleState& state, RandomSource& rng,
                                const SearchSpace& space, const Objective& objective);

/// Full multi-strategy run: tent-map initialization, then per iteration
/// mutate_worst, inertia_update, random_perturbation, sort and record.
/// Observer stages: "init", "mutate_worst", "inertia", "perturbation",
/// "iteration". Throws ConfigError for pop < 2, max_iter < 1 or bad params.
RunResult run(const Objective& objective, const SearchSpace& space, const OptimizerConfig& config,
              const MsbwoaParams& params = {});

/// Same as run() but drawing from a caller-supplied source instead of a
/// stream seeded from config.seed.
RunResult run_with(const Objective& objective, const SearchSpace& space,
                   const OptimizerConfig& config, const MsbwoaParams& params, RandomSource& rng);

}  // namespace widow::msbwoa
