#include "widow/msbwoa.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "widow/chaos.hpp"

namespace widow::msbwoa {

using std::numbers::pi;

namespace {

double progress(std::size_t t, std::size_t t_max) {
    if (t_max == 0) throw ContractError("schedule: t_max must be >= 1");
    if (t > t_max) throw ContractError("schedule: t must not exceed t_max");
    return static_cast<double>(t) / static_cast<double>(t_max);
}

}  // namespace

InertiaVariant parse_inertia_variant(std::string_view name) {
    if (name == "cos_sin_sqrt") return InertiaVariant::cos_sin_sqrt;
    if (name == "cos_sqrt") return InertiaVariant::cos_sqrt;
    if (name == "literal") return InertiaVariant::literal;
    throw ConfigError("unknown inertia variant '" + std::string(name) +
                      "' (expected cos_sin_sqrt, cos_sqrt or literal)");
}

std::string_view to_string(InertiaVariant variant) {
    switch (variant) {
        case InertiaVariant::cos_sin_sqrt: return "cos_sin_sqrt";
        case InertiaVariant::cos_sqrt: return "cos_sqrt";
        case InertiaVariant::literal: return "literal";
    }
    return "cos_sin_sqrt";
}

void MsbwoaParams::validate() const {
    if (!(tent_u > 0.0 && tent_u < 1.0)) throw ConfigError("msbwoa: tent.u must lie in (0, 1)");
}

double k_schedule(std::size_t t, std::size_t t_max, double r) {
    const double p = progress(t, t_max);
    return 1.0 - r * (1.0 - p * p);
}

double w_schedule(std::size_t t, std::size_t t_max, InertiaVariant variant) {
    const double p = progress(t, t_max);
    switch (variant) {
        case InertiaVariant::cos_sin_sqrt: return std::cos(pi / 2.0 * std::sin(std::sqrt(p)));
        case InertiaVariant::cos_sqrt: return std::cos(pi / 2.0 * std::sqrt(p));
        case InertiaVariant::literal: return std::cos(pi / 2.0) * std::sin(std::sqrt(p));
    }
    return 1.0;
}

double u_schedule(std::size_t t, std::size_t t_max) { return 1.0 - std::sqrt(progress(t, t_max)); }

ScheduleState ScheduleState::at(std::size_t t, std::size_t t_max, InertiaVariant variant) {
    return ScheduleState{t, t_max, w_schedule(t, t_max, variant), u_schedule(t, t_max)};
}

Vector mutation_candidate(std::span<const double> worst, double k, std::span<const double> n) {
    if (worst.size() != n.size()) throw ContractError("mutation_candidate: dimension mismatch");
    Vector out(worst.size());
    for (std::size_t d = 0; d < worst.size(); ++d) out[d] = worst[d] * (1.0 + k * n[d]);
    return out;
}

Vector inertia_candidate(std::span<const double> x, std::span<const double> gbest, double w,
                         std::span<const double> r1) {
    if (x.size() != gbest.size() || x.size() != r1.size())
        throw ContractError("inertia_candidate: dimension mismatch");
    Vector out(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) out[d] = w * x[d] + r1[d] * (gbest[d] - x[d]);
    return out;
}

Vector perturbation_candidate(std::span<const double> x, double u, double coin,
                              std::span<const double> magnitude, const SearchSpace& space) {
    if (x.size() != magnitude.size() || x.size() != space.dim())
        throw ContractError("perturbation_candidate: dimension mismatch");
    const double sign = coin >= 0.5 ? 1.0 : -1.0;
    Vector out(x.size());
    for (std::size_t d = 0; d < x.size(); ++d)
        out[d] = x[d] + sign * (u * (space.width(d) * magnitude[d]));
    return out;
}

namespace {

bool accept_if_better(Individual& member, Vector candidate, const SearchSpace& space,
                      const Objective& objective) {
    clamp_in_place(candidate, space);
    const double fitness = widow::evaluate(objective, candidate);
    if (fitness < member.fitness) {
        member.position = std::move(candidate);
        member.fitness = fitness;
        return true;
    }
    return false;
}

}  // namespace

bool mutate_worst(Population& pop, const ScheduleState& state, RandomSource& rng,
                  const SearchSpace& space, const Objective& objective) {
    if (pop.empty()) throw ContractError("mutate_worst: empty population");
    Individual& worst = pop.back();
    const double k = k_schedule(state.t, state.t_max, rng.uniform());
    Vector n(space.dim());
    for (double& v : n) v = rng.normal();
    return accept_if_better(worst, mutation_candidate(worst.position, k, n), space, objective);
}

std::size_t inertia_update(Population& pop, std::span<const double> gbest,
                           const ScheduleState& state, RandomSource& rng, const SearchSpace& space,
                           const Objective& objective) {
    std::size_t accepted = 0;
    Vector r1(space.dim());
    for (auto& member : pop) {
        for (double& v : r1) v = rng.uniform();
        if (accept_if_better(member, inertia_candidate(member.position, gbest, state.w, r1), space,
                             objective))
            ++accepted;
    }
    return accepted;
}

std::size_t random_perturbation(Population& pop, const ScheduleState& state, RandomSource& rng,
                                const SearchSpace& space, const Objective& objective) {
    std::size_t accepted = 0;
    Vector magnitude(space.dim());
    for (auto& member : pop) {
        const double coin = rng.uniform();
        for (double& v : magnitude) v = rng.uniform();
        if (accept_if_better(member,
                             perturbation_candidate(member.position, state.u, coin, magnitude, space),
                             space, objective))
            ++accepted;
    }
    return accepted;
}

RunResult run_with(const Objective& objective, const SearchSpace& space,
                   const OptimizerConfig& config, const MsbwoaParams& params, RandomSource& rng) {
    params.validate();
    if (config.pop < 2) throw ConfigError("msbwoa: pop must be >= 2");
    if (config.max_iter < 1) throw ConfigError("msbwoa: max_iter must be >= 1");

    auto notify = [&](std::size_t t, std::string_view stage, const Population& p) {
        if (config.observer) config.observer(t, stage, p);
    };

    Population pop = chaos::init_population_tent(space, config.pop, rng, params.tent_u);
    evaluate_and_sort(pop, objective);
    RunResult result = make_result(space.dim(), config.max_iter);
    update_best(pop, result);
    notify(0, "init", pop);

    for (std::size_t t = 0; t < config.max_iter; ++t) {
        const ScheduleState state = ScheduleState::at(t, config.max_iter, params.inertia);

        mutate_worst(pop, state, rng, space, objective);
        notify(t, "mutate_worst", pop);

        const Vector gbest = result.gbest_position;
        inertia_update(pop, gbest, state, rng, space, objective);
        notify(t, "inertia", pop);

        random_perturbation(pop, state, rng, space, objective);
        notify(t, "perturbation", pop);

        sort_population(pop);
        notify(t, "iteration", pop);
        record_best(pop, result, t);
    }
    return result;
}

RunResult run(const Objective& objective, const SearchSpace& space, const OptimizerConfig& config,
              const MsbwoaParams& params) {
    RngStream rng(config.seed);
    return run_with(objective, space, config, params, rng);
}

}  // namespace widow::msbwoa
