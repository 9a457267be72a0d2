#include "widow/core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>

#include "widow/rng.hpp"

namespace widow {

namespace {
std::atomic<std::uint64_t> g_nonfinite{0};
}

SearchSpace::SearchSpace(Vector lower, Vector upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) throw ContractError("SearchSpace: dim must be >= 1");
    if (lower_.size() != upper_.size())
        throw ContractError("SearchSpace: lower/upper length mismatch");
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!(lower_[i] < upper_[i]))
            throw ContractError("SearchSpace: lower bound must be below upper bound in dimension " +
                                std::to_string(i));
    }
}

SearchSpace SearchSpace::uniform(std::size_t dim, double lower, double upper) {
    return SearchSpace(Vector(dim, lower), Vector(dim, upper));
}

bool SearchSpace::contains(std::span<const double> position) const {
    if (position.size() != dim()) return false;
    for (std::size_t i = 0; i < position.size(); ++i) {
        if (!(position[i] >= lower_[i] && position[i] <= upper_[i])) return false;
    }
    return true;
}

void clamp_in_place(Vector& position, const SearchSpace& space) {
    if (position.size() != space.dim())
        throw ContractError("clamp_to_bounds: position has " + std::to_string(position.size()) +
                            " components, space has " + std::to_string(space.dim()));
    for (std::size_t i = 0; i < position.size(); ++i)
        position[i] = std::clamp(position[i], space.lower(i), space.upper(i));
}

Vector clamp_to_bounds(std::span<const double> position, const SearchSpace& space) {
    Vector out(position.begin(), position.end());
    clamp_in_place(out, space);
    return out;
}

Population init_population_uniform(const SearchSpace& space, std::size_t pop, RandomSource& rng) {
    Population population(pop);
    for (auto& member : population) {
        member.position.resize(space.dim());
        for (std::size_t d = 0; d < space.dim(); ++d)
            member.position[d] = rng.uniform(space.lower(d), space.upper(d));
    }
    return population;
}

double evaluate(const Objective& objective, std::span<const double> position) {
    const double value = objective(position);
    if (std::isfinite(value)) return value;
    if (g_nonfinite.fetch_add(1, std::memory_order_relaxed) == 0)
        std::clog << "widow: warning: objective returned a non-finite value; "
                     "treating it as +inf (further occurrences are counted silently)\n";
    return kInf;
}

std::uint64_t nonfinite_evaluations() { return g_nonfinite.load(std::memory_order_relaxed); }

void sort_population(Population& pop) {
    std::stable_sort(pop.begin(), pop.end(), [](const Individual& a, const Individual& b) {
        return a.fitness < b.fitness;
    });
}

void evaluate_and_sort(Population& pop, const Objective& objective) {
    for (auto& member : pop) member.fitness = evaluate(objective, member.position);
    sort_population(pop);
}

RunResult make_result(std::size_t dim, std::size_t max_iter) {
    RunResult result;
    result.gbest_position.reserve(dim);
    result.curve.assign(max_iter, kInf);
    return result;
}

bool update_best(const Population& pop, RunResult& result) {
    if (pop.empty()) throw ContractError("update_best: empty population");
    const Individual& best = pop.front();
    if (best.fitness < result.gbest_score || result.gbest_position.empty()) {
        result.gbest_score = best.fitness;
        result.gbest_position = best.position;
        return true;
    }
    return false;
}

void record_best(const Population& pop, RunResult& result, std::size_t t) {
    if (t >= result.curve.size()) throw ContractError("record_best: iteration out of range");
    update_best(pop, result);
    result.curve[t] = result.gbest_score;
}

}  // namespace widow
