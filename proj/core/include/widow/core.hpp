#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace widow {

class RandomSource;

using Vector = std::vector<double>;

/// Objective to minimize. Must be pure with respect to shared state.
using Objective = std::function<double(std::span<const double>)>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A precondition of a library call was violated by the caller.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An optimizer or experiment configuration is invalid.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Feasible box: per-dimension lower and upper bounds with lb[i] < ub[i].
class SearchSpace {
public:
    SearchSpace(Vector lower, Vector upper);
    static SearchSpace uniform(std::size_t dim, double lower, double upper);

    std::size_t dim() const { return lower_.size(); }
    const Vector& lower() const { return lower_; }
    const Vector& upper() const { return upper_; }
    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }
    double width(std::size_t i) const { return upper_[i] - lower_[i]; }

    bool contains(std::span<const double> position) const;

private:
    Vector lower_;
    Vector upper_;
};

struct Individual {
    Vector position;
    double fitness = kInf;
};

/// Fitness-sorted (best first) after evaluate_and_sort.
using Population = std::vector<Individual>;

/// Best-so-far bookkeeping for one optimizer run.
struct RunResult {
    double gbest_score = kInf;
    Vector gbest_position;
    /// Global best after each iteration; length max_iter.
    Vector curve;

    bool operator==(const RunResult&) const = default;
};

/// Called after each named stage of an iteration with the current population.
/// Stage names: "init" (iteration 0, before the loop), "iteration" (end of every
/// iteration, after sorting), plus algorithm-specific stages.
using StageObserver =
    std::function<void(std::size_t iteration, std::string_view stage, const Population&)>;

/// Settings shared by every optimizer.
struct OptimizerConfig {
    std::size_t pop = 30;
    std::size_t max_iter = 500;
    std::uint64_t seed = 0;
    StageObserver observer;
};

/// Clip every component into [lb[i], ub[i]]. Throws ContractError on a
/// dimension mismatch.
Vector clamp_to_bounds(std::span<const double> position, const SearchSpace& space);
void clamp_in_place(Vector& position, const SearchSpace& space);

/// pop members drawn uniformly in the box, fitness left at +inf.
Population init_population_uniform(const SearchSpace& space, std::size_t pop, RandomSource& rng);

/// Objective value with non-finite results mapped to +infinity.
double evaluate(const Objective& objective, std::span<const double> position);

/// Stable ascending sort by fitness; equal fitness keeps original order.
void sort_population(Population& pop);

/// Refresh every member's fitness, then sort.
void evaluate_and_sort(Population& pop, const Objective& objective);

/// Empty result sized for a run of max_iter iterations.
RunResult make_result(std::size_t dim, std::size_t max_iter);

/// Adopt the population best if it improves on the global best (or no best
/// has been recorded yet). Returns true when the global best changed.
bool update_best(const Population& pop, RunResult& result);

/// Adopt the population best if it improves on the global best, then write
/// the global best into curve[t]. Requires a sorted, non-empty population.
void record_best(const Population& pop, RunResult& result, std::size_t t);

/// Number of non-finite objective values seen by evaluate() in this process.
std::uint64_t nonfinite_evaluations();

}  // namespace widow
