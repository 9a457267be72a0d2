#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "widow/core.hpp"
#include "widow/rng.hpp"

namespace widow::objectives {

/// Unknown benchmark label.
class UnknownBenchmark : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// One entry of the classical 23-function suite.
struct BenchmarkSpec {
    std::string id;    // "F1" ... "F23"
    std::string name;
    std::size_t dim_default = 0;
    /// F1-F13 accept any dimension; F14-F23 are fixed.
    bool scalable = false;
    double lower = 0.0;
    double upper = 0.0;
    /// Optimum at dim_default.
    double known_min = 0.0;
    /// Minimizer at dim_default, when one is known in closed form or to
    /// high precision.
    std::optional<Vector> known_argmin;
    /// F7 only: adds one uniform [0, 1) draw per evaluation.
    bool noisy = false;

    SearchSpace space(std::size_t dim) const;
    SearchSpace space() const { return space(dim_default); }
    /// Optimum for the given dimension (F8 scales with dim).
    double min_for(std::size_t dim) const;
    /// Minimizer for the given dimension, if known.
    std::optional<Vector> argmin_for(std::size_t dim) const;
};

/// All 23 specs in order F1 ... F23.
const std::vector<BenchmarkSpec>& registry();

/// Lookup by label; throws UnknownBenchmark.
const BenchmarkSpec& find(std::string_view id);

/// Evaluate benchmark `id` at x. For F7, `noise` supplies the uniform noise
/// term; pass nullptr for the noiseless quartic. Throws UnknownBenchmark or
/// ContractError (wrong dimension for a fixed-dimension function).
double evaluate(std::string_view id, std::span<const double> x, RandomSource* noise = nullptr);

/// Objective bound to one benchmark. F7 owns a private RngStream seeded with
/// noise_seed; the returned objective must stay within one run.
Objective make_objective(std::string_view id, std::uint64_t noise_seed = 0);

// Individual functions, usable directly.
double sphere(std::span<const double> x);
double schwefel_2_22(std::span<const double> x);
double schwefel_1_2(std::span<const double> x);
double schwefel_2_21(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double step(std::span<const double> x);
double quartic(std::span<const double> x);  // noiseless part of F7
double schwefel_2_26(std::span<const double> x);
double rastrigin(std::span<const double> x);
double ackley(std::span<const double> x);
double griewank(std::span<const double> x);
double penalized_1(std::span<const double> x);
double penalized_2(std::span<const double> x);
double shekel_foxholes(std::span<const double> x);
double kowalik(std::span<const double> x);
double six_hump_camel(std::span<const double> x);
double branin(std::span<const double> x);
double goldstein_price(std::span<const double> x);
double hartmann_3(std::span<const double> x);
double hartmann_6(std::span<const double> x);
double shekel(std::span<const double> x, std::size_t m);

}  // namespace widow::objectives
