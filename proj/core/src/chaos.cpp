#include "widow/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace widow::chaos {

double tent_next(double x, double u) {
    if (!(x >= 0.0 && x <= 1.0)) throw ContractError("tent_next: x must lie in [0, 1]");
    if (!(u > 0.0 && u < 1.0)) throw ContractError("tent_next: u must lie in (0, 1)");
    return x < u ? x / u : (1.0 - x) / (1.0 - u);
}

double sine_next(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw ContractError("sine_next: x must lie in [0, 1]");
    return std::sin(std::numbers::pi * x);
}

namespace {

bool absorbing(double x) { return x == 0.0 || x == 1.0; }

// Fills out[0..n) by iterating from state; re-seeds after absorbing iterates.
template <typename Map>
void iterate(double state, std::span<double> out, RandomSource& rng, Map map) {
    for (double& value : out) {
        value = map(state);
        state = absorbing(value) ? rng.uniform_open() : value;
    }
}

}  // namespace

Vector chaotic_sequence(const TentMapParams& params, std::size_t n, MapKind kind,
                        RandomSource& rng) {
    if (n == 0) throw ContractError("chaotic_sequence: n must be >= 1");
    if (!(params.x0 > 0.0 && params.x0 < 1.0))
        throw ContractError("chaotic_sequence: x0 must lie in (0, 1)");
    Vector out(n);
    if (kind == MapKind::tent) {
        const double u = params.u;
        iterate(params.x0, out, rng, [u](double x) { return tent_next(x, u); });
    } else {
        iterate(params.x0, out, rng, sine_next);
    }
    return out;
}

Vector scale_to_box(std::span<const double> unit, const SearchSpace& space) {
    if (unit.size() != space.dim()) throw ContractError("scale_to_box: dimension mismatch");
    Vector position(unit.size());
    for (std::size_t d = 0; d < unit.size(); ++d)
        position[d] = space.lower(d) + unit[d] * space.width(d);
    // lb + 1*(ub - lb) can round past ub
    clamp_in_place(position, space);
    return position;
}

Population init_population_tent(const SearchSpace& space, std::size_t pop, RandomSource& rng,
                                double u) {
    if (pop == 0) throw ContractError("init_population_tent: pop must be >= 1");
    Population population;
    population.reserve(pop);
    for (std::size_t i = 0; i < pop; ++i) {
        const TentMapParams params{u, rng.uniform_open()};
        const Vector unit = chaotic_sequence(params, space.dim(), MapKind::tent, rng);
        population.push_back(Individual{scale_to_box(unit, space), kInf});
    }
    return population;
}

Vector unit_histogram(std::span<const double> values, std::size_t bins) {
    if (bins == 0) throw ContractError("unit_histogram: bins must be >= 1");
    Vector freq(bins, 0.0);
    if (values.empty()) return freq;
    for (double v : values) {
        auto b = static_cast<std::size_t>(std::clamp(v, 0.0, 1.0) * static_cast<double>(bins));
        freq[std::min(b, bins - 1)] += 1.0;
    }
    for (double& f : freq) f /= static_cast<double>(values.size());
    return freq;
}

}  // namespace widow::chaos
