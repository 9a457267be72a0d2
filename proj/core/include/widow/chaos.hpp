#pragma once

#include <cstddef>

#include "widow/core.hpp"
#include "widow/rng.hpp"

namespace widow::chaos {

enum class MapKind { tent, sine };

struct TentMapParams {
    /// Breakpoint; values just below 0.5 keep the map chaotic in floating point.
    double u = 0.499;
    /// Seed value in (0, 1).
    double x0 = 0.3;
};

/// Tent map: x/u for x < u, (1 - x)/(1 - u) otherwise. Requires x in [0, 1].
double tent_next(double x, double u);

/// Sine map sin(pi * x). Requires x in [0, 1].
double sine_next(double x);

/// n successive iterates starting from params.x0 (x0 itself is not emitted).
/// An iterate equal to exactly 0 or 1 is emitted, after which the state is
/// re-seeded from rng.uniform_open() so the sequence cannot lock onto the
/// fixed point at zero. params.u is ignored for the sine map.
Vector chaotic_sequence(const TentMapParams& params, std::size_t n, MapKind kind,
                        RandomSource& rng);

/// Map unit-interval draws c onto the box: lb[d] + c[d] * (ub[d] - lb[d]).
Vector scale_to_box(std::span<const double> unit, const SearchSpace& space);

/// pop individuals, each seeded with its own x0 = rng.uniform_open() and
/// iterated across dimensions with the tent map. Fitness is left at +inf.
Population init_population_tent(const SearchSpace& space, std::size_t pop, RandomSource& rng,
                                double u = 0.499);

/// Relative frequencies of values over `bins` equal-width bins on [0, 1].
/// A value of exactly 1 falls in the last bin.
Vector unit_histogram(std::span<const double> values, std::size_t bins = 10);

}  // namespace widow::chaos
