#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace widow {

/// Source of the random draws an optimizer consumes.
///
/// Every algorithm in this library pulls randomness only through this
/// interface, so a run can be replayed from a recorded tape of draws.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    /// Uniform draw in [0, 1).
    virtual double uniform() = 0;
    /// Standard normal draw (mean 0, variance 1).
    virtual double normal() = 0;

    /// Uniform draw in the open interval (0, 1); redraws exact zeros.
    double uniform_open();
    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform index in [0, n). Requires n > 0.
    std::size_t index(std::size_t n);
};

/// Seedable sequential stream backed by a 64-bit Mersenne Twister.
///
/// Identical seeds give identical draw sequences. One stream belongs to one
/// run; streams are movable between threads but never shared.
class RngStream final : public RandomSource {
public:
    explicit RngStream(std::uint64_t seed = 0);

    double uniform() override;
    double normal() override;
    using RandomSource::uniform;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> gauss_{0.0, 1.0};
};

}  // namespace widow
