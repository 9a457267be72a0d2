#include "widow/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace widow {

double RandomSource::uniform_open() {
    double x = uniform();
    while (x <= 0.0) x = uniform();
    return x;
}

std::size_t RandomSource::index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("RandomSource::index: empty range");
    auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return std::min(i, n - 1);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double RngStream::uniform() {
    // 53 high bits -> [0, 1) with full double resolution
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() { return gauss_(engine_); }

}  // namespace widow
