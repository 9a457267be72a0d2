#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "widow/core.hpp"

namespace widow::stats {

/// Summary of per-run final scores. std is the population standard deviation.
struct StatsSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double std = 0.0;
    double median = 0.0;
    double best = 0.0;
    double worst = 0.0;

    bool operator==(const StatsSummary&) const = default;
};

/// Throws ContractError on empty input.
StatsSummary summarize(std::span<const double> values);

double median(std::vector<double> values);

/// Paired one-sided sign test of "a tends to be smaller than b".
struct SignTest {
    std::size_t wins = 0;    // a < b
    std::size_t losses = 0;  // a > b
    std::size_t ties = 0;
    /// P(X >= wins) for X ~ Binomial(wins + losses, 1/2); 1 when all tie.
    double p_value = 1.0;
};

SignTest sign_test_less(std::span<const double> a, std::span<const double> b);

/// Element-wise mean of equally long curves.
Vector mean_curve(std::span<const Vector> curves);

}  // namespace widow::stats
