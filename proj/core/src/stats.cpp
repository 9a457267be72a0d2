#include "widow/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace widow::stats {

double median(std::vector<double> values) {
    if (values.empty()) throw ContractError("median: empty input");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

StatsSummary summarize(std::span<const double> values) {
    if (values.empty()) throw ContractError("summarize: empty input");
    StatsSummary s;
    s.count = values.size();
    const double n = static_cast<double>(values.size());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / n);
    s.median = median(std::vector<double>(values.begin(), values.end()));
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.best = *lo;
    s.worst = *hi;
    return s;
}

SignTest sign_test_less(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ContractError("sign_test_less: unpaired samples");
    SignTest r;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) ++r.wins;
        else if (a[i] > b[i]) ++r.losses;
        else ++r.ties;
    }
    const std::size_t n = r.wins + r.losses;
    if (n == 0) return r;
    // sum_{k >= wins} C(n, k) / 2^n, accumulated in log space
    double p = 0.0;
    for (std::size_t k = r.wins; k <= n; ++k) {
        const double log_c = std::lgamma(static_cast<double>(n) + 1.0) -
                             std::lgamma(static_cast<double>(k) + 1.0) -
                             std::lgamma(static_cast<double>(n - k) + 1.0);
        p += std::exp(log_c - static_cast<double>(n) * std::log(2.0));
    }
    r.p_value = std::min(1.0, p);
    return r;
}

Vector mean_curve(std::span<const Vector> curves) {
    if (curves.empty()) return {};
    Vector out(curves.front().size(), 0.0);
    for (const auto& c : curves) {
        if (c.size() != out.size()) throw ContractError("mean_curve: curves differ in length");
        for (std::size_t i = 0; i < c.size(); ++i) out[i] += c[i];
    }
    for (double& v : out) v /= static_cast<double>(curves.size());
    return out;
}

}  // namespace widow::stats
