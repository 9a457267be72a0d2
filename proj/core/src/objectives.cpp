#include "widow/objectives.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numbers>

namespace widow::objectives {

using std::numbers::pi;

namespace {

constexpr double sq(double v) { return v * v; }

// Boundary penalty shared by the penalized functions.
double penalty(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

void require_dim(std::span<const double> x, std::size_t dim, std::string_view name) {
    if (x.size() != dim)
        throw ContractError(std::string(name) + ": expects " + std::to_string(dim) +
                            " dimensions, got " + std::to_string(x.size()));
}

void require_nonempty(std::span<const double> x, std::string_view name) {
    if (x.empty()) throw ContractError(std::string(name) + ": expects at least 1 dimension");
}

}  // namespace

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double schwefel_2_22(std::span<const double> x) {
    double s = 0.0;
    double p = 1.0;
    for (double v : x) {
        s += std::abs(v);
        p *= std::abs(v);
    }
    return s + p;
}

double schwefel_1_2(std::span<const double> x) {
    double s = 0.0;
    double prefix = 0.0;
    for (double v : x) {
        prefix += v;
        s += prefix * prefix;
    }
    return s;
}

double schwefel_2_21(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        s += 100.0 * sq(x[i + 1] - x[i] * x[i]) + sq(x[i] - 1.0);
    return s;
}

double step(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += sq(std::floor(v + 0.5));
    return s;
}

double quartic(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * sq(sq(x[i]));
    return s;
}

double schwefel_2_26(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s -= v * std::sin(std::sqrt(std::abs(v)));
    return s;
}

double rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
    return s;
}

double ackley(std::span<const double> x) {
    require_nonempty(x, "ackley");
    const double n = static_cast<double>(x.size());
    double sum_sq = 0.0;
    double sum_cos = 0.0;
    for (double v : x) {
        sum_sq += v * v;
        sum_cos += std::cos(2.0 * pi * v);
    }
    // grouped so each bracket is >= 0 and the origin gives exactly 0
    return 20.0 * (1.0 - std::exp(-0.2 * std::sqrt(sum_sq / n))) +
           (std::numbers::e - std::exp(sum_cos / n));
}

double griewank(std::span<const double> x) {
    double s = 0.0;
    double p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s / 4000.0 - p + 1.0;
}

double penalized_1(std::span<const double> x) {
    require_nonempty(x, "penalized_1");
    const std::size_t n = x.size();
    auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    double s = 10.0 * sq(std::sin(pi * y(0)));
    for (std::size_t i = 0; i + 1 < n; ++i)
        s += sq(y(i) - 1.0) * (1.0 + 10.0 * sq(std::sin(pi * y(i + 1))));
    s += sq(y(n - 1) - 1.0);
    double pen = 0.0;
    for (double v : x) pen += penalty(v, 10.0, 100.0, 4.0);
    return pi / static_cast<double>(n) * s + pen;
}

double penalized_2(std::span<const double> x) {
    require_nonempty(x, "penalized_2");
    const std::size_t n = x.size();
    double s = sq(std::sin(3.0 * pi * x[0]));
    for (std::size_t i = 0; i + 1 < n; ++i)
        s += sq(x[i] - 1.0) * (1.0 + sq(std::sin(3.0 * pi * x[i + 1])));
    s += sq(x[n - 1] - 1.0) * (1.0 + sq(std::sin(2.0 * pi * x[n - 1])));
    double pen = 0.0;
    for (double v : x) pen += penalty(v, 5.0, 100.0, 4.0);
    return 0.1 * s + pen;
}

double shekel_foxholes(std::span<const double> x) {
    require_dim(x, 2, "shekel_foxholes");
    static constexpr std::array<double, 5> grid{-32.0, -16.0, 0.0, 16.0, 32.0};
    double s = 0.0;
    for (std::size_t j = 0; j < 25; ++j) {
        const double a0 = grid[j % 5];
        const double a1 = grid[j / 5];
        s += 1.0 / (static_cast<double>(j + 1) + std::pow(x[0] - a0, 6) + std::pow(x[1] - a1, 6));
    }
    return 1.0 / (1.0 / 500.0 + s);
}

double kowalik(std::span<const double> x) {
    require_dim(x, 4, "kowalik");
    static constexpr std::array<double, 11> a{0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                                              0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
    static constexpr std::array<double, 11> inv_b{0.25, 0.5, 1.0,  2.0,  4.0, 6.0,
                                                  8.0,  10.0, 12.0, 14.0, 16.0};
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double b = 1.0 / inv_b[i];
        s += sq(a[i] - x[0] * (b * b + x[1] * b) / (b * b + x[2] * b + x[3]));
    }
    return s;
}

double six_hump_camel(std::span<const double> x) {
    require_dim(x, 2, "six_hump_camel");
    const double a = x[0];
    const double b = x[1];
    return 4.0 * a * a - 2.1 * std::pow(a, 4) + std::pow(a, 6) / 3.0 + a * b - 4.0 * b * b +
           4.0 * std::pow(b, 4);
}

double branin(std::span<const double> x) {
    require_dim(x, 2, "branin");
    return sq(x[1] - 5.1 / (4.0 * pi * pi) * x[0] * x[0] + 5.0 / pi * x[0] - 6.0) +
           10.0 * (1.0 - 1.0 / (8.0 * pi)) * std::cos(x[0]) + 10.0;
}

double goldstein_price(std::span<const double> x) {
    require_dim(x, 2, "goldstein_price");
    const double a = x[0];
    const double b = x[1];
    const double t1 = 1.0 + sq(a + b + 1.0) *
                                (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    const double t2 = 30.0 + sq(2.0 * a - 3.0 * b) * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b -
                                                      36.0 * a * b + 27.0 * b * b);
    return t1 * t2;
}

namespace {

constexpr std::array<double, 4> kHartmannC{1.0, 1.2, 3.0, 3.2};

template <std::size_t D>
double hartmann(std::span<const double> x, const std::array<std::array<double, D>, 4>& a,
                const std::array<std::array<double, D>, 4>& p) {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        double inner = 0.0;
        for (std::size_t j = 0; j < D; ++j) inner += a[i][j] * sq(x[j] - p[i][j]);
        s -= kHartmannC[i] * std::exp(-inner);
    }
    return s;
}

}  // namespace

double hartmann_3(std::span<const double> x) {
    require_dim(x, 3, "hartmann_3");
    static constexpr std::array<std::array<double, 3>, 4> a{{
        {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}}};
    static constexpr std::array<std::array<double, 3>, 4> p{{{0.3689, 0.1170, 0.2673},
                                                             {0.4699, 0.4387, 0.7470},
                                                             {0.1091, 0.8732, 0.5547},
                                                             {0.03815, 0.5743, 0.8828}}};
    return hartmann<3>(x, a, p);
}

double hartmann_6(std::span<const double> x) {
    require_dim(x, 6, "hartmann_6");
    static constexpr std::array<std::array<double, 6>, 4> a{{{10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
                                                             {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
                                                             {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
                                                             {17.0, 8.0, 0.05, 10.0, 0.1, 14.0}}};
    static constexpr std::array<std::array<double, 6>, 4> p{
        {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
         {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
         {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
         {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}}};
    return hartmann<6>(x, a, p);
}

double shekel(std::span<const double> x, std::size_t m) {
    require_dim(x, 4, "shekel");
    static constexpr std::array<std::array<double, 4>, 10> a{{{4, 4, 4, 4},
                                                              {1, 1, 1, 1},
                                                              {8, 8, 8, 8},
                                                              {6, 6, 6, 6},
                                                              {3, 7, 3, 7},
                                                              {2, 9, 2, 9},
                                                              {5, 5, 3, 3},
                                                              {8, 1, 8, 1},
                                                              {6, 2, 6, 2},
                                                              {7, 3.6, 7, 3.6}}};
    static constexpr std::array<double, 10> c{0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};
    if (m == 0 || m > a.size()) throw ContractError("shekel: m must lie in [1, 10]");
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double d = 0.0;
        for (std::size_t j = 0; j < 4; ++j) d += sq(x[j] - a[i][j]);
        s -= 1.0 / (d + c[i]);
    }
    return s;
}

namespace {

using Fn = double (*)(std::span<const double>);

struct Entry {
    BenchmarkSpec spec;
    Fn fn;
    // For scalable functions: argmin coordinate (replicated) and optimum per dimension.
    double argmin_fill = 0.0;
    double min_per_dim = 0.0;
};

double shekel5(std::span<const double> x) { return shekel(x, 5); }
double shekel7(std::span<const double> x) { return shekel(x, 7); }
double shekel10(std::span<const double> x) { return shekel(x, 10); }

Entry scalable(std::string id, std::string name, double lo, double hi, Fn fn,
               double argmin_fill = 0.0, double min_per_dim = 0.0, bool noisy = false) {
    constexpr std::size_t d = 30;
    BenchmarkSpec s{std::move(id), std::move(name), d,     true,
                    lo,            hi,              min_per_dim * static_cast<double>(d),
                    Vector(d, argmin_fill),         noisy};
    return Entry{std::move(s), fn, argmin_fill, min_per_dim};
}

Entry fixed(std::string id, std::string name, double lo, double hi, Fn fn, double known_min,
            Vector argmin) {
    const std::size_t d = argmin.size();
    BenchmarkSpec s{std::move(id), std::move(name), d, false, lo, hi, known_min,
                    std::move(argmin), false};
    return Entry{std::move(s), fn};
}

// Optima of the fixed-dimension functions were located by polishing the
// literature minimizers to full double precision.
const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = [] {
        std::vector<Entry> t;
        t.push_back(scalable("F1", "Sphere", -100, 100, sphere));
        t.push_back(scalable("F2", "Schwefel 2.22", -10, 10, schwefel_2_22));
        t.push_back(scalable("F3", "Schwefel 1.2", -100, 100, schwefel_1_2));
        t.push_back(scalable("F4", "Schwefel 2.21", -100, 100, schwefel_2_21));
        t.push_back(scalable("F5", "Rosenbrock", -30, 30, rosenbrock, 1.0));
        t.push_back(scalable("F6", "Step", -100, 100, step));
        t.push_back(scalable("F7", "Quartic with noise", -1.28, 1.28, quartic, 0.0, 0.0, true));
        t.push_back(scalable("F8", "Schwefel 2.26", -500, 500, schwefel_2_26, 420.96874657644923,
                             -418.9828872724338));
        t.push_back(scalable("F9", "Rastrigin", -5.12, 5.12, rastrigin));
        t.push_back(scalable("F10", "Ackley", -32, 32, ackley));
        t.push_back(scalable("F11", "Griewank", -600, 600, griewank));
        t.push_back(scalable("F12", "Penalized 1", -50, 50, penalized_1, -1.0));
        t.push_back(scalable("F13", "Penalized 2", -50, 50, penalized_2, 1.0));
        t.push_back(fixed("F14", "Shekel's Foxholes", -65.536, 65.536, shekel_foxholes,
                          0.9980038377944498, {-31.978336496388785, -31.978337208775798}));
        t.push_back(fixed("F15", "Kowalik", -5, 5, kowalik, 0.0003074859878056054,
                          {0.19283345309447808, 0.19083623976686623, 0.12311729917484215,
                           0.13576599009019955}));
        t.push_back(fixed("F16", "Six-Hump Camel", -5, 5, six_hump_camel, -1.0316284534898776,
                          {0.08984201652927098, -0.7126564013807202}));
        t.push_back(fixed("F17", "Branin", -5, 5, branin, 0.39788735772973816, {pi, 2.275}));
        t.push_back(fixed("F18", "Goldstein-Price", -2, 2, goldstein_price, 3.0, {0.0, -1.0}));
        t.push_back(fixed("F19", "Hartmann 3", 0, 1, hartmann_3, -3.862782147820756,
                          {0.11461434203083393, 0.5556488507905368, 0.852546953846026}));
        t.push_back(fixed("F20", "Hartmann 6", 0, 1, hartmann_6, -3.322368011415515,
                          {0.20168951037794658, 0.15001069146456325, 0.4768739733706766,
                           0.2753324288543796, 0.3116516165632252, 0.6573005308464771}));
        t.push_back(fixed("F21", "Shekel 5", 0, 10, shekel5, -10.153199679058229,
                          {4.000037152376549, 4.000133278657566, 4.000037151057555,
                           4.000133277090425}));
        t.push_back(fixed("F22", "Shekel 7", 0, 10, shekel7, -10.402940566818662,
                          {4.000572914277084, 4.000689366040889, 3.9994897107938447,
                           3.9996061600067923}));
        t.push_back(fixed("F23", "Shekel 10", 0, 10, shekel10, -10.536409816692045,
                          {4.000746530253313, 4.000592936779709, 3.9996633957714787,
                           3.9995097993299975}));
        return t;
    }();
    return table;
}

const Entry& find_entry(std::string_view id) {
    for (const auto& e : entries())
        if (e.spec.id == id) return e;
    throw UnknownBenchmark("unknown benchmark '" + std::string(id) + "'");
}

}  // namespace

SearchSpace BenchmarkSpec::space(std::size_t dim) const {
    if (!scalable && dim != dim_default)
        throw ContractError(id + " is fixed at " + std::to_string(dim_default) + " dimensions");
    if (dim == 0) throw ContractError(id + ": dim must be >= 1");
    return SearchSpace::uniform(dim, lower, upper);
}

double BenchmarkSpec::min_for(std::size_t dim) const {
    if (!scalable) return known_min;
    return find_entry(id).min_per_dim * static_cast<double>(dim);
}

std::optional<Vector> BenchmarkSpec::argmin_for(std::size_t dim) const {
    if (!scalable) return known_argmin;
    return Vector(dim, find_entry(id).argmin_fill);
}

const std::vector<BenchmarkSpec>& registry() {
    static const std::vector<BenchmarkSpec> specs = [] {
        std::vector<BenchmarkSpec> s;
        for (const auto& e : entries()) s.push_back(e.spec);
        return s;
    }();
    return specs;
}

const BenchmarkSpec& find(std::string_view id) { return find_entry(id).spec; }

namespace {

double evaluate_entry(const Entry& e, std::span<const double> x, RandomSource* noise) {
    if (!e.spec.scalable) require_dim(x, e.spec.dim_default, e.spec.id);
    else require_nonempty(x, e.spec.id);
    double value = e.fn(x);
    if (e.spec.noisy && noise != nullptr) value += noise->uniform();
    return value;
}

}  // namespace

double evaluate(std::string_view id, std::span<const double> x, RandomSource* noise) {
    return evaluate_entry(find_entry(id), x, noise);
}

Objective make_objective(std::string_view id, std::uint64_t noise_seed) {
    const Entry* e = &find_entry(id);  // table has static storage
    if (!e->spec.noisy) return [e](std::span<const double> x) { return evaluate_entry(*e, x, nullptr); };
    auto rng = std::make_shared<RngStream>(noise_seed);
    return [e, rng](std::span<const double> x) { return evaluate_entry(*e, x, rng.get()); };
}

}  // namespace widow::objectives
