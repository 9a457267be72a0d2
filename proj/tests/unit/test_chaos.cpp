#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tape.hpp"
#include "widow/chaos.hpp"

using namespace widow;
using namespace widow::chaos;

// Expected values below are the exact rationals 300/499, 400/501 and
// 199000/249999 rounded to double.
TEST_CASE("tent_next follows the piecewise rule") {
    CHECK(tent_next(0.3, 0.499) == doctest::Approx(0.6012024048096193).epsilon(1e-15));
    CHECK(tent_next(0.0, 0.499) == 0.0);
    CHECK(tent_next(0.6, 0.499) == doctest::Approx(0.7984031936127745).epsilon(1e-15));
    CHECK(tent_next(1.0, 0.499) == 0.0);
    CHECK(tent_next(0.499, 0.499) == doctest::Approx(1.0));
    CHECK_THROWS_AS(tent_next(-0.1, 0.499), ContractError);
    CHECK_THROWS_AS(tent_next(1.1, 0.499), ContractError);
    CHECK_THROWS_AS(tent_next(0.5, 1.0), ContractError);
}

TEST_CASE("sine_next") {
    CHECK(sine_next(0.5) == 1.0);
    CHECK(sine_next(1.0 / 6.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sine_next(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("chaotic_sequence examples") {
    RngStream rng(0);
    const auto tent = chaotic_sequence({0.499, 0.3}, 2, MapKind::tent, rng);
    REQUIRE(tent.size() == 2);
    CHECK(tent[0] == doctest::Approx(0.6012024048096193).epsilon(1e-15));
    CHECK(tent[1] == doctest::Approx(0.7960031840127361).epsilon(1e-14));

    const auto sine = chaotic_sequence({0.499, 0.5}, 1, MapKind::sine, rng);
    CHECK(sine == Vector{1.0});

    CHECK_THROWS_AS(chaotic_sequence({0.499, 0.3}, 0, MapKind::tent, rng), ContractError);
    CHECK_THROWS_AS(chaotic_sequence({0.499, 0.0}, 3, MapKind::tent, rng), ContractError);
}

TEST_CASE("absorbing iterates re-seed from the source") {
    // u = 0.5, x0 = 0.5 gives 1.0 then would stick at 0; the tape supplies 0.2
    testing::TapeSource tape({0.2}, {});
    const auto seq = chaotic_sequence({0.5, 0.5}, 3, MapKind::tent, tape);
    CHECK(seq[0] == 1.0);
    CHECK(seq[1] == doctest::Approx(0.4));  // tent(0.2) with u = 0.5
    CHECK(seq[2] == doctest::Approx(0.8));
    CHECK(tape.remaining() == 0);
}

TEST_CASE("tent iterates stay in [0,1] and repeat for equal seeds") {
    RngStream a(5);
    RngStream b(5);
    const auto s1 = chaotic_sequence({0.499, 0.123456}, 100000, MapKind::tent, a);
    const auto s2 = chaotic_sequence({0.499, 0.123456}, 100000, MapKind::tent, b);
    CHECK(s1 == s2);
    for (double v : s1) REQUIRE((v >= 0.0 && v <= 1.0));
}

TEST_CASE("tent histogram is flat, sine histogram is not") {
    RngStream rng(7);
    const auto tent = chaotic_sequence({0.499, 0.3}, 100000, MapKind::tent, rng);
    for (double f : unit_histogram(tent)) {
        CHECK(f >= 0.08);
        CHECK(f <= 0.12);
    }
    const auto sine = chaotic_sequence({0.499, 0.3}, 100000, MapKind::sine, rng);
    const auto h = unit_histogram(sine);
    CHECK(*std::max_element(h.begin(), h.end()) > 0.15);
}

TEST_CASE("unit_histogram bins") {
    const auto h = unit_histogram(std::vector{0.0, 0.05, 0.15, 1.0}, 10);
    CHECK(h[0] == 0.5);
    CHECK(h[1] == 0.25);
    CHECK(h[9] == 0.25);
}

TEST_CASE("scale_to_box edges and midpoint") {
    const auto s = SearchSpace::uniform(1, -5.0, 5.0);
    CHECK(scale_to_box(std::vector{0.0}, s) == Vector{-5.0});
    CHECK(scale_to_box(std::vector{1.0}, s) == Vector{5.0});
    CHECK(scale_to_box(std::vector{0.5}, SearchSpace::uniform(1, -10.0, 30.0)) == Vector{10.0});
}

TEST_CASE("init_population_tent is affine in the bounds") {
    const std::size_t dim = 4;
    const auto unit = SearchSpace::uniform(dim, 0.0, 1.0);
    const SearchSpace box({-3.0, 0.0, 10.0, -100.0}, {5.0, 1.0, 20.0, 100.0});
    RngStream a(99);
    RngStream b(99);
    const auto p_unit = init_population_tent(unit, 12, a);
    const auto p_box = init_population_tent(box, 12, b);
    REQUIRE(p_unit.size() == 12);
    for (std::size_t i = 0; i < p_unit.size(); ++i) {
        CHECK(box.contains(p_box[i].position));
        CHECK(std::isinf(p_box[i].fitness));
        for (std::size_t d = 0; d < dim; ++d) {
            const double mapped = box.lower(d) + p_unit[i].position[d] * box.width(d);
            CHECK(p_box[i].position[d] == doctest::Approx(mapped).epsilon(1e-12));
        }
    }
}

TEST_CASE("init_population_tent seeds every individual from the source") {
    // x0 per individual from the tape, then one tent iterate per dimension
    testing::TapeSource tape({0.3, 0.8}, {});
    const auto pop = init_population_tent(SearchSpace::uniform(1, 0.0, 1.0), 2, tape);
    CHECK(pop[0].position[0] == tent_next(0.3, 0.499));
    CHECK(pop[1].position[0] == tent_next(0.8, 0.499));
    CHECK(tape.remaining() == 0);
}
