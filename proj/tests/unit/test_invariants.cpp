#include <doctest.h>

#include "invariants.hpp"

using namespace widow;
using widow::harness::Algorithm;

TEST_CASE("structural invariants on F1, F9 and F16") {
    for (auto a : {Algorithm::msbwoa, Algorithm::bwoa, Algorithm::pso, Algorithm::ga})
        for (const char* b : {"F1", "F9", "F16"}) {
            CAPTURE(b);
            const auto bad = testing::check_invariants(a, b, 10, 50, 7);
            for (const auto& s : bad) FAIL_CHECK(s);
            CHECK(bad.empty());
        }
}

TEST_CASE("invariants hold on the noisy quartic and the deceptive Schwefel function") {
    for (auto a : {Algorithm::msbwoa, Algorithm::bwoa, Algorithm::pso, Algorithm::ga})
        for (const char* b : {"F7", "F8"}) {
            const auto bad = testing::check_invariants(a, b, 12, 30, 11);
            for (const auto& s : bad) FAIL_CHECK(s);
        }
}

TEST_CASE("different seeds give different runs") {
    const auto f = objectives::make_objective("F1", 0);
    const auto space = objectives::find("F1").space(5);
    OptimizerConfig c1{10, 20, 1, {}};
    OptimizerConfig c2{10, 20, 2, {}};
    for (auto a : {Algorithm::msbwoa, Algorithm::bwoa, Algorithm::pso, Algorithm::ga})
        CHECK(testing::run_algorithm(a, f, space, c1) != testing::run_algorithm(a, f, space, c2));
}
