#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "tact/oracle.hpp"

using namespace tact;

TEST_CASE("oracle_forward basics") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    LayeredModel model;
    model.cfg = cfg;
    model.layers.push_back({{{1.0}}, {0.0}, Activation::None});
    CHECK(oracle_forward(model, {0.7}).final_preactivations[0] ==
          doctest::Approx(0.7).epsilon(1e-15));

    LayeredModel zero;
    zero.cfg = cfg;
    zero.layers.push_back({{{0.0}, {0.0}}, {0.0}, Activation::None});
    CHECK(oracle_forward(zero, {0.5, 0.5}).final_preactivations[0] == 0.0);

    CHECK_THROWS_AS(oracle_forward(model, {0.1, 0.2}), std::invalid_argument);
}

TEST_CASE("grid_fire brackets the exact crossing") {
    RailSpec rail;
    rail.theta = 2.0;
    rail.events = {{0.0, 1.0}};
    const GridSimConfig grid{1e-3, 10.0};
    const FiringResult r = grid_fire(rail, grid);
    CHECK(r.fired);
    CHECK(r.t_nu >= 2.0);
    CHECK(r.t_nu <= 2.0 + grid.step);

    RailSpec unreachable;
    unreachable.theta = 1.0;
    unreachable.events = {{0.0, 0.0}};
    CHECK_FALSE(grid_fire(unreachable, grid).fired);
}

TEST_CASE("event sweep agrees with the dense grid within one step") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const GridSimConfig grid{1e-4, 3.0};
    for (int trial = 0; trial < 200; ++trial) {
        RailSpec rail;
        const int n = 1 + static_cast<int>(unit(rng) * 64);
        double beta = 0.0;
        for (int i = 0; i < n; ++i) {
            const double a = 10.0 * unit(rng);
            rail.events.push_back({unit(rng) * cfg.t_in, a});
            beta += a;
        }
        if (beta == 0.0) {
            continue;
        }
        rail.theta = choose_threshold(beta, cfg);
        const FiringResult exact = solve_firing_time(rail);
        const FiringResult grid_result = grid_fire(rail, grid);
        REQUIRE(exact.fired);
        REQUIRE(grid_result.fired);
        CHECK(std::abs(exact.t_nu - grid_result.t_nu) <= grid.step + 1e-12);
    }
}

TEST_CASE("grid convergence is O(step)") {
    RailSpec rail;
    rail.theta = 3.3;
    rail.events = {{0.1, 1.0}, {0.4, 0.7}, {0.9, 1.3}};
    const FiringResult exact = solve_firing_time(rail);
    double prev_err = 1e9;
    for (double step : {1e-2, 1e-3, 1e-4}) {
        const FiringResult g = grid_fire(rail, {step, 20.0});
        const double err = std::abs(g.t_nu - exact.t_nu);
        CHECK(err <= step);
        CHECK(err <= prev_err + 1e-15);
        prev_err = err;
    }
}

TEST_CASE("compare reports agreement and is deterministic") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    LayeredModel model;
    model.cfg = cfg;
    model.layers.push_back({{{0.5, -0.7}, {0.3, 0.4}, {-0.9, 0.2}},
                            {0.05, -0.02},
                            Activation::ReLU});
    model.layers.push_back({{{1.0, -0.5}, {0.4, 0.8}}, {0.0, 0.1},
                            Activation::None});
    std::vector<std::vector<double>> inputs;
    for (int i = 0; i < 20; ++i) {
        inputs.push_back({unit(rng), unit(rng), unit(rng)});
    }
    const ComparisonReport a = compare(model, inputs);
    const ComparisonReport b = compare(model, inputs);
    CHECK(a.n_inputs == 20);
    CHECK(a.max_rel_error <= 1e-9);
    CHECK(a.argmax_matches == 20);
    CHECK(a.argmax_agreement() == 1.0);
    CHECK(a.max_abs_error == b.max_abs_error);
    CHECK(a.max_rel_error == b.max_rel_error);
}
