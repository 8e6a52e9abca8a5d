#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "tact/network.hpp"
#include "tact/oracle.hpp"

using namespace tact;

namespace {

LayeredModel random_model(std::mt19937& rng, const std::vector<std::size_t>& shape,
                          const EncodingConfig& cfg, bool binary = false) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    LayeredModel model;
    model.cfg = cfg;
    for (std::size_t l = 0; l + 1 < shape.size(); ++l) {
        DenseLayer layer;
        layer.weights.assign(shape[l], std::vector<double>(shape[l + 1]));
        for (auto& row : layer.weights) {
            for (double& w : row) {
                w = binary ? (unit(rng) < 0.5 ? -1.0 : 1.0)
                           : 2.0 * unit(rng) - 1.0;
            }
        }
        layer.biases.resize(shape[l + 1]);
        for (double& b : layer.biases) {
            b = 0.2 * unit(rng) - 0.1;
        }
        layer.activation =
            l + 2 < shape.size() ? Activation::ReLU : Activation::None;
        model.layers.push_back(std::move(layer));
    }
    return model;
}

std::vector<double> random_input(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(n);
    for (double& v : x) {
        v = unit(rng);
    }
    return x;
}

bool close(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({std::abs(a), std::abs(b), 1.0});
}

}  // namespace

TEST_CASE("encode_layer0") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    TimingState s = encode_layer0({1.0, 0.0}, cfg);
    CHECK(s.pairs[0].t_plus == 0.0);
    CHECK(s.pairs[0].t_minus == cfg.t_in);
    CHECK(s.pairs[1].t_plus == cfg.t_in);
    CHECK(s.pairs[1].t_minus == cfg.t_in);
    CHECK(s.gains == std::vector<double>{1.0, 1.0});

    EncodingConfig wide{2.0, 1.0, 0.1};
    TimingState half = encode_layer0({0.5}, wide);
    CHECK(half.pairs[0].t_plus == doctest::Approx(1.0));
    CHECK(half.pairs[0].t_minus == doctest::Approx(2.0));

    CHECK_THROWS_AS(encode_layer0({1.5}, cfg), std::invalid_argument);
}

TEST_CASE("identity-like neuron passes its input through") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    DenseLayer layer{{{1.0}}, {0.0}, Activation::None};
    for (double x : {0.0, 0.25, 0.8, 1.0}) {
        const TimingState out =
            propagate(encode_layer0({x}, cfg), layer, cfg);
        CHECK(decode_output(out, cfg)[0] == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("hand-picked 2-2-1 network matches the oracle") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    LayeredModel model;
    model.cfg = cfg;
    model.layers.push_back(
        {{{0.7, -1.2}, {-0.4, 0.9}}, {0.05, -0.03}, Activation::ReLU});
    model.layers.push_back({{{1.1}, {-0.6}}, {0.02}, Activation::None});
    const std::vector<double> x = {0.3, 0.8};
    const double timing = forward(model, x)[0];
    const double reference = oracle_forward(model, x).final_preactivations[0];
    CHECK(close(timing, reference));
}

TEST_CASE("negative pre-activation clamps to zero") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    DenseLayer layer{{{-2.0}}, {0.0}, Activation::ReLU};
    const TimingState out = propagate(encode_layer0({1.0}, cfg), layer, cfg);
    CHECK(out.pairs[0].t_minus == out.pairs[0].t_plus);
    CHECK(decode_output(out, cfg)[0] == 0.0);
}

TEST_CASE("decode_output") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    TimingState s;
    s.pairs = {{1.2, 1.2}};
    s.gains = {1.0};
    CHECK(decode_output(s, cfg)[0] == 0.0);
    s.pairs = {{1.7256, 1.7256 + 0.1965}};
    s.gains = {24.01};
    CHECK(decode_output(s, cfg)[0] == doctest::Approx(4.718).epsilon(2.5e-4));
}

TEST_CASE("max_pool keeps the largest timing difference") {
    TimingState s;
    s.pairs = {{1.0, 1.1}, {1.0, 1.3}};
    s.gains = {2.0, 2.0};
    PoolSpec pool{2};
    TimingState pooled = max_pool(s, pool);
    CHECK(pooled.pairs.size() == 1);
    CHECK(pooled.pairs[0].t_minus == 1.3);

    // Ties pick the lowest index.
    s.pairs = {{1.0, 1.2}, {1.1, 1.3}};
    pooled = max_pool(s, pool);
    CHECK(pooled.pairs[0].t_plus == 1.0);

    s.gains = {2.0, 3.0};
    CHECK_THROWS_AS(max_pool(s, pool), std::invalid_argument);
    s.gains = {2.0, 2.0};
    CHECK_THROWS_AS(max_pool(s, PoolSpec{3}), std::invalid_argument);
}

TEST_CASE("max_pool commutes with decode for equal gains") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        TimingState s;
        const double gain = 0.5 + 3.0 * unit(rng);
        for (int i = 0; i < 8; ++i) {
            const double t_plus = 1.1 + unit(rng);
            s.pairs.push_back({t_plus, t_plus + unit(rng) - 0.4});
            s.gains.push_back(gain);
        }
        const auto decoded = decode_output(s, cfg);
        const auto pooled = decode_output(max_pool(s, PoolSpec{4}), cfg);
        for (std::size_t g = 0; g < pooled.size(); ++g) {
            double best = decoded[g * 4];
            for (std::size_t i = 1; i < 4; ++i) {
                best = std::max(best, decoded[g * 4 + i]);
            }
            CHECK(pooled[g] == doctest::Approx(best).epsilon(1e-12));
        }
    }
}

TEST_CASE("zero model produces zeros") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    LayeredModel model;
    model.cfg = cfg;
    model.layers.push_back(
        {{{0.0, 0.0}, {0.0, 0.0}}, {0.0, 0.0}, Activation::ReLU});
    model.layers.push_back({{{0.0}, {0.0}}, {0.0}, Activation::None});
    const auto out = forward(model, {0.4, 0.9});
    CHECK(out == std::vector<double>{0.0});
}

TEST_CASE("random networks match the oracle end to end") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    std::mt19937 rng(41);
    const std::vector<std::vector<std::size_t>> shapes = {
        {6, 4}, {20, 16, 4}, {12, 128, 3}, {10, 24, 24, 24, 5}};
    for (const auto& shape : shapes) {
        for (int rep = 0; rep < 5; ++rep) {
            const LayeredModel model = random_model(rng, shape, cfg);
            const auto x = random_input(rng, shape.front());
            const auto timing = forward(model, x);
            const auto reference = oracle_forward(model, x);
            for (std::size_t k = 0; k < timing.size(); ++k) {
                CHECK(close(timing[k], reference.final_preactivations[k]));
            }
        }
    }
}

TEST_CASE("binary-weight networks match the oracle") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    std::mt19937 rng(47);
    const LayeredModel model = random_model(rng, {16, 12, 4}, cfg, true);
    for (int rep = 0; rep < 10; ++rep) {
        const auto x = random_input(rng, 16);
        const auto timing = forward(model, x);
        const auto reference = oracle_forward(model, x).final_preactivations;
        for (std::size_t k = 0; k < timing.size(); ++k) {
            CHECK(close(timing[k], reference[k]));
        }
    }
}

TEST_CASE("hidden activations equal clamped oracle pre-activations") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    std::mt19937 rng(53);
    const LayeredModel model = random_model(rng, {10, 8, 8, 3}, cfg);
    for (int rep = 0; rep < 10; ++rep) {
        const auto x = random_input(rng, 10);
        const auto states = forward_states(model, x);
        const auto reference = oracle_forward(model, x);
        for (std::size_t l = 0; l + 1 < model.layers.size(); ++l) {
            const auto hidden = decode_output(states[l + 1], cfg);
            for (std::size_t k = 0; k < hidden.size(); ++k) {
                CHECK(close(hidden[k],
                            reference.per_layer_activations[l][k]));
                CHECK(hidden[k] >= 0.0);
            }
        }
    }
}

TEST_CASE("timing pairs stay inside the per-layer windows") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    std::mt19937 rng(59);
    const LayeredModel model = random_model(rng, {8, 6, 6, 2}, cfg);
    for (int rep = 0; rep < 20; ++rep) {
        const auto states = forward_states(model, random_input(rng, 8));
        for (std::size_t l = 0; l < states.size(); ++l) {
            const double s = states[l].window_start;
            CHECK(s == doctest::Approx(static_cast<double>(l) *
                                       (1.0 + cfg.epsilon) * cfg.t_in)
                           .epsilon(1e-12));
            for (const TimingPair& p : states[l].pairs) {
                CHECK(p.t_plus >= s - 1e-12);
                CHECK(p.t_plus <= s + cfg.t_in + 1e-12);
                CHECK(p.t_minus >= s - 1e-12);
                CHECK(p.t_minus <= s + cfg.t_in + 1e-12);
            }
        }
    }
}

TEST_CASE("gain recursion matches manual expansion on two layers") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    LayeredModel model;
    model.cfg = cfg;
    model.layers.push_back(
        {{{0.5, -1.0}, {2.0, 0.25}}, {0.1, -0.2}, Activation::ReLU});
    model.layers.push_back({{{-0.75}, {1.5}}, {0.3}, Activation::None});
    const auto states = forward_states(model, {0.2, 0.6});

    const double g1_0 = std::abs(0.5) + std::abs(2.0) + std::abs(0.1);
    const double g1_1 = std::abs(-1.0) + std::abs(0.25) + std::abs(-0.2);
    CHECK(states[1].gains[0] == doctest::Approx(g1_0).epsilon(1e-15));
    CHECK(states[1].gains[1] == doctest::Approx(g1_1).epsilon(1e-15));
    const double g2 =
        std::abs(-0.75) * g1_0 + std::abs(1.5) * g1_1 + std::abs(0.3);
    CHECK(states[2].gains[0] == doctest::Approx(g2).epsilon(1e-15));
}

TEST_CASE("dimension mismatches are rejected") {
    EncodingConfig cfg{1.0, 1.0, 0.1};
    DenseLayer layer{{{1.0}}, {0.0}, Activation::None};
    CHECK_THROWS_AS(propagate(encode_layer0({0.5, 0.5}, cfg), layer, cfg),
                    std::invalid_argument);
    LayeredModel model;
    model.cfg = cfg;
    model.layers.push_back({{{1.0, 1.0}}, {0.0, 0.0}, Activation::ReLU});
    model.layers.push_back({{{1.0}}, {0.0}, Activation::None});
    CHECK_THROWS_AS(forward(model, {0.5}), std::invalid_argument);
}
