#include "tact/network.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tact {

void DenseLayer::validate() const {
    if (weights.empty() || biases.empty()) {
        throw std::invalid_argument("DenseLayer: empty weights or biases");
    }
    for (const auto& row : weights) {
        if (row.size() != biases.size()) {
            throw std::invalid_argument(
                "DenseLayer: weight row width does not match bias width");
        }
        for (double w : row) {
            if (!std::isfinite(w)) {
                throw std::invalid_argument("DenseLayer: non-finite weight");
            }
        }
    }
    for (double b : biases) {
        if (!std::isfinite(b)) {
            throw std::invalid_argument("DenseLayer: non-finite bias");
        }
    }
}

void LayeredModel::validate() const {
    cfg.validate();
    if (layers.empty()) {
        throw std::invalid_argument("LayeredModel: no layers");
    }
    for (std::size_t i = 0; i < layers.size(); ++i) {
        layers[i].validate();
        if (i > 0 && layers[i].fan_in() != layers[i - 1].fan_out()) {
            throw std::invalid_argument(
                "LayeredModel: dimension mismatch between layers " +
                std::to_string(i - 1) + " and " + std::to_string(i));
        }
    }
    if (layers.back().activation != Activation::None) {
        throw std::invalid_argument(
            "LayeredModel: final layer activation must be none");
    }
}

TimingState encode_layer0(const std::vector<double>& x,
                          const EncodingConfig& cfg) {
    cfg.validate();
    TimingState state;
    state.window_start = 0.0;
    state.pairs.reserve(x.size());
    for (double xi : x) {
        state.pairs.push_back(encode_input_pair(xi, cfg, 0.0));
    }
    state.gains.assign(x.size(), 1.0);
    return state;
}

TimingState propagate(const TimingState& state, const DenseLayer& layer,
                      const EncodingConfig& cfg) {
    cfg.validate();
    layer.validate();
    if (layer.fan_in() != state.pairs.size() ||
        state.gains.size() != state.pairs.size()) {
        throw std::invalid_argument("propagate: dimension mismatch");
    }

    const std::size_t fan_in = layer.fan_in();
    const std::size_t fan_out = layer.fan_out();
    TimingState next;
    next.window_start = state.window_start + (1.0 + cfg.epsilon) * cfg.t_in;
    next.pairs.resize(fan_out);
    next.gains.resize(fan_out);

    std::vector<double> effective(fan_in);
    for (std::size_t k = 0; k < fan_out; ++k) {
        // Timing-domain synapse strength absorbs the upstream gain, so the
        // fired timing difference encodes the true pre-activation.
        for (std::size_t j = 0; j < fan_in; ++j) {
            effective[j] = layer.weights[j][k] * state.gains[j];
        }
        DualRailNeuron neuron = build_dual_input_neuron(
            effective, layer.biases[k], state.pairs, cfg, state.window_start);
        TimingPair pair = fire_dual(neuron);
        if (layer.activation == Activation::ReLU &&
            pair.t_minus < pair.t_plus) {
            pair.t_minus = pair.t_plus;
        }
        next.pairs[k] = pair;
        next.gains[k] = neuron.beta_o;
    }
    return next;
}

std::vector<double> decode_output(const TimingState& state,
                                  const EncodingConfig& cfg) {
    cfg.validate();
    std::vector<double> out;
    out.reserve(state.pairs.size());
    for (std::size_t k = 0; k < state.pairs.size(); ++k) {
        out.push_back(decode_signed_sum(state.pairs[k], state.gains[k], cfg));
    }
    return out;
}

TimingState max_pool(const TimingState& state, const PoolSpec& pool) {
    if (pool.group_size == 0 ||
        state.pairs.size() % pool.group_size != 0) {
        throw std::invalid_argument(
            "max_pool: neuron count not divisible by group size");
    }
    TimingState pooled;
    pooled.window_start = state.window_start;
    for (std::size_t g = 0; g < state.pairs.size(); g += pool.group_size) {
        std::size_t best = g;
        for (std::size_t i = g; i < g + pool.group_size; ++i) {
            if (state.gains[i] != state.gains[g]) {
                throw std::invalid_argument(
                    "max_pool: unequal gains within a pool group");
            }
            const double dt_i = state.pairs[i].t_minus - state.pairs[i].t_plus;
            const double dt_b =
                state.pairs[best].t_minus - state.pairs[best].t_plus;
            if (dt_i > dt_b) {
                best = i;
            }
        }
        pooled.pairs.push_back(state.pairs[best]);
        pooled.gains.push_back(state.gains[best]);
    }
    return pooled;
}

std::vector<TimingState> forward_states(const LayeredModel& model,
                                        const std::vector<double>& x) {
    model.validate();
    std::vector<TimingState> states;
    states.reserve(model.layers.size() + 1);
    states.push_back(encode_layer0(x, model.cfg));
    for (const DenseLayer& layer : model.layers) {
        states.push_back(propagate(states.back(), layer, model.cfg));
    }
    return states;
}

std::vector<double> forward(const LayeredModel& model,
                            const std::vector<double>& x) {
    return decode_output(forward_states(model, x).back(), model.cfg);
}

}  // namespace tact
