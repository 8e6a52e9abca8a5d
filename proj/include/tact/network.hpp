#ifndef TACT_NETWORK_HPP_
#define TACT_NETWORK_HPP_

#include <cstddef>
#include <vector>

#include "tact/dual_rail.hpp"
#include "tact/timing_core.hpp"

// Multi-layer timing propagation. Layers exchange raw timing pairs; signed
// sums are never materialized in hidden layers. Each neuron carries a
// cumulative gain that converts its timing difference into a value at decode.

namespace tact {

enum class Activation { ReLU, None };

struct DenseLayer {
    std::vector<std::vector<double>> weights;  // [fan_in][fan_out]
    std::vector<double> biases;                // [fan_out]
    Activation activation = Activation::None;

    std::size_t fan_in() const { return weights.size(); }
    std::size_t fan_out() const { return biases.size(); }
    void validate() const;
};

struct LayeredModel {
    std::vector<DenseLayer> layers;
    EncodingConfig cfg;

    void validate() const;
};

struct TimingState {
    std::vector<TimingPair> pairs;  // one per neuron of the current layer
    double window_start = 0.0;
    std::vector<double> gains;  // cumulative scale per neuron
};

struct PoolSpec {
    std::size_t group_size = 1;
};

// Layer-0 state: pair_i = (encode(x_i), window end), gains all 1.
TimingState encode_layer0(const std::vector<double>& x,
                          const EncodingConfig& cfg);

// One dense layer step. Synapse slopes are scaled by the upstream gains so
// that gain_k = sum_j |w_jk| * gain_j + |b_k| is exactly the new neuron's
// rail magnitude. ReLU clamps t_minus up to t_plus when the sum is negative.
// The output window starts (1 + epsilon) * t_in after the input window.
TimingState propagate(const TimingState& state, const DenseLayer& layer,
                      const EncodingConfig& cfg);

// output_k = gain_k * (t_minus_k - t_plus_k) / t_in
std::vector<double> decode_output(const TimingState& state,
                                  const EncodingConfig& cfg);

// Per group of group_size neurons, keeps the pair (and gain) with the largest
// t_minus - t_plus; ties go to the lowest index. Gains must match within a
// group.
TimingState max_pool(const TimingState& state, const PoolSpec& pool);

// encode_layer0 -> propagate per layer -> decode_output.
std::vector<double> forward(const LayeredModel& model,
                            const std::vector<double>& x);

// Same as forward but returns every intermediate state (for tracing).
std::vector<TimingState> forward_states(const LayeredModel& model,
                                        const std::vector<double>& x);

}  // namespace tact

#endif  // TACT_NETWORK_HPP_
