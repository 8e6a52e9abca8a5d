#ifndef TACT_DUAL_RAIL_HPP_
#define TACT_DUAL_RAIL_HPP_

#include <vector>

#include "tact/timing_core.hpp"

// Signed weighted sums from two coupled same-signed rails. Both rails are
// simulated as positive accumulations; the "negative" threshold is stored as
// the same positive magnitude.

namespace tact {

enum class SumMode {
    DummyWeight,  // balance the rails with a synthetic zero-input weight
    DualInput,    // every synapse feeds both rails; no dummy needed
};

struct TimingPair {
    double t_plus = 0.0;   // firing time of the positive rail
    double t_minus = 0.0;  // firing time of the negative rail
};

struct SignedWeightedSumSpec {
    std::vector<double> weights;  // any sign
    std::vector<double> inputs;   // in [0,1]
    EncodingConfig cfg;
    SumMode mode = SumMode::DualInput;
};

struct DualRailNeuron {
    RailSpec pos_rail;
    RailSpec neg_rail;
    double beta_o = 0.0;  // common rail magnitude; 0 marks a degenerate neuron
    EncodingConfig cfg;
    double window_start = 0.0;

    bool degenerate() const { return beta_o == 0.0; }
};

// Fig.-2(b) style construction: positive weights on one rail, negative on the
// other, plus a dummy weight a0 = -(beta+ + beta-) at the window end on the
// lighter rail so both rails carry beta_o = max(beta+, -beta-).
DualRailNeuron build_dummy_weight_neuron(const SignedWeightedSumSpec& spec,
                                         double window_start);

// Fig.-2(c) style construction over timing pairs: w >= 0 sends t_plus to the
// positive rail and t_minus to the negative rail, w < 0 swaps them. The bias
// anchors at window_start on the rail matching its sign and at the window end
// on the other. beta_o = sum|w| + |bias|; zero weights are dropped.
DualRailNeuron build_dual_input_neuron(const std::vector<double>& weights,
                                       double bias,
                                       const std::vector<TimingPair>& input_pairs,
                                       const EncodingConfig& cfg,
                                       double window_start);

// Encodes a scalar layer-0 input as the pair (encode(x), window end).
TimingPair encode_input_pair(double x, const EncodingConfig& cfg,
                             double window_start);

// Solves both rails. A degenerate neuron returns equal timings at
// window_start + (2 + epsilon) * t_in, which decodes to zero.
TimingPair fire_dual(const DualRailNeuron& neuron);

// sum(a_i * x_i) = beta_o * (t_minus - t_plus) / t_in
double decode_signed_sum(const TimingPair& pair, double beta_o,
                         const EncodingConfig& cfg);

// build + fire + decode in the requested mode.
double compute_signed_sum(const SignedWeightedSumSpec& spec,
                          double window_start = 0.0);

}  // namespace tact

#endif  // TACT_DUAL_RAIL_HPP_
