#include "tact/dual_rail.hpp"

#include <cmath>
#include <stdexcept>

namespace tact {

namespace {

double window_end_pair_time(const EncodingConfig& cfg, double window_start) {
    return window_start + (2.0 + cfg.epsilon) * cfg.t_in;
}

void finalize(DualRailNeuron& neuron) {
    const double theta = choose_threshold(neuron.beta_o, neuron.cfg);
    neuron.pos_rail.theta = theta;
    neuron.neg_rail.theta = theta;
    neuron.pos_rail.window_start = neuron.window_start;
    neuron.neg_rail.window_start = neuron.window_start;
}

}  // namespace

DualRailNeuron build_dummy_weight_neuron(const SignedWeightedSumSpec& spec,
                                         double window_start) {
    spec.cfg.validate();
    if (spec.weights.empty() || spec.weights.size() != spec.inputs.size()) {
        throw std::invalid_argument(
            "build_dummy_weight_neuron: weights and inputs must have equal "
            "nonzero length");
    }

    DualRailNeuron neuron;
    neuron.cfg = spec.cfg;
    neuron.window_start = window_start;

    double beta_pos = 0.0;
    double beta_neg = 0.0;  // <= 0
    for (std::size_t i = 0; i < spec.weights.size(); ++i) {
        const double a = spec.weights[i];
        if (a == 0.0) {
            continue;
        }
        const double t = encode(spec.inputs[i], spec.cfg, window_start);
        if (a > 0.0) {
            neuron.pos_rail.events.push_back({t, spec.cfg.lambda * a});
            beta_pos += a;
        } else {
            neuron.neg_rail.events.push_back({t, spec.cfg.lambda * -a});
            beta_neg += a;
        }
    }

    // Dummy weight with zero input balances the lighter rail.
    const double a0 = -(beta_pos + beta_neg);
    const double t0 = window_start + spec.cfg.t_in;
    if (a0 < 0.0) {
        neuron.neg_rail.events.push_back({t0, spec.cfg.lambda * -a0});
    } else if (a0 > 0.0) {
        neuron.pos_rail.events.push_back({t0, spec.cfg.lambda * a0});
    }
    neuron.beta_o = std::max(beta_pos, -beta_neg);
    if (neuron.degenerate()) {
        return neuron;
    }
    finalize(neuron);
    return neuron;
}

DualRailNeuron build_dual_input_neuron(const std::vector<double>& weights,
                                       double bias,
                                       const std::vector<TimingPair>& input_pairs,
                                       const EncodingConfig& cfg,
                                       double window_start) {
    cfg.validate();
    if (weights.size() != input_pairs.size()) {
        throw std::invalid_argument(
            "build_dual_input_neuron: weights and input_pairs lengths differ");
    }

    DualRailNeuron neuron;
    neuron.cfg = cfg;
    neuron.window_start = window_start;

    double beta_o = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double w = weights[i];
        if (w == 0.0) {
            continue;
        }
        const TimingPair& p = input_pairs[i];
        const double k = cfg.lambda * std::abs(w);
        if (w > 0.0) {
            neuron.pos_rail.events.push_back({p.t_plus, k});
            neuron.neg_rail.events.push_back({p.t_minus, k});
        } else {
            neuron.pos_rail.events.push_back({p.t_minus, k});
            neuron.neg_rail.events.push_back({p.t_plus, k});
        }
        beta_o += std::abs(w);
    }
    if (bias != 0.0) {
        const double k = cfg.lambda * std::abs(bias);
        const double t_near = window_start;            // the x = 1 anchor
        const double t_far = window_start + cfg.t_in;  // the x = 0 anchor
        if (bias > 0.0) {
            neuron.pos_rail.events.push_back({t_near, k});
            neuron.neg_rail.events.push_back({t_far, k});
        } else {
            neuron.pos_rail.events.push_back({t_far, k});
            neuron.neg_rail.events.push_back({t_near, k});
        }
        beta_o += std::abs(bias);
    }
    neuron.beta_o = beta_o;
    if (neuron.degenerate()) {
        return neuron;
    }
    finalize(neuron);
    return neuron;
}

TimingPair encode_input_pair(double x, const EncodingConfig& cfg,
                             double window_start) {
    return {encode(x, cfg, window_start), window_start + cfg.t_in};
}

TimingPair fire_dual(const DualRailNeuron& neuron) {
    if (neuron.degenerate()) {
        const double t = window_end_pair_time(neuron.cfg, neuron.window_start);
        return {t, t};
    }
    const FiringResult pos = solve_firing_time(neuron.pos_rail);
    const FiringResult neg = solve_firing_time(neuron.neg_rail);
    if (!pos.fired || !neg.fired) {
        // Balanced rails with beta_o > 0 always cross the threshold.
        throw std::logic_error("fire_dual: unbalanced rail did not fire");
    }
    return {pos.t_nu, neg.t_nu};
}

double decode_signed_sum(const TimingPair& pair, double beta_o,
                         const EncodingConfig& cfg) {
    cfg.validate();
    if (!(beta_o >= 0.0)) {
        throw std::invalid_argument("decode_signed_sum: beta_o must be >= 0");
    }
    return beta_o * (pair.t_minus - pair.t_plus) / cfg.t_in;
}

double compute_signed_sum(const SignedWeightedSumSpec& spec,
                          double window_start) {
    DualRailNeuron neuron;
    if (spec.mode == SumMode::DummyWeight) {
        neuron = build_dummy_weight_neuron(spec, window_start);
    } else {
        if (spec.weights.size() != spec.inputs.size()) {
            throw std::invalid_argument(
                "compute_signed_sum: weights and inputs lengths differ");
        }
        std::vector<TimingPair> pairs;
        pairs.reserve(spec.inputs.size());
        for (double x : spec.inputs) {
            pairs.push_back(encode_input_pair(x, spec.cfg, window_start));
        }
        neuron = build_dual_input_neuron(spec.weights, 0.0, pairs, spec.cfg,
                                         window_start);
    }
    return decode_signed_sum(fire_dual(neuron), neuron.beta_o, spec.cfg);
}

}  // namespace tact
