#include "tact/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tact {

OracleForward oracle_forward(const LayeredModel& model,
                             const std::vector<double>& x) {
    model.validate();
    if (model.layers.front().fan_in() != x.size()) {
        throw std::invalid_argument("oracle_forward: input size mismatch");
    }

    OracleForward result;
    std::vector<double> activ = x;
    for (const DenseLayer& layer : model.layers) {
        std::vector<double> pre(layer.fan_out(), 0.0);
        for (std::size_t k = 0; k < layer.fan_out(); ++k) {
            double acc = layer.biases[k];
            for (std::size_t j = 0; j < layer.fan_in(); ++j) {
                acc += layer.weights[j][k] * activ[j];
            }
            pre[k] = acc;
        }
        if (layer.activation == Activation::ReLU) {
            activ = pre;
            for (double& v : activ) {
                v = std::max(0.0, v);
            }
        } else {
            activ = pre;
        }
        result.per_layer_activations.push_back(activ);
        result.final_preactivations = pre;
    }
    return result;
}

FiringResult grid_fire(const RailSpec& rail, const GridSimConfig& cfg) {
    if (!(cfg.step > 0.0)) {
        throw std::invalid_argument("grid_fire: step must be > 0");
    }
    if (rail.events.empty()) {
        return {};
    }
    double t0 = rail.events.front().time;
    for (const SpikeEvent& e : rail.events) {
        t0 = std::min(t0, e.time);
    }
    const auto steps = static_cast<std::size_t>(cfg.horizon / cfg.step);
    for (std::size_t n = 0; n <= steps; ++n) {
        const double t = t0 + static_cast<double>(n) * cfg.step;
        double v = 0.0;
        for (const SpikeEvent& e : rail.events) {
            if (t >= e.time) {
                v += e.slope * (t - e.time);
            }
        }
        if (v >= rail.theta) {
            return {true, t};
        }
    }
    return {};
}

ComparisonReport compare(const LayeredModel& model,
                         const std::vector<std::vector<double>>& inputs) {
    ComparisonReport report;
    report.n_inputs = inputs.size();
    for (const auto& x : inputs) {
        const std::vector<double> timing = forward(model, x);
        const std::vector<double> reference =
            oracle_forward(model, x).final_preactivations;
        for (std::size_t k = 0; k < timing.size(); ++k) {
            const double abs_err = std::abs(timing[k] - reference[k]);
            const double denom =
                std::max({std::abs(timing[k]), std::abs(reference[k]), 1e-12});
            report.max_abs_error = std::max(report.max_abs_error, abs_err);
            report.max_rel_error =
                std::max(report.max_rel_error, abs_err / denom);
        }
        const auto argmax = [](const std::vector<double>& v) {
            return std::distance(v.begin(),
                                 std::max_element(v.begin(), v.end()));
        };
        if (argmax(timing) == argmax(reference)) {
            ++report.argmax_matches;
        }
    }
    return report;
}

}  // namespace tact
