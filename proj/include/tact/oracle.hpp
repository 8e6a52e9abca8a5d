#ifndef TACT_ORACLE_HPP_
#define TACT_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "tact/network.hpp"
#include "tact/timing_core.hpp"

// Independent references used for verification: a conventional floating-point
// feedforward pass and a dense time-grid integrate-and-fire simulator. Kept
// deliberately different in shape from the event-sweep implementation.

namespace tact {

struct GridSimConfig {
    double step = 1e-3;
    double horizon = 100.0;  // simulated time past the earliest event
};

struct OracleForward {
    std::vector<double> final_preactivations;
    std::vector<std::vector<double>> per_layer_activations;
};

// Plain dense matrix-vector forward pass, ReLU on hidden layers, identity on
// the final layer.
OracleForward oracle_forward(const LayeredModel& model,
                             const std::vector<double>& x);

// Brute-force discretization of the rail potential; first grid time with
// V >= theta.
FiringResult grid_fire(const RailSpec& rail, const GridSimConfig& cfg);

struct ComparisonReport {
    std::size_t n_inputs = 0;
    double max_abs_error = 0.0;
    double max_rel_error = 0.0;
    std::size_t argmax_matches = 0;

    double argmax_agreement() const {
        return n_inputs == 0 ? 1.0
                             : static_cast<double>(argmax_matches) /
                                   static_cast<double>(n_inputs);
    }
};

// Runs the timing path and the oracle over every input and accumulates error
// statistics. Relative errors use max(|a|, |b|, 1e-12) denominators.
ComparisonReport compare(const LayeredModel& model,
                         const std::vector<std::vector<double>>& inputs);

}  // namespace tact

#endif  // TACT_ORACLE_HPP_
