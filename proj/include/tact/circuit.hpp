#ifndef TACT_CIRCUIT_HPP_
#define TACT_CIRCUIT_HPP_

#include <cstddef>
#include <vector>

#include "tact/timing_core.hpp"

// Physical realization of a rail: rectifying resistors charging a shared
// capacitor, an ideal comparator neuron, crossbar parasitics, and the energy
// accounting. Inactive branches are ideal opens; V never exceeds V_dd, so no
// branch current ever reverses.

namespace tact {

struct RcBranch {
    double t_on = 0.0;        // step input arrival
    double conductance = 0.0; // 1/R of the branch, > 0
};

struct RcRailSpec {
    std::vector<RcBranch> branches;
    double cap = 0.0;      // total node capacitance, > 0
    double v_dd = 0.0;     // step amplitude, > 0
    double theta_v = 0.0;  // comparator threshold, in (0, v_dd)
    double v_init = 0.0;   // initial node voltage

    void validate() const;
};

// Between branch activations the node relaxes exponentially toward v_dd with
// time constant cap / (sum of active conductances).
struct RcSegment {
    double t_start = 0.0;
    double v_start = 0.0;
    double conductance = 0.0;  // total active conductance over the segment
};

struct RcTrajectory {
    std::vector<RcSegment> segments;  // ordered, last segment unbounded
    double cap = 0.0;
    double v_dd = 0.0;
    double v_init = 0.0;

    double voltage_at(double t) const;
};

// Exact piecewise-exponential solution of C dV/dt = sum_on g_i (v_dd - V),
// with segments emitted up to `until`.
RcTrajectory rc_transient(const RcRailSpec& rail, double until);

// First t with V(t) = theta_v, inverted per segment via the logarithm.
FiringResult rc_fire_time(const RcRailSpec& rail);

struct CrossbarParams {
    std::size_t n_inputs = 0;   // axon lines (N)
    std::size_t m_outputs = 0;  // dendrite lines (M)
    double c_dl_per_syn = 0.0;  // dendrite-line parasitic per synapse
    double c_al_per_syn = 0.0;  // axon-line parasitic per synapse
    double c_in_neuron = 0.0;   // post-neuron input capacitance
    double v_dd = 0.0;
    double e_neuron = 0.0;      // comparator + buffer energy per firing
    double r_syn = 0.0;         // per-synapse ON resistance

    void validate() const;
};

struct EnergyReport {
    double e_syn = 0.0;            // line charge/discharge per synapse event
    double e_neuron_per_syn = 0.0; // neuron energy amortized over N inputs
    double e_total_per_syn = 0.0;
    double e_c_in = 0.0;           // C_i contribution, reported separately
    int ops_per_syn = 2;           // multiply + accumulate
    double tops_per_watt = 0.0;
};

// e_syn = (c_dl + c_al) * v_dd^2; efficiency = ops / e_total in TOPS/W.
EnergyReport energy_report(const CrossbarParams& params);

struct CurrentCheck {
    double i_max = 0.0;              // v_dd / r_syn
    double limit = 1e-9;             // sub-nA bound
    bool within_limit = false;
    double gate_source_bias = -0.37; // recorded metadata, not simulated
};

CurrentCheck subthreshold_current_check(const CrossbarParams& params);

// How abstract PSP slopes are calibrated to branch conductances.
enum class SlopeCalibration {
    InitialRate,  // match dV/dt at V = 0
    AtThreshold,  // match dV/dt at V = theta_v
};

struct TimingErrorReport {
    FiringResult ideal;
    FiringResult rc;
    double abs_deviation = 0.0;   // rc - ideal firing time
    double rel_deviation = 0.0;   // relative to the ideal firing time
    double ideal_sum = 0.0;       // decoded weighted sum, ideal rail
    double rc_sum = 0.0;          // decoded weighted sum, RC rail
    double sum_abs_error = 0.0;
};

// Maps a same-signed rail (weights >= 0, inputs in [0,1]) onto conductances
// and quantifies how far the exponential transient lags the ideal linear
// ramp, both in firing time and in the decoded weighted sum.
TimingErrorReport timing_error_report(
    const std::vector<double>& weights, const std::vector<double>& inputs,
    double cap, double v_dd, double theta_v, const EncodingConfig& cfg,
    SlopeCalibration calibration = SlopeCalibration::InitialRate);

}  // namespace tact

#endif  // TACT_CIRCUIT_HPP_
