#include "tact/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tact {

void RcRailSpec::validate() const {
    if (!(cap > 0.0)) {
        throw std::invalid_argument("RcRailSpec: cap must be > 0");
    }
    if (!(v_dd > 0.0)) {
        throw std::invalid_argument("RcRailSpec: v_dd must be > 0");
    }
    if (!(theta_v > 0.0 && theta_v < v_dd)) {
        throw std::invalid_argument("RcRailSpec: theta_v must be in (0, v_dd)");
    }
    for (const RcBranch& b : branches) {
        if (!(b.conductance > 0.0)) {
            throw std::invalid_argument(
                "RcRailSpec: branch conductance must be > 0");
        }
        if (!std::isfinite(b.t_on)) {
            throw std::invalid_argument("RcRailSpec: non-finite branch time");
        }
    }
}

double RcTrajectory::voltage_at(double t) const {
    if (segments.empty() || t < segments.front().t_start) {
        return v_init;
    }
    const RcSegment* seg = &segments.front();
    for (const RcSegment& s : segments) {
        if (s.t_start <= t) {
            seg = &s;
        } else {
            break;
        }
    }
    if (seg->conductance <= 0.0) {
        return seg->v_start;
    }
    const double tau = cap / seg->conductance;
    return v_dd - (v_dd - seg->v_start) * std::exp(-(t - seg->t_start) / tau);
}

namespace {

// Sorted branch activations with coincident arrivals merged.
std::vector<RcBranch> normalized_branches(const std::vector<RcBranch>& in) {
    std::vector<RcBranch> branches(in);
    std::sort(branches.begin(), branches.end(),
              [](const RcBranch& a, const RcBranch& b) {
                  return a.t_on < b.t_on;
              });
    std::vector<RcBranch> merged;
    for (const RcBranch& b : branches) {
        if (!merged.empty() && merged.back().t_on == b.t_on) {
            merged.back().conductance += b.conductance;
        } else {
            merged.push_back(b);
        }
    }
    return merged;
}

RcTrajectory build_trajectory(const RcRailSpec& rail, double until) {
    rail.validate();
    RcTrajectory traj;
    traj.cap = rail.cap;
    traj.v_dd = rail.v_dd;
    traj.v_init = rail.v_init;

    double v = rail.v_init;
    double g = 0.0;
    const std::vector<RcBranch> branches = normalized_branches(rail.branches);
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (branches[i].t_on > until) {
            break;
        }
        if (i > 0 && g > 0.0) {
            const double tau = rail.cap / g;
            const double dt = branches[i].t_on - branches[i - 1].t_on;
            v = rail.v_dd - (rail.v_dd - v) * std::exp(-dt / tau);
        }
        g += branches[i].conductance;
        traj.segments.push_back({branches[i].t_on, v, g});
    }
    return traj;
}

}  // namespace

RcTrajectory rc_transient(const RcRailSpec& rail, double until) {
    return build_trajectory(rail, until);
}

FiringResult rc_fire_time(const RcRailSpec& rail) {
    const RcTrajectory traj =
        build_trajectory(rail, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < traj.segments.size(); ++i) {
        const RcSegment& seg = traj.segments[i];
        if (seg.v_start >= rail.theta_v) {
            return {true, seg.t_start};
        }
        const double tau = rail.cap / seg.conductance;
        const double t_cross =
            seg.t_start + tau * std::log((rail.v_dd - seg.v_start) /
                                         (rail.v_dd - rail.theta_v));
        if (i + 1 == traj.segments.size() ||
            t_cross <= traj.segments[i + 1].t_start) {
            return {true, t_cross};
        }
    }
    return {};  // no branch ever turned on
}

void CrossbarParams::validate() const {
    if (n_inputs == 0 || m_outputs == 0) {
        throw std::invalid_argument("CrossbarParams: array sizes must be > 0");
    }
    if (!(c_dl_per_syn > 0.0) || !(c_al_per_syn > 0.0) ||
        !(v_dd > 0.0) || !(e_neuron > 0.0) || !(r_syn > 0.0)) {
        throw std::invalid_argument(
            "CrossbarParams: parameters must be positive");
    }
    if (c_in_neuron < 0.0) {
        throw std::invalid_argument("CrossbarParams: c_in_neuron must be >= 0");
    }
}

EnergyReport energy_report(const CrossbarParams& params) {
    params.validate();
    EnergyReport report;
    report.e_syn =
        (params.c_dl_per_syn + params.c_al_per_syn) * params.v_dd * params.v_dd;
    report.e_neuron_per_syn =
        params.e_neuron / static_cast<double>(params.n_inputs);
    report.e_total_per_syn = report.e_syn + report.e_neuron_per_syn;
    report.e_c_in = params.c_in_neuron * params.v_dd * params.v_dd;
    report.ops_per_syn = 2;
    // ops/J scaled to TOPS/W (1 TOPS/W = 1e12 ops/J).
    report.tops_per_watt =
        static_cast<double>(report.ops_per_syn) / report.e_total_per_syn / 1e12;
    return report;
}

CurrentCheck subthreshold_current_check(const CrossbarParams& params) {
    params.validate();
    CurrentCheck check;
    check.i_max = params.v_dd / params.r_syn;
    check.within_limit = check.i_max <= check.limit;
    return check;
}

TimingErrorReport timing_error_report(const std::vector<double>& weights,
                                      const std::vector<double>& inputs,
                                      double cap, double v_dd, double theta_v,
                                      const EncodingConfig& cfg,
                                      SlopeCalibration calibration) {
    cfg.validate();
    if (weights.size() != inputs.size()) {
        throw std::invalid_argument(
            "timing_error_report: weights and inputs lengths differ");
    }
    double beta = 0.0;
    for (double w : weights) {
        if (w < 0.0) {
            throw std::invalid_argument(
                "timing_error_report: rail weights must be same-signed (>= 0)");
        }
        beta += w;
    }

    TimingErrorReport report;
    if (beta == 0.0) {
        return report;  // both sides no-fire
    }

    RailSpec ideal;
    ideal.window_start = 0.0;
    ideal.theta = choose_threshold(beta, cfg);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] > 0.0) {
            ideal.events.push_back(
                {encode(inputs[i], cfg, 0.0), cfg.lambda * weights[i]});
        }
    }
    report.ideal = solve_firing_time(ideal);

    // Voltage scale mapping the abstract threshold onto the comparator level;
    // the ideal solver is scale invariant, so only the RC side is affected.
    const double scale = theta_v / ideal.theta;
    const double rate_v =
        calibration == SlopeCalibration::InitialRate ? v_dd : v_dd - theta_v;
    RcRailSpec rc;
    rc.cap = cap;
    rc.v_dd = v_dd;
    rc.theta_v = theta_v;
    for (const SpikeEvent& e : ideal.events) {
        rc.branches.push_back({e.time, scale * e.slope * cap / rate_v});
    }
    report.rc = rc_fire_time(rc);

    if (report.ideal.fired && report.rc.fired) {
        report.abs_deviation = report.rc.t_nu - report.ideal.t_nu;
        report.rel_deviation = report.abs_deviation / report.ideal.t_nu;
        report.ideal_sum = decode_same_sign_sum(report.ideal, beta, cfg, 0.0);
        report.rc_sum = decode_same_sign_sum(report.rc, beta, cfg, 0.0);
        report.sum_abs_error = std::abs(report.rc_sum - report.ideal_sum);
    }
    return report;
}

}  // namespace tact
