#include "tact/timing_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tact {

void EncodingConfig::validate() const {
    if (!(t_in > 0.0)) {
        throw std::invalid_argument("EncodingConfig: t_in must be > 0");
    }
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("EncodingConfig: lambda must be > 0");
    }
    if (!(epsilon >= 0.0)) {
        throw std::invalid_argument("EncodingConfig: epsilon must be >= 0");
    }
}

double encode(double x, const EncodingConfig& cfg, double window_start) {
    cfg.validate();
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("encode: input " + std::to_string(x) +
                                    " outside [0,1]");
    }
    return window_start + cfg.t_in * (1.0 - x);
}

double decode_time(double t, const EncodingConfig& cfg, double window_start) {
    cfg.validate();
    if (!(t >= window_start && t <= window_start + cfg.t_in)) {
        throw std::invalid_argument("decode_time: time outside the window");
    }
    return 1.0 - (t - window_start) / cfg.t_in;
}

double choose_threshold(double beta, const EncodingConfig& cfg) {
    cfg.validate();
    if (!(beta >= 0.0)) {
        throw std::invalid_argument("choose_threshold: beta must be >= 0");
    }
    return (1.0 + cfg.epsilon) * cfg.lambda * beta * cfg.t_in;
}

namespace {

// Merges coincident events and returns them sorted by time.
std::vector<SpikeEvent> normalized_events(const std::vector<SpikeEvent>& in) {
    std::vector<SpikeEvent> events(in);
    std::sort(events.begin(), events.end(),
              [](const SpikeEvent& a, const SpikeEvent& b) {
                  return a.time < b.time;
              });
    std::vector<SpikeEvent> merged;
    merged.reserve(events.size());
    for (const SpikeEvent& e : events) {
        if (!std::isfinite(e.time)) {
            throw std::invalid_argument("solve_firing_time: non-finite event time");
        }
        if (e.slope < 0.0) {
            throw std::invalid_argument("solve_firing_time: negative slope");
        }
        if (!merged.empty() && merged.back().time == e.time) {
            merged.back().slope += e.slope;
        } else {
            merged.push_back(e);
        }
    }
    return merged;
}

}  // namespace

FiringResult solve_firing_time(const RailSpec& rail) {
    if (!(rail.theta > 0.0)) {
        throw std::invalid_argument("solve_firing_time: theta must be > 0");
    }
    const std::vector<SpikeEvent> events = normalized_events(rail.events);
    if (events.empty()) {
        return {};
    }

    // Compensated accumulation keeps the sweep stable for long rails.
    double slope = 0.0;
    double slope_c = 0.0;
    double v = 0.0;
    double v_c = 0.0;
    auto add = [](double& sum, double& comp, double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };

    double prev_t = events.front().time;
    for (const SpikeEvent& e : events) {
        if (e.time > prev_t && slope > 0.0) {
            const double v_end = v + slope * (e.time - prev_t);
            if (v_end >= rail.theta) {
                return {true, prev_t + (rail.theta - v) / slope};
            }
            add(v, v_c, slope * (e.time - prev_t));
        }
        prev_t = std::max(prev_t, e.time);
        add(slope, slope_c, e.slope);
    }
    if (slope > 0.0) {
        return {true, prev_t + (rail.theta - v) / slope};
    }
    return {};
}

double decode_same_sign_sum(const FiringResult& result, double beta,
                            const EncodingConfig& cfg, double window_start) {
    cfg.validate();
    if (!result.fired) {
        throw std::invalid_argument("decode_same_sign_sum: rail did not fire");
    }
    if (!(beta > 0.0)) {
        throw std::invalid_argument("decode_same_sign_sum: beta must be > 0");
    }
    return beta *
           (2.0 + cfg.epsilon - (result.t_nu - window_start) / cfg.t_in);
}

}  // namespace tact
