#ifndef TACT_TIMING_CORE_HPP_
#define TACT_TIMING_CORE_HPP_

#include <vector>

// Value <-> spike-timing encoding and the exact firing-time solver for a
// single rail of same-signed synapses. Times are absolute; each rail keeps
// the start of the input window it was built against.

namespace tact {

struct EncodingConfig {
    double t_in = 1.0;     // input window width
    double lambda = 1.0;   // slope scale applied to weights
    double epsilon = 0.1;  // slack factor between input and output windows

    void validate() const;
};

// One input arrival and the ramp rate it adds to the rail potential.
struct SpikeEvent {
    double time = 0.0;
    double slope = 0.0;  // >= 0; signs are handled by the dual-rail layer
};

struct RailSpec {
    std::vector<SpikeEvent> events;
    double theta = 0.0;  // firing threshold, > 0
    double window_start = 0.0;
};

// The no-fire state is data, not an error.
struct FiringResult {
    bool fired = false;
    double t_nu = 0.0;  // valid only when fired
};

// Maps x in [0,1] to a spike time: x=1 at window start, x=0 at window end.
double encode(double x, const EncodingConfig& cfg, double window_start);

// Inverse of encode for times inside the window.
double decode_time(double t, const EncodingConfig& cfg, double window_start);

// theta = (1 + epsilon) * lambda * beta * t_in. beta = 0 yields theta = 0;
// callers must treat such rails as never firing.
double choose_threshold(double beta, const EncodingConfig& cfg);

// Exact piecewise-linear event sweep: between event times the potential is
// linear, so the first threshold crossing is solved in closed form. No time
// discretization.
FiringResult solve_firing_time(const RailSpec& rail);

// Recovers sum(a_i * x_i) = beta * (2 + epsilon - (t_nu - window_start)/t_in)
// for a rail whose threshold came from choose_threshold.
double decode_same_sign_sum(const FiringResult& result, double beta,
                            const EncodingConfig& cfg, double window_start);

}  // namespace tact

#endif  // TACT_TIMING_CORE_HPP_
