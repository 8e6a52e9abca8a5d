// Command-line front end: timing-domain forward inference, seeded model
// generation, crossbar energy accounting, and RC firing-time analysis.
//
// Exit codes: 0 success, 1 computation-level error, 2 input/parse error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tact/circuit.hpp"
#include "tact/model_io.hpp"
#include "tact/network.hpp"
#include "tact/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCompute = 1;
constexpr int kExitParse = 2;

void print_vector(const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            std::cout << ' ';
        }
        std::cout << tact::format_double(v[i]);
    }
    std::cout << "\n";
}

int run_forward(const std::string& model_path, const std::string& input_path,
                const std::string& mode, const std::string& trace_path) {
    const tact::LayeredModel model = tact::load_model(model_path);
    const auto inputs = tact::load_inputs(input_path);
    if (inputs.empty()) {
        throw tact::ParseError("inputs: no vectors found in " + input_path);
    }

    std::ofstream trace;
    if (!trace_path.empty()) {
        trace.open(trace_path);
        if (!trace) {
            throw tact::ParseError("cannot open trace file: " + trace_path);
        }
    }

    const bool want_timing = mode == "timing" || mode == "both";
    const bool want_oracle = mode == "oracle" || mode == "both";
    std::vector<tact::TimingState> all_states;
    for (const auto& x : inputs) {
        if (want_timing) {
            const auto states = tact::forward_states(model, x);
            print_vector(tact::decode_output(states.back(), model.cfg));
            if (trace.is_open()) {
                tact::write_trace(trace, states);
            }
        }
        if (want_oracle && mode != "both") {
            print_vector(tact::oracle_forward(model, x).final_preactivations);
        }
    }
    if (mode == "both") {
        const tact::ComparisonReport report = tact::compare(model, inputs);
        std::cout << "max_abs_err=" << tact::format_double(report.max_abs_error)
                  << " max_rel_err="
                  << tact::format_double(report.max_rel_error)
                  << " argmax_match=" << report.argmax_matches << "/"
                  << report.n_inputs << "\n";
    }
    return kExitOk;
}

int run_gen_model(const std::string& shape, unsigned seed,
                  const std::string& weight_mode, const std::string& out_path,
                  const tact::EncodingConfig& cfg) {
    const auto dims = tact::parse_shape(shape);
    const tact::WeightMode mode = weight_mode == "binary"
                                      ? tact::WeightMode::Binary
                                      : tact::WeightMode::Analog;
    tact::save_model(tact::generate_model(dims, seed, mode, cfg), out_path);
    return kExitOk;
}

int run_energy(const tact::CrossbarParams& params) {
    const tact::EnergyReport report = tact::energy_report(params);
    const tact::CurrentCheck check = tact::subthreshold_current_check(params);
    std::cout << "e_syn_fj=" << tact::format_double(report.e_syn * 1e15) << "\n"
              << "e_neuron_per_syn_fj="
              << tact::format_double(report.e_neuron_per_syn * 1e15) << "\n"
              << "e_total_per_syn_fj="
              << tact::format_double(report.e_total_per_syn * 1e15) << "\n"
              << "e_c_in_fj=" << tact::format_double(report.e_c_in * 1e15)
              << "\n"
              << "ops_per_syn=" << report.ops_per_syn << "\n"
              << "efficiency_tops_per_watt="
              << tact::format_double(report.tops_per_watt) << "\n"
              << "i_max_na=" << tact::format_double(check.i_max * 1e9) << "\n"
              << "i_max_within_1na=" << (check.within_limit ? "yes" : "no")
              << "\n"
              << "gate_source_bias_v="
              << tact::format_double(check.gate_source_bias) << "\n";
    return kExitOk;
}

int run_circuit(const std::string& events_path, double r, double c,
                double theta_v, double v_dd) {
    const auto events = tact::load_events(events_path);
    tact::RcRailSpec rc;
    rc.cap = c;
    rc.v_dd = v_dd;
    rc.theta_v = theta_v;
    tact::RailSpec ideal;
    ideal.theta = theta_v;
    for (const auto& [t_on, weight] : events) {
        if (!(weight > 0.0)) {
            throw tact::ParseError("events: weights must be > 0");
        }
        const double g = weight / r;
        rc.branches.push_back({t_on, g});
        // Ideal linear charging at the initial rate of the same branch.
        ideal.events.push_back({t_on, g * v_dd / c});
    }

    const tact::FiringResult rc_fire = tact::rc_fire_time(rc);
    if (!rc_fire.fired) {
        std::cout << "no-fire\n";
        return kExitOk;
    }
    const tact::FiringResult ideal_fire = tact::solve_firing_time(ideal);
    const double rel =
        (rc_fire.t_nu - ideal_fire.t_nu) / ideal_fire.t_nu;
    std::cout << "rc_firing_time=" << tact::format_double(rc_fire.t_nu) << "\n"
              << "ideal_firing_time=" << tact::format_double(ideal_fire.t_nu)
              << "\n"
              << "relative_deviation=" << tact::format_double(rel) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-domain analog weighted-sum simulator"};
    app.require_subcommand(1);

    std::string model_path;
    std::string input_path;
    std::string mode = "timing";
    std::string trace_path;
    auto* forward = app.add_subcommand(
        "forward", "Run timing-domain and/or oracle inference on a model");
    forward->add_option("--model", model_path, "Model JSON file")->required();
    forward->add_option("--input", input_path, "Input vectors file")
        ->required();
    forward->add_option("--mode", mode, "timing|oracle|both")
        ->check(CLI::IsMember({"timing", "oracle", "both"}));
    forward->add_option("--trace", trace_path, "Write per-neuron timing trace");

    std::string shape;
    unsigned seed = 0;
    std::string weight_mode = "analog";
    std::string out_path;
    tact::EncodingConfig gen_cfg;
    auto* gen = app.add_subcommand("gen-model",
                                   "Generate a deterministic random model");
    gen->add_option("--shape", shape, "Layer sizes, e.g. 784-100-100-10")
        ->required();
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--weight-mode", weight_mode, "analog|binary")
        ->check(CLI::IsMember({"analog", "binary"}));
    gen->add_option("--out", out_path, "Output model path")->required();
    gen->add_option("--t-in", gen_cfg.t_in, "Input window width");
    gen->add_option("--lambda", gen_cfg.lambda, "Slope scale");
    gen->add_option("--epsilon", gen_cfg.epsilon, "Window slack factor");

    tact::CrossbarParams params;
    params.n_inputs = 500;
    params.m_outputs = 20;
    params.c_dl_per_syn = 1.76e-15;
    params.c_al_per_syn = 1.78e-15;
    params.c_in_neuron = 0.0;
    params.v_dd = 1.0;
    params.e_neuron = 1.67e-12;
    params.r_syn = 1e9;
    auto* energy =
        app.add_subcommand("energy", "Crossbar energy and efficiency report");
    energy->add_option("--n", params.n_inputs, "Inputs per dendrite line (N)");
    energy->add_option("--m", params.m_outputs, "Outputs (M)");
    energy->add_option("--cdl", params.c_dl_per_syn,
                       "Dendrite-line capacitance per synapse (F)");
    energy->add_option("--cal", params.c_al_per_syn,
                       "Axon-line capacitance per synapse (F)");
    energy->add_option("--ci", params.c_in_neuron,
                       "Neuron input capacitance (F)");
    energy->add_option("--vdd", params.v_dd, "Supply voltage (V)");
    energy->add_option("--e-neuron", params.e_neuron,
                       "Neuron energy per firing (J)");
    energy->add_option("--r", params.r_syn, "Per-synapse ON resistance (Ohm)");

    std::string events_path;
    double r = 1e9;
    double c = 1e-12;
    double theta_v = 0.3;
    double v_dd = 1.0;
    auto* circuit = app.add_subcommand(
        "circuit", "RC firing time versus the ideal linear model");
    circuit->add_option("--events", events_path, "Rows of: t_on weight")
        ->required();
    circuit->add_option("--r", r, "Base branch resistance (Ohm)");
    circuit->add_option("--c", c, "Node capacitance (F)");
    circuit->add_option("--theta-v", theta_v, "Comparator threshold (V)");
    circuit->add_option("--vdd", v_dd, "Step amplitude (V)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (forward->parsed()) {
            return run_forward(model_path, input_path, mode, trace_path);
        }
        if (gen->parsed()) {
            return run_gen_model(shape, seed, weight_mode, out_path, gen_cfg);
        }
        if (energy->parsed()) {
            return run_energy(params);
        }
        if (circuit->parsed()) {
            return run_circuit(events_path, r, c, theta_v, v_dd);
        }
    } catch (const tact::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitOk;
}
