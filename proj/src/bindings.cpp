#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tact/circuit.hpp"
#include "tact/dual_rail.hpp"
#include "tact/model_io.hpp"
#include "tact/network.hpp"
#include "tact/oracle.hpp"
#include "tact/timing_core.hpp"

namespace py = pybind11;
using namespace py::literals;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Time-domain analog weighted-sum computation (TACT)";

    py::register_exception<tact::ParseError>(m, "ParseError");

    py::class_<tact::EncodingConfig>(m, "EncodingConfig")
        .def(py::init([](double t_in, double lambda, double epsilon) {
                 tact::EncodingConfig cfg{t_in, lambda, epsilon};
                 cfg.validate();
                 return cfg;
             }),
             "t_in"_a = 1.0, "lambda_"_a = 1.0, "epsilon"_a = 0.1)
        .def_readwrite("t_in", &tact::EncodingConfig::t_in)
        .def_readwrite("lambda_", &tact::EncodingConfig::lambda)
        .def_readwrite("epsilon", &tact::EncodingConfig::epsilon);

    py::class_<tact::SpikeEvent>(m, "SpikeEvent")
        .def(py::init<double, double>(), "time"_a, "slope"_a)
        .def_readwrite("time", &tact::SpikeEvent::time)
        .def_readwrite("slope", &tact::SpikeEvent::slope);

    py::class_<tact::RailSpec>(m, "RailSpec")
        .def(py::init<>())
        .def_readwrite("events", &tact::RailSpec::events)
        .def_readwrite("theta", &tact::RailSpec::theta)
        .def_readwrite("window_start", &tact::RailSpec::window_start);

    py::class_<tact::FiringResult>(m, "FiringResult")
        .def_readonly("fired", &tact::FiringResult::fired)
        .def_readonly("t_nu", &tact::FiringResult::t_nu)
        .def("__repr__", [](const tact::FiringResult& r) {
            return r.fired ? "FiringResult(t_nu=" + std::to_string(r.t_nu) + ")"
                           : std::string("FiringResult(no-fire)");
        });

    py::class_<tact::TimingPair>(m, "TimingPair")
        .def(py::init<double, double>(), "t_plus"_a, "t_minus"_a)
        .def_readwrite("t_plus", &tact::TimingPair::t_plus)
        .def_readwrite("t_minus", &tact::TimingPair::t_minus);

    m.def("encode", &tact::encode, "x"_a, "cfg"_a, "window_start"_a = 0.0);
    m.def("decode_time", &tact::decode_time, "t"_a, "cfg"_a,
          "window_start"_a = 0.0);
    m.def("choose_threshold", &tact::choose_threshold, "beta"_a, "cfg"_a);
    m.def("solve_firing_time", &tact::solve_firing_time, "rail"_a);
    m.def("decode_same_sign_sum", &tact::decode_same_sign_sum, "result"_a,
          "beta"_a, "cfg"_a, "window_start"_a = 0.0);

    py::enum_<tact::SumMode>(m, "SumMode")
        .value("DummyWeight", tact::SumMode::DummyWeight)
        .value("DualInput", tact::SumMode::DualInput);

    m.def(
        "signed_weighted_sum",
        [](const std::vector<double>& weights, const std::vector<double>& inputs,
           const tact::EncodingConfig& cfg, tact::SumMode mode) {
            return tact::compute_signed_sum({weights, inputs, cfg, mode});
        },
        "weights"_a, "inputs"_a, "cfg"_a = tact::EncodingConfig{},
        "mode"_a = tact::SumMode::DualInput,
        "Signed weighted sum computed purely via firing times.");

    py::enum_<tact::Activation>(m, "Activation")
        .value("ReLU", tact::Activation::ReLU)
        .value("NoActivation", tact::Activation::None);

    py::class_<tact::DenseLayer>(m, "DenseLayer")
        .def(py::init<>())
        .def_readwrite("weights", &tact::DenseLayer::weights)
        .def_readwrite("biases", &tact::DenseLayer::biases)
        .def_readwrite("activation", &tact::DenseLayer::activation);

    py::class_<tact::LayeredModel>(m, "LayeredModel")
        .def(py::init<>())
        .def_readwrite("layers", &tact::LayeredModel::layers)
        .def_readwrite("cfg", &tact::LayeredModel::cfg);

    m.def("forward", &tact::forward, "model"_a, "x"_a,
          "Timing-domain inference; decodes only at the final layer.");
    m.def(
        "oracle_forward",
        [](const tact::LayeredModel& model, const std::vector<double>& x) {
            return tact::oracle_forward(model, x).final_preactivations;
        },
        "model"_a, "x"_a, "Conventional floating-point forward pass.");

    py::class_<tact::ComparisonReport>(m, "ComparisonReport")
        .def_readonly("n_inputs", &tact::ComparisonReport::n_inputs)
        .def_readonly("max_abs_error", &tact::ComparisonReport::max_abs_error)
        .def_readonly("max_rel_error", &tact::ComparisonReport::max_rel_error)
        .def_readonly("argmax_matches", &tact::ComparisonReport::argmax_matches)
        .def("argmax_agreement", &tact::ComparisonReport::argmax_agreement);
    m.def("compare", &tact::compare, "model"_a, "inputs"_a);

    py::class_<tact::CrossbarParams>(m, "CrossbarParams")
        .def(py::init<>())
        .def_readwrite("n_inputs", &tact::CrossbarParams::n_inputs)
        .def_readwrite("m_outputs", &tact::CrossbarParams::m_outputs)
        .def_readwrite("c_dl_per_syn", &tact::CrossbarParams::c_dl_per_syn)
        .def_readwrite("c_al_per_syn", &tact::CrossbarParams::c_al_per_syn)
        .def_readwrite("c_in_neuron", &tact::CrossbarParams::c_in_neuron)
        .def_readwrite("v_dd", &tact::CrossbarParams::v_dd)
        .def_readwrite("e_neuron", &tact::CrossbarParams::e_neuron)
        .def_readwrite("r_syn", &tact::CrossbarParams::r_syn);

    py::class_<tact::EnergyReport>(m, "EnergyReport")
        .def_readonly("e_syn", &tact::EnergyReport::e_syn)
        .def_readonly("e_neuron_per_syn", &tact::EnergyReport::e_neuron_per_syn)
        .def_readonly("e_total_per_syn", &tact::EnergyReport::e_total_per_syn)
        .def_readonly("e_c_in", &tact::EnergyReport::e_c_in)
        .def_readonly("ops_per_syn", &tact::EnergyReport::ops_per_syn)
        .def_readonly("tops_per_watt", &tact::EnergyReport::tops_per_watt);
    m.def("energy_report", &tact::energy_report, "params"_a);

    py::class_<tact::CurrentCheck>(m, "CurrentCheck")
        .def_readonly("i_max", &tact::CurrentCheck::i_max)
        .def_readonly("limit", &tact::CurrentCheck::limit)
        .def_readonly("within_limit", &tact::CurrentCheck::within_limit)
        .def_readonly("gate_source_bias",
                      &tact::CurrentCheck::gate_source_bias);
    m.def("subthreshold_current_check", &tact::subthreshold_current_check,
          "params"_a);

    py::class_<tact::RcBranch>(m, "RcBranch")
        .def(py::init<double, double>(), "t_on"_a, "conductance"_a)
        .def_readwrite("t_on", &tact::RcBranch::t_on)
        .def_readwrite("conductance", &tact::RcBranch::conductance);

    py::class_<tact::RcRailSpec>(m, "RcRailSpec")
        .def(py::init<>())
        .def_readwrite("branches", &tact::RcRailSpec::branches)
        .def_readwrite("cap", &tact::RcRailSpec::cap)
        .def_readwrite("v_dd", &tact::RcRailSpec::v_dd)
        .def_readwrite("theta_v", &tact::RcRailSpec::theta_v)
        .def_readwrite("v_init", &tact::RcRailSpec::v_init);
    m.def("rc_fire_time", &tact::rc_fire_time, "rail"_a);

    py::enum_<tact::SlopeCalibration>(m, "SlopeCalibration")
        .value("InitialRate", tact::SlopeCalibration::InitialRate)
        .value("AtThreshold", tact::SlopeCalibration::AtThreshold);

    py::class_<tact::TimingErrorReport>(m, "TimingErrorReport")
        .def_readonly("ideal", &tact::TimingErrorReport::ideal)
        .def_readonly("rc", &tact::TimingErrorReport::rc)
        .def_readonly("abs_deviation", &tact::TimingErrorReport::abs_deviation)
        .def_readonly("rel_deviation", &tact::TimingErrorReport::rel_deviation)
        .def_readonly("ideal_sum", &tact::TimingErrorReport::ideal_sum)
        .def_readonly("rc_sum", &tact::TimingErrorReport::rc_sum)
        .def_readonly("sum_abs_error",
                      &tact::TimingErrorReport::sum_abs_error);
    m.def("timing_error_report", &tact::timing_error_report, "weights"_a,
          "inputs"_a, "cap"_a, "v_dd"_a, "theta_v"_a,
          "cfg"_a = tact::EncodingConfig{},
          "calibration"_a = tact::SlopeCalibration::InitialRate);

    m.def("load_model", &tact::load_model, "path"_a);
    m.def("save_model", &tact::save_model, "model"_a, "path"_a);
    py::enum_<tact::WeightMode>(m, "WeightMode")
        .value("Analog", tact::WeightMode::Analog)
        .value("Binary", tact::WeightMode::Binary);
    m.def("generate_model", &tact::generate_model, "shape"_a, "seed"_a,
          "mode"_a = tact::WeightMode::Analog,
          "cfg"_a = tact::EncodingConfig{});

#ifdef TACT_VERSION
    m.attr("__version__") = TACT_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
