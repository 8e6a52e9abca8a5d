#ifndef TACT_MODEL_IO_HPP_
#define TACT_MODEL_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tact/network.hpp"

// File formats and deterministic model generation for the CLI and bindings.

namespace tact {

// Malformed input files and bad user parameters; mapped to exit code 2.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// JSON model document: {"t_in", "lambda", "epsilon", "layers": [{"weights":
// [fan_in][fan_out], "bias": [fan_out], "activation": "relu"|"none"}]}.
LayeredModel load_model(const std::string& path);
LayeredModel parse_model(const std::string& json_text);
std::string model_to_json(const LayeredModel& model);
void save_model(const LayeredModel& model, const std::string& path);

// One vector per line, comma or whitespace separated decimals in [0,1].
// Out-of-range values are rejected, not clamped.
std::vector<std::vector<double>> load_inputs(const std::string& path);
std::vector<std::vector<double>> parse_inputs(std::istream& in);

// Rows of "t_on, weight" for the circuit subcommand.
std::vector<std::pair<double, double>> load_events(const std::string& path);

enum class WeightMode { Analog, Binary };

// "784-100-100-10" -> {784, 100, 100, 10}
std::vector<std::size_t> parse_shape(const std::string& shape);

// Seeded generation: analog weights uniform in [-1,1], binary in {-1,+1},
// biases uniform in [-0.1,0.1]. ReLU on hidden layers, none on the last.
LayeredModel generate_model(const std::vector<std::size_t>& shape,
                            std::uint32_t seed, WeightMode mode,
                            const EncodingConfig& cfg = {});

// CSV: layer_index,neuron_index,t_plus,t_minus,gain (header row included).
void write_trace(std::ostream& out, const std::vector<TimingState>& states);

// Full round-trip decimal formatting used by every text output.
std::string format_double(double v);

}  // namespace tact

#endif  // TACT_MODEL_IO_HPP_
