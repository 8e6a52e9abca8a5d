#include "tact/model_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace tact {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw ParseError("model: missing or non-numeric key \"" + key + "\"");
    }
    return j[key].get<double>();
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

LayeredModel parse_model(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model: invalid JSON: ") + e.what());
    }

    LayeredModel model;
    model.cfg.t_in = require_number(doc, "t_in");
    model.cfg.lambda = require_number(doc, "lambda");
    model.cfg.epsilon = require_number(doc, "epsilon");
    if (!doc.contains("layers") || !doc["layers"].is_array() ||
        doc["layers"].empty()) {
        throw ParseError("model: missing or empty \"layers\" array");
    }

    std::size_t index = 0;
    for (const json& jl : doc["layers"]) {
        DenseLayer layer;
        const std::string where = "layer " + std::to_string(index);
        if (!jl.contains("weights") || !jl["weights"].is_array() ||
            jl["weights"].empty()) {
            throw ParseError("model: " + where + ": bad \"weights\" array");
        }
        for (const json& row : jl["weights"]) {
            if (!row.is_array() || row.empty()) {
                throw ParseError("model: " + where + ": bad \"weights\" row");
            }
            std::vector<double> r;
            for (const json& v : row) {
                if (!v.is_number()) {
                    throw ParseError("model: " + where +
                                     ": non-numeric weight entry");
                }
                r.push_back(v.get<double>());
            }
            layer.weights.push_back(std::move(r));
        }
        if (!jl.contains("bias") || !jl["bias"].is_array()) {
            throw ParseError("model: " + where + ": bad \"bias\" array");
        }
        for (const json& v : jl["bias"]) {
            if (!v.is_number()) {
                throw ParseError("model: " + where + ": non-numeric bias entry");
            }
            layer.biases.push_back(v.get<double>());
        }
        const std::string act = jl.value("activation", "");
        if (act == "relu") {
            layer.activation = Activation::ReLU;
        } else if (act == "none") {
            layer.activation = Activation::None;
        } else {
            throw ParseError("model: " + where +
                             ": activation must be \"relu\" or \"none\"");
        }
        try {
            layer.validate();
        } catch (const std::invalid_argument& e) {
            throw ParseError("model: " + where + ": " + e.what());
        }
        model.layers.push_back(std::move(layer));
        ++index;
    }
    try {
        model.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("model: ") + e.what());
    }
    return model;
}

LayeredModel load_model(const std::string& path) {
    return parse_model(read_file(path));
}

std::string model_to_json(const LayeredModel& model) {
    json doc;
    doc["t_in"] = model.cfg.t_in;
    doc["lambda"] = model.cfg.lambda;
    doc["epsilon"] = model.cfg.epsilon;
    doc["layers"] = json::array();
    for (const DenseLayer& layer : model.layers) {
        json jl;
        jl["weights"] = layer.weights;
        jl["bias"] = layer.biases;
        jl["activation"] =
            layer.activation == Activation::ReLU ? "relu" : "none";
        doc["layers"].push_back(std::move(jl));
    }
    return doc.dump(2);
}

void save_model(const LayeredModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open file for writing: " + path);
    }
    out << model_to_json(model) << "\n";
}

std::vector<std::vector<double>> parse_inputs(std::istream& in) {
    std::vector<std::vector<double>> vectors;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (char& c : line) {
            if (c == ',' || c == '\t') {
                c = ' ';
            }
        }
        std::istringstream row(line);
        std::vector<double> v;
        double value = 0.0;
        while (row >> value) {
            if (!(value >= 0.0 && value <= 1.0)) {
                throw ParseError("inputs: line " + std::to_string(lineno) +
                                 ": value " + format_double(value) +
                                 " outside [0,1]");
            }
            v.push_back(value);
        }
        if (!row.eof()) {
            throw ParseError("inputs: line " + std::to_string(lineno) +
                             ": malformed number");
        }
        if (!v.empty()) {
            vectors.push_back(std::move(v));
        }
    }
    return vectors;
}

std::vector<std::vector<double>> load_inputs(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    return parse_inputs(in);
}

std::vector<std::pair<double, double>> load_events(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::vector<std::pair<double, double>> events;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (char& c : line) {
            if (c == ',' || c == '\t') {
                c = ' ';
            }
        }
        std::istringstream row(line);
        double t = 0.0;
        double w = 0.0;
        if (!(row >> t)) {
            continue;  // blank line
        }
        if (!(row >> w)) {
            throw ParseError("events: line " + std::to_string(lineno) +
                             ": expected \"t_on weight\"");
        }
        events.emplace_back(t, w);
    }
    return events;
}

std::vector<std::size_t> parse_shape(const std::string& shape) {
    std::vector<std::size_t> dims;
    std::size_t pos = 0;
    while (pos <= shape.size()) {
        const std::size_t dash = shape.find('-', pos);
        const std::string part =
            shape.substr(pos, dash == std::string::npos ? dash : dash - pos);
        std::size_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size() ||
            value == 0) {
            throw ParseError("bad shape string: \"" + shape + "\"");
        }
        dims.push_back(value);
        if (dash == std::string::npos) {
            break;
        }
        pos = dash + 1;
    }
    if (dims.size() < 2) {
        throw ParseError("shape needs at least two dimensions: \"" + shape +
                         "\"");
    }
    return dims;
}

LayeredModel generate_model(const std::vector<std::size_t>& shape,
                            std::uint32_t seed, WeightMode mode,
                            const EncodingConfig& cfg) {
    if (shape.size() < 2) {
        throw ParseError("generate_model: shape needs at least two dimensions");
    }
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> analog(-1.0, 1.0);
    std::uniform_real_distribution<double> bias(-0.1, 0.1);
    std::bernoulli_distribution sign(0.5);

    LayeredModel model;
    model.cfg = cfg;
    for (std::size_t l = 0; l + 1 < shape.size(); ++l) {
        DenseLayer layer;
        layer.weights.assign(shape[l], std::vector<double>(shape[l + 1]));
        layer.biases.assign(shape[l + 1], 0.0);
        for (auto& row : layer.weights) {
            for (double& w : row) {
                w = mode == WeightMode::Binary ? (sign(rng) ? 1.0 : -1.0)
                                               : analog(rng);
            }
        }
        for (double& b : layer.biases) {
            b = bias(rng);
        }
        layer.activation =
            l + 2 < shape.size() ? Activation::ReLU : Activation::None;
        model.layers.push_back(std::move(layer));
    }
    return model;
}

void write_trace(std::ostream& out, const std::vector<TimingState>& states) {
    out << "layer_index,neuron_index,t_plus,t_minus,gain\n";
    for (std::size_t l = 0; l < states.size(); ++l) {
        const TimingState& s = states[l];
        for (std::size_t n = 0; n < s.pairs.size(); ++n) {
            out << l << ',' << n << ',' << format_double(s.pairs[n].t_plus)
                << ',' << format_double(s.pairs[n].t_minus) << ','
                << format_double(s.gains[n]) << "\n";
        }
    }
}

}  // namespace tact
