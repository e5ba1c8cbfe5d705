// Copyright 2026 The oqs-entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oqs/cli/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "oqs/errors.hpp"
#include "oqs/models.hpp"

namespace oqs::cli {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::ConfigInvalid, what); }

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& item : obj.items()) {
        if (!allowed.contains(item.key())) invalid("unknown key '" + item.key() + "' in " + where);
    }
}

const json& require_object(const json& value, const std::string& where) {
    if (!value.is_object()) invalid(where + " must be an object");
    return value;
}

double number(const json& value, const std::string& where) {
    if (!value.is_number()) invalid(where + " must be a number");
    return value.get<double>();
}

bool boolean(const json& value, const std::string& where) {
    if (!value.is_boolean()) invalid(where + " must be true or false");
    return value.get<bool>();
}

long long integer(const json& value, const std::string& where) {
    if (value.is_number_integer()) return value.get<long long>();
    if (value.is_number_float()) {
        const double x = value.get<double>();
        if (x == std::floor(x) && std::abs(x) < 9e15) return static_cast<long long>(x);
    }
    invalid(where + " must be an integer");
}

Complex parse_entry(const json& value) {
    if (value.is_number()) return Complex(value.get<double>(), 0.0);
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        return Complex(value[0].get<double>(), value[1].get<double>());
    }
    invalid("matrix entries must be [re, im] pairs");
}

LindbladModel parse_model(const json& node) {
    require_object(node, "model");
    const bool preset = node.contains("preset");
    const bool inline_model = node.contains("dim") || node.contains("hamiltonian") || node.contains("channels");
    if (preset == inline_model) invalid("model needs exactly one of a preset name or an inline matrix spec");

    if (preset) {
        reject_unknown_keys(node, {"preset", "params"}, "model");
        if (!node["preset"].is_string()) invalid("model.preset must be a string");
        ModelParams params;
        if (node.contains("params")) {
            for (const auto& item : require_object(node["params"], "model.params").items()) {
                params[item.key()] = number(item.value(), "model.params." + item.key());
            }
        }
        return get_model(node["preset"].get<std::string>(), params);
    }

    reject_unknown_keys(node, {"dim", "hamiltonian", "channels", "label"}, "model");
    if (!node.contains("dim")) invalid("inline model needs 'dim'");
    const long long dim = integer(node["dim"], "model.dim");
    if (dim < 1 || dim > 64) invalid("model.dim must be in [1, 64]");
    const Index d = static_cast<Index>(dim);
    Matrix h = node.contains("hamiltonian") ? parse_matrix(node["hamiltonian"], d) : zeros(d);
    std::vector<Matrix> channels;
    if (node.contains("channels")) {
        if (!node["channels"].is_array()) invalid("model.channels must be an array of matrices");
        for (const json& c : node["channels"]) channels.push_back(parse_matrix(c, d));
    }
    std::string label = "inline";
    if (node.contains("label")) {
        if (!node["label"].is_string()) invalid("model.label must be a string");
        label = node["label"].get<std::string>();
    }
    if (!is_hermitian(h, 1e-10)) invalid("hamiltonian is not Hermitian");
    return LindbladModel(std::move(h), std::move(channels), std::move(label));
}

DensityMatrix parse_state(const json& node, Index d) {
    if (node.is_string()) return named_state(node.get<std::string>(), d);
    require_object(node, "initial_state");
    if (node.size() != 1) invalid("initial_state object needs exactly one of 'matrix' or 'ginibre_seed'");
    if (node.contains("matrix")) {
        try {
            return DensityMatrix::validate(parse_matrix(node["matrix"], d));
        } catch (const Error& e) {
            invalid(std::string("initial_state.matrix: ") + e.what());
        }
    }
    if (node.contains("ginibre_seed")) {
        const long long seed = integer(node["ginibre_seed"], "initial_state.ginibre_seed");
        if (seed < 0) invalid("initial_state.ginibre_seed must be non-negative");
        return ginibre_state(d, static_cast<std::uint64_t>(seed));
    }
    invalid("initial_state object needs 'matrix' or 'ginibre_seed'");
}

IntegratorConfig parse_integrator(const json& node) {
    require_object(node, "integrator");
    reject_unknown_keys(node,
                        {"dt", "t_max", "hermitize_each_step", "trace_renormalize_each_step",
                         "positivity_tol", "record_stride"},
                        "integrator");
    IntegratorConfig cfg;
    if (node.contains("dt")) cfg.dt = number(node["dt"], "integrator.dt");
    if (node.contains("t_max")) cfg.t_max = number(node["t_max"], "integrator.t_max");
    if (node.contains("hermitize_each_step"))
        cfg.hermitize_each_step = boolean(node["hermitize_each_step"], "integrator.hermitize_each_step");
    if (node.contains("trace_renormalize_each_step"))
        cfg.trace_renormalize_each_step =
            boolean(node["trace_renormalize_each_step"], "integrator.trace_renormalize_each_step");
    if (node.contains("positivity_tol"))
        cfg.positivity_tol = number(node["positivity_tol"], "integrator.positivity_tol");
    if (node.contains("record_stride")) {
        const long long stride = integer(node["record_stride"], "integrator.record_stride");
        if (stride < 1 || stride > 1'000'000'000) invalid("integrator.record_stride must be >= 1");
        cfg.record_stride = static_cast<int>(stride);
    }
    cfg.validate();
    return cfg;
}

}  // namespace

Matrix parse_matrix(const json& value, Index expected_dim) {
    if (!value.is_array() || static_cast<Index>(value.size()) != expected_dim) {
        invalid("matrix must have " + std::to_string(expected_dim) + " rows");
    }
    Matrix m(expected_dim, expected_dim);
    for (Index i = 0; i < expected_dim; ++i) {
        const json& row = value[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != expected_dim) {
            invalid("matrix row " + std::to_string(i) + " must have " + std::to_string(expected_dim) + " entries");
        }
        for (Index j = 0; j < expected_dim; ++j) m(i, j) = parse_entry(row[static_cast<std::size_t>(j)]);
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", value);
    return buf;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) invalid("cannot open config '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        invalid("cannot parse '" + path + "': " + e.what());
    }
}

RunConfig parse_run_config(const json& config) {
    require_object(config, "config");
    reject_unknown_keys(config, {"model", "initial_state", "integrator", "steady", "bounds", "outputs"},
                        "config");
    if (!config.contains("model")) invalid("config needs a 'model'");

    RunConfig run{parse_model(config["model"]), std::nullopt, {}, 1e-10, std::nullopt, false, std::nullopt};
    if (config.contains("initial_state")) run.initial_state = parse_state(config["initial_state"], run.model.dim());
    if (config.contains("integrator")) run.integrator = parse_integrator(config["integrator"]);

    if (config.contains("steady")) {
        const json& s = require_object(config["steady"], "steady");
        reject_unknown_keys(s, {"tol", "fallback_t_long"}, "steady");
        if (s.contains("tol")) run.steady_tol = number(s["tol"], "steady.tol");
        if (!(run.steady_tol > 0.0)) invalid("steady.tol must be positive");
        if (s.contains("fallback_t_long")) {
            const double t_long = number(s["fallback_t_long"], "steady.fallback_t_long");
            if (!(t_long > run.integrator.dt)) invalid("steady.fallback_t_long must exceed integrator.dt");
            run.steady_fallback_t_long = t_long;
        }
    }
    if (config.contains("bounds")) {
        const json& b = require_object(config["bounds"], "bounds");
        reject_unknown_keys(b, {"variance"}, "bounds");
        if (b.contains("variance")) run.request_variance = boolean(b["variance"], "bounds.variance");
    }
    if (config.contains("outputs")) {
        const json& o = require_object(config["outputs"], "outputs");
        reject_unknown_keys(o, {"path"}, "outputs");
        if (o.contains("path")) {
            if (!o["path"].is_string()) invalid("outputs.path must be a string");
            run.output_path = o["path"].get<std::string>();
        }
    }
    return run;
}

}  // namespace oqs::cli
