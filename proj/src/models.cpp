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

#include "oqs/models.hpp"

#include <algorithm>
#include <cmath>

#include "oqs/errors.hpp"

namespace oqs {

namespace {

const ModelSpec& find_spec(std::string_view name) {
    const auto& specs = list_models();
    auto it = std::find_if(specs.begin(), specs.end(),
                           [&](const ModelSpec& s) { return s.name == name; });
    if (it == specs.end()) throw Error(ErrorKind::UnknownModel, std::string(name));
    return *it;
}

// Defaults overlaid with the caller's values; rejects unknown keys.
ModelParams resolve(const ModelSpec& spec, const ModelParams& given) {
    ModelParams out;
    for (const ParamSpec& p : spec.params) out[p.name] = p.default_value;
    for (const auto& [key, value] : given) {
        if (!out.contains(key)) {
            throw Error(ErrorKind::BadParams, spec.name + " has no parameter '" + key + "'");
        }
        if (!std::isfinite(value)) throw Error(ErrorKind::BadParams, key + " must be finite");
        out[key] = value;
    }
    return out;
}

double positive_rate(const ModelParams& p, const std::string& key) {
    const double value = p.at(key);
    if (!(value > 0.0)) throw Error(ErrorKind::BadParams, key + " must be > 0");
    return value;
}

Index dimension(const ModelParams& p) {
    const double value = p.at("d");
    if (value < 2.0 || value != std::floor(value) || value > 64.0) {
        throw Error(ErrorKind::BadParams, "d must be an integer in [2, 64]");
    }
    return static_cast<Index>(value);
}

}  // namespace

const std::vector<ModelSpec>& list_models() {
    static const std::vector<ModelSpec> specs = {
        {"dephasing",
         "H = 0, L = sqrt(gamma) sigma_z",
         {{"gamma", 1.0, "dephasing rate"}},
         false,
         "coherence decays as exp(-2 gamma t); every diagonal state is stationary"},
        {"amplitude_damping",
         "H = 0, L = sqrt(gamma) sigma_minus",
         {{"gamma", 1.0, "decay rate"}},
         false,
         "excited population decays as exp(-gamma t); steady state |g><g| with S* = 0"},
        {"depolarizing",
         "H = 0, L_j = sqrt(gamma) sigma_j for j = x, y, z",
         {{"gamma", 1.0, "rate per Pauli channel"}},
         true,
         "steady state I/2 with S* = 1/4 and S_inf = ln 2"},
        {"driven_qubit",
         "H = omega sigma_x, L = sqrt(gamma) sigma_minus",
         {{"omega", 1.0, "drive amplitude"}, {"gamma", 1.0, "decay rate"}},
         false,
         "unique full-rank steady state"},
        {"truncated_oscillator",
         "H = omega a^dag a, L = sqrt(gamma) a on d levels",
         {{"d", 4.0, "number of levels"},
          {"omega", 1.0, "level spacing"},
          {"gamma", 0.5, "decay rate"}},
         false,
         "relaxes to the ground state; exercises d >= 3"},
    };
    return specs;
}

Matrix lowering_operator(Index d) {
    if (d < 1) throw Error(ErrorKind::BadDimension, "lowering_operator needs d >= 1");
    Matrix a = zeros(d);
    for (Index k = 0; k + 1 < d; ++k) a(k + 1, k) = std::sqrt(static_cast<double>(d - 1 - k));
    return a;
}

LindbladModel get_model(std::string_view name, const ModelParams& params) {
    const ModelSpec& spec = find_spec(name);
    const ModelParams p = resolve(spec, params);
    const std::string label(name);

    if (name == "dephasing") {
        const double g = positive_rate(p, "gamma");
        return LindbladModel(zeros(2), {std::sqrt(g) * pauli::sigma_z()}, label);
    }
    if (name == "amplitude_damping") {
        const double g = positive_rate(p, "gamma");
        return LindbladModel(zeros(2), {std::sqrt(g) * pauli::sigma_minus()}, label);
    }
    if (name == "depolarizing") {
        const double s = std::sqrt(positive_rate(p, "gamma"));
        return LindbladModel(zeros(2),
                             {s * pauli::sigma_x(), s * pauli::sigma_y(), s * pauli::sigma_z()},
                             label);
    }
    if (name == "driven_qubit") {
        const double g = positive_rate(p, "gamma");
        return LindbladModel(p.at("omega") * pauli::sigma_x(),
                             {std::sqrt(g) * pauli::sigma_minus()}, label);
    }
    // truncated_oscillator
    const Index d = dimension(p);
    const double g = positive_rate(p, "gamma");
    const Matrix a = lowering_operator(d);
    const Matrix number = a.adjoint() * a;
    return LindbladModel(p.at("omega") * number, {std::sqrt(g) * a}, label);
}

DensityMatrix named_state(std::string_view name, Index d) {
    if (d < 1) throw Error(ErrorKind::BadDimension, "named_state needs d >= 1");
    if (name == "maximally_mixed") return DensityMatrix::maximally_mixed(d);
    if (name == "excited") return DensityMatrix::basis_state(d, 0);
    if (name == "ground") return DensityMatrix::basis_state(d, d - 1);
    if (name == "plus") return DensityMatrix::pure(Vector::Ones(d));
    throw Error(ErrorKind::ConfigInvalid, "unknown named state '" + std::string(name) + "'");
}

}  // namespace oqs
