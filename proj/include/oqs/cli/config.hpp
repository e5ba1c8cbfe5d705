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

#pragma once

// JSON run configuration and text serialization shared by the subcommands.
//
// A run config looks like
//
//   {
//     "model": {"preset": "driven_qubit", "params": {"omega": 1.0, "gamma": 0.5}},
//     "initial_state": "excited",
//     "integrator": {"dt": 1e-3, "t_max": 5.0, "record_stride": 10},
//     "steady": {"tol": 1e-10},
//     "bounds": {"variance": true},
//     "outputs": {"path": "run.csv"}
//   }
//
// An inline model replaces "preset" with explicit matrices:
//
//   "model": {"dim": 2, "label": "custom",
//             "hamiltonian": [[[0,0],[1,0]], [[1,0],[0,0]]],
//             "channels": [ [[[0,0],[0,0]], [[1,0],[0,0]]] ]}
//
// Complex entries are [re, im] pairs (a bare number is read as a real entry);
// matrices are row-major nested arrays. "initial_state" is either a named
// state (maximally_mixed, ground, excited, plus), {"ginibre_seed": n} or
// {"matrix": [...]}.

#include <optional>
#include <string>

#include "json.hpp"

#include "oqs/dynamics.hpp"
#include "oqs/lindblad_model.hpp"
#include "oqs/operators.hpp"

namespace oqs::cli {

struct RunConfig {
    LindbladModel model;
    std::optional<DensityMatrix> initial_state;
    IntegratorConfig integrator;
    double steady_tol = 1e-10;
    /// Integrate to this time instead of failing on a degenerate steady state.
    std::optional<double> steady_fallback_t_long;
    bool request_variance = false;
    std::optional<std::string> output_path;
};

/// Throws oqs::Error with kind ConfigInvalid (or the model catalog's
/// UnknownModel / BadParams) on malformed input.
RunConfig parse_run_config(const nlohmann::json& config);

nlohmann::json load_json_file(const std::string& path);

Matrix parse_matrix(const nlohmann::json& value, Index expected_dim);
nlohmann::json matrix_to_json(const Matrix& m);

/// 17 significant digits in scientific notation; "inf", "-inf" or "nan" for
/// non-finite values.
std::string format_double(double value);

}  // namespace oqs::cli
