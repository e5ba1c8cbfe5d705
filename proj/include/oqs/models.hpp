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

// Catalog of analytically tractable Lindblad models.
//
// Basis convention: index 0 is the most excited level. For a qubit the order
// is (|e>, |g>) and sigma_minus = |g><e| maps index 0 to index 1; the
// d-level oscillator continues the same ordering, so its lowering operator
// is sub-diagonal and the ground state is the last basis vector.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "oqs/lindblad_model.hpp"

namespace oqs {

struct ParamSpec {
    std::string name;
    double default_value = 0.0;
    std::string description;
};

struct ModelSpec {
    std::string name;
    std::string summary;
    std::vector<ParamSpec> params;
    bool multi_channel = false;
    std::string certifies;  // closed-form facts the preset is used to check
};

using ModelParams = std::map<std::string, double>;

/// Stable order: dephasing, amplitude_damping, depolarizing, driven_qubit,
/// truncated_oscillator.
const std::vector<ModelSpec>& list_models();

/// Throws UnknownModel for an unlisted name and BadParams for unknown keys,
/// non-positive rates or a non-integer dimension below 2.
LindbladModel get_model(std::string_view name, const ModelParams& params = {});

/// Lowering operator of a d-level ladder in the convention above:
/// entry (k + 1, k) = sqrt(d - 1 - k).
Matrix lowering_operator(Index d);

/// "maximally_mixed", "ground", "excited" or "plus" (uniform superposition).
/// Throws ConfigInvalid for other names.
DensityMatrix named_state(std::string_view name, Index d);

}  // namespace oqs
