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

#include <string>
#include <vector>

#include "oqs/operators.hpp"

namespace oqs {

/// A Hamiltonian H and an ordered list of decoherence channels L_j acting on
/// a d-dimensional Hilbert space. Rates live inside the channels (sqrt(gamma) L).
class LindbladModel {
public:
    /// Throws DimMismatch if any operator is not d x d, NotHermitian if
    /// ||H - H^dagger||_F > 1e-10 max(1, ||H||_F).
    LindbladModel(Matrix hamiltonian, std::vector<Matrix> channels, std::string label = {});

    /// H = 0, no channels.
    static LindbladModel trivial(Index d);

    Index dim() const noexcept { return hamiltonian_.rows(); }
    const Matrix& hamiltonian() const noexcept { return hamiltonian_; }
    const std::vector<Matrix>& channels() const noexcept { return channels_; }
    const std::string& label() const noexcept { return label_; }

    /// Sum over channels of ||L_j||_F^2.
    double total_channel_norm_sq() const;
    bool all_channels_hermitian() const;

private:
    Matrix hamiltonian_;
    std::vector<Matrix> channels_;
    std::string label_;
};

}  // namespace oqs
