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

#include "oqs/lindblad_model.hpp"

#include <algorithm>

#include "oqs/errors.hpp"

namespace oqs {

LindbladModel::LindbladModel(Matrix hamiltonian, std::vector<Matrix> channels, std::string label)
    : hamiltonian_(std::move(hamiltonian)), channels_(std::move(channels)), label_(std::move(label)) {
    require_square(hamiltonian_, "hamiltonian");
    if (!is_hermitian(hamiltonian_, 1e-10)) {
        throw Error(ErrorKind::NotHermitian, "hamiltonian is not Hermitian");
    }
    for (const Matrix& l : channels_) require_same_dim(hamiltonian_, l, "channel");
}

LindbladModel LindbladModel::trivial(Index d) { return LindbladModel(zeros(d), {}, "trivial"); }

double LindbladModel::total_channel_norm_sq() const {
    double total = 0.0;
    for (const Matrix& l : channels_) total += frobenius_norm_sq(l);
    return total;
}

bool LindbladModel::all_channels_hermitian() const {
    return std::all_of(channels_.begin(), channels_.end(),
                       [](const Matrix& l) { return is_hermitian(l); });
}

}  // namespace oqs
