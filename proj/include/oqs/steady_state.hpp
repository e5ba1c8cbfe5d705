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

// Steady states from the vectorized Lindblad generator.
//
// Vectorization is column-stacking: vec(X) stacks the columns of X, so
// vec(A X B) = (B^T (x) A) vec(X). This matches Eigen's column-major storage.

#include <cstddef>
#include <cstdint>

#include "oqs/dynamics.hpp"
#include "oqs/entropy_bounds.hpp"
#include "oqs/lindblad_model.hpp"

namespace oqs {

/// d^2 x d^2 matrix of the generator acting on column-stacked operators.
struct Superoperator {
    Index dim = 0;  // d, the Hilbert-space dimension
    Matrix matrix;  // d^2 x d^2

    Matrix apply(const Matrix& rho) const;
};

Vector vec(const Matrix& x);
Matrix unvec(const Vector& v, Index d);

/// -i(I (x) H - H^T (x) I) + sum_j [conj(L_j) (x) L_j - (I (x) L_j^dag L_j + (L_j^dag L_j)^T (x) I) / 2].
Superoperator build_superoperator(const LindbladModel& model);

/// Largest ||S vec(rho) - vec(liouvillian_rhs(model, rho))||_F over `samples`
/// Ginibre states drawn from consecutive seeds.
double superoperator_self_check(const LindbladModel& model, const Superoperator& generator,
                                int samples = 10, std::uint64_t seed = 1);

/// Eigenvalues of the generator (real parts <= 0 for a valid Lindblad model).
Vector superoperator_spectrum(const Superoperator& generator);

struct SteadyStateSolution {
    DensityMatrix state;
    double residual = 0.0;      // ||generator(rho_inf)||_F
    std::size_t null_dimension = 1;
};

/// Null space of the generator by singular-value thresholding: singular
/// values <= tol * sigma_max count as zero. A unique null vector is
/// reshaped, normalized to unit trace, Hermitized and validated, and its
/// residual must not exceed 10 tol max(1, sigma_max).
///
/// Throws DegenerateSteadyState (carrying the null dimension) when the
/// null space is more than one-dimensional, NoSteadyState when it is empty
/// and NotDensity when the extracted operator is not a state.
SteadyStateSolution solve_steady_state(const LindbladModel& model, double tol = 1e-10);

DensityMatrix steady_state(const LindbladModel& model, double tol = 1e-10);

/// State reached after integrating to t_long (cfg.t_max is replaced).
DensityMatrix long_time_state(const LindbladModel& model, const DensityMatrix& rho0, double t_long,
                              IntegratorConfig cfg);

/// S(rho(t_long)).
double long_time_entropy(const LindbladModel& model, const DensityMatrix& rho0, double t_long,
                         const IntegratorConfig& cfg);

}  // namespace oqs
