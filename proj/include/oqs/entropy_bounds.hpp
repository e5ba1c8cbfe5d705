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

// Entropy and entropy-production bounds for Lindblad dynamics.
//
// All logarithms are natural; entropies are in nats. Traces of products are
// evaluated in the eigenbasis of rho so that ln(rho) is never formed for
// eigenvalues at or below kEigFloor.

#include <optional>
#include <vector>

#include "oqs/lindblad_model.hpp"
#include "oqs/operators.hpp"

namespace oqs {

/// Eigenvalues at or below this are treated as exact zeros (0 ln 0 = 0).
inline constexpr double kEigFloor = 1e-14;

/// Weight a channel may move onto the null space of rho before the exact
/// entropy rate is reported as saturated.
inline constexpr double kNullLeakageTol = 1e-10;

struct BoundReport {
    double time = 0.0;
    double entropy = 0.0;
    /// +infinity when the exact rate diverges (see entropy_rate).
    double rate_exact = 0.0;
    double rate_lower_bound = 0.0;
    /// Absent when the model has no channel with non-zero norm.
    std::optional<double> threshold_general;
    /// Present iff every channel is Hermitian (and threshold_general is present).
    std::optional<double> threshold_variance;
    bool monotone_guaranteed = false;
    bool log_floor_hit = false;
};

struct SteadyBound {
    double beta = 0.0;
    /// max(0, s_star_raw).
    double s_star = 0.0;
    double s_star_raw = 0.0;
    std::vector<double> channel_betas;
    double norm_sums = 0.0;
};

struct EntropyRate {
    double value = 0.0;  // +infinity when saturated
    bool log_floor_hit = false;

    bool saturated() const;
};

struct VarianceStepAudit {
    double lhs = 0.0;  // Tr((rho^1/2 L rho^1/2)^2)
    double rhs = 0.0;  // Tr(L rho)^2
    bool holds = false;
};

/// S = -sum_j lambda_j ln lambda_j.
double von_neumann_entropy(const DensityMatrix& rho);

/// Exact dS/dt = sum_j [Tr(L_j^dag L_j rho ln rho) - Tr(L_j rho L_j^dag ln rho)].
///
/// The Hamiltonian drops out. If some channel pushes more than
/// kNullLeakageTol of weight onto the floor eigenspace P0 of rho, i.e.
/// Tr(P0 L rho L^dag P0) > kNullLeakageTol, the true rate is +infinity and
/// the result is saturated with log_floor_hit set.
EntropyRate entropy_rate(const LindbladModel& model, const DensityMatrix& rho);

/// entropy_rate(model, rho).value.
double entropy_rate_exact(const LindbladModel& model, const DensityMatrix& rho);

/// Tr(L^dag L rho) - Tr(L rho L^dag rho) for a single channel.
double channel_beta(const Matrix& channel, const DensityMatrix& rho);

/// sum_j [-||L_j||_F^2 S(rho) + beta_j(rho)]: a lower bound on the exact rate.
double rate_lower_bound(const LindbladModel& model, const DensityMatrix& rho);

/// sum_j beta_j(rho) / sum_j ||L_j||_F^2. While S(rho) is below this value the
/// entropy cannot decrease. For one channel the value lies in [0, 1].
/// Throws NoChannels or ZeroChannel.
double monotonicity_threshold(const LindbladModel& model, const DensityMatrix& rho);

/// Tr(L^2 rho) - Tr(L rho)^2 for Hermitian L; throws NotHermitian otherwise.
double variance(const Matrix& observable, const DensityMatrix& rho);

/// variance(L, rho) / ||L||_F^2. Throws NotHermitian or ZeroChannel.
double variance_threshold(const Matrix& observable, const DensityMatrix& rho);

/// Compares Tr(A^2) against Tr(A)^2 for A = rho^1/2 L rho^1/2. The inequality
/// is guaranteed only for A >= 0, so a Hermitian L with mixed-sign spectrum
/// can legitimately produce holds == false.
VarianceStepAudit audit_variance_step(const Matrix& observable, const DensityMatrix& rho);

/// The affine function x -> -sum ||L_j||_F^2 x + sum beta_j(rho). Its root is
/// monotonicity_threshold(model, rho). Throws NoChannels.
double rate_bound_at_entropy(double x, const LindbladModel& model, const DensityMatrix& rho);

/// beta and S* = sum beta_j / sum ||L_j||_F^2 evaluated at a steady state.
SteadyBound s_star(const LindbladModel& model, const DensityMatrix& rho_inf);

/// (d - 1) / d^2, the value of S* at the maximally mixed state. Throws
/// BadDimension for d < 2.
double s_star_maximally_mixed(int d);

/// Minimum eigenvalue of -ln(rho) - I + rho, with eigenvalues floored at
/// kEigFloor inside the logarithm. Non-negative for every density matrix.
double log_inequality_min_eig(const DensityMatrix& rho);

BoundReport bound_report(const LindbladModel& model, const DensityMatrix& rho, double time);

}  // namespace oqs
