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

#include <optional>
#include <vector>

#include "oqs/entropy_bounds.hpp"
#include "oqs/lindblad_model.hpp"
#include "oqs/operators.hpp"

namespace oqs {

/// L rho L^dag - (L^dag L rho + rho L^dag L) / 2.
Matrix dissipator(const Matrix& channel, const Matrix& rho);
Matrix dissipator(const Matrix& channel, const DensityMatrix& rho);

/// -i[H, rho] + sum_j D[L_j] rho. Accepts any d x d operator so the
/// integrator can evaluate intermediate stages that are not states.
Matrix liouvillian_rhs(const LindbladModel& model, const Matrix& rho);
Matrix liouvillian_rhs(const LindbladModel& model, const DensityMatrix& rho);

struct IntegratorConfig {
    double dt = 1e-3;
    double t_max = 1.0;
    bool hermitize_each_step = true;
    bool trace_renormalize_each_step = false;
    /// Recorded states may dip to -positivity_tol before PositivityLost.
    double positivity_tol = 1e-8;
    /// Record every record_stride-th step; the final step is always recorded.
    int record_stride = 1;

    /// Throws ConfigInvalid.
    void validate() const;
};

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    std::vector<BoundReport> reports;

    std::size_t size() const { return times.size(); }
    const DensityMatrix& final_state() const { return states.back(); }
};

/// Fixed-step classical RK4 integration of the master equation from t = 0 to
/// cfg.t_max. The number of steps is ceil(t_max / dt); the last step is
/// shortened to land exactly on t_max. Every recorded state is checked for
/// positivity at cfg.positivity_tol (PositivityLost carries the time) and for
/// |Tr rho - 1| <= 1e-9 (NotDensity).
TrajectoryRecord propagate(const LindbladModel& model, const DensityMatrix& rho0,
                           const IntegratorConfig& cfg);

/// Global convergence order of the integrator, estimated from final states at
/// steps dt, dt/2 and dt/4:  p = log2(|y_dt - y_dt/4| / |y_dt/2 - y_dt/4| - 1).
/// Returns nullopt when the differences are at rounding level (for example
/// a zero generator, which every step size integrates exactly).
std::optional<double> convergence_order_check(const LindbladModel& model,
                                              const DensityMatrix& rho0,
                                              const IntegratorConfig& cfg);

}  // namespace oqs
