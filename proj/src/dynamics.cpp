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

#include "oqs/dynamics.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "oqs/errors.hpp"

namespace oqs {

namespace {

const Complex kMinusI(0.0, -1.0);

Matrix rk4_step(const LindbladModel& model, const Matrix& rho, double h) {
    const Matrix k1 = liouvillian_rhs(model, rho);
    const Matrix k2 = liouvillian_rhs(model, rho + (0.5 * h) * k1);
    const Matrix k3 = liouvillian_rhs(model, rho + (0.5 * h) * k2);
    const Matrix k4 = liouvillian_rhs(model, rho + h * k3);
    return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

long long step_count(const IntegratorConfig& cfg) {
    return static_cast<long long>(std::ceil(cfg.t_max / cfg.dt - 1e-9));
}

DensityMatrix checked_state(Matrix rho, double time, const IntegratorConfig& cfg) {
    // Positivity is checked separately below so that it maps onto PositivityLost.
    DensityTolerances tol;
    tol.hermiticity = 1e-9;
    tol.trace = 1e-9;
    tol.positivity = std::numeric_limits<double>::infinity();
    DensityMatrix state = DensityMatrix::validate(std::move(rho), tol);
    const double min_eig = state.min_eigenvalue();
    if (min_eig < -cfg.positivity_tol) {
        std::ostringstream msg;
        msg << "min eigenvalue " << min_eig << " at t = " << time
            << " is below -positivity_tol; try a smaller dt";
        throw PositivityLost(time, min_eig, msg.str());
    }
    return state;
}

Matrix final_matrix(const LindbladModel& model, const DensityMatrix& rho0, IntegratorConfig cfg) {
    cfg.record_stride = std::numeric_limits<int>::max();
    return propagate(model, rho0, cfg).final_state().matrix();
}

}  // namespace

Matrix dissipator(const Matrix& channel, const Matrix& rho) {
    require_same_dim(channel, rho, "dissipator");
    const Matrix l_dag = channel.adjoint();
    const Matrix decay = l_dag * channel;
    return channel * rho * l_dag - 0.5 * (decay * rho + rho * decay);
}

Matrix dissipator(const Matrix& channel, const DensityMatrix& rho) {
    return dissipator(channel, rho.matrix());
}

Matrix liouvillian_rhs(const LindbladModel& model, const Matrix& rho) {
    require_same_dim(model.hamiltonian(), rho, "liouvillian_rhs");
    const Matrix& h = model.hamiltonian();
    Matrix out = kMinusI * (h * rho - rho * h);
    for (const Matrix& l : model.channels()) out += dissipator(l, rho);
    return out;
}

Matrix liouvillian_rhs(const LindbladModel& model, const DensityMatrix& rho) {
    return liouvillian_rhs(model, rho.matrix());
}

void IntegratorConfig::validate() const {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::ConfigInvalid, what); };
    if (!(dt > 0.0) || !std::isfinite(dt)) fail("dt must be positive");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) fail("t_max must be positive");
    if (!(dt < t_max)) fail("dt must be smaller than t_max");
    if (record_stride < 1) fail("record_stride must be >= 1");
    if (!(positivity_tol >= 0.0)) fail("positivity_tol must be non-negative");
}

TrajectoryRecord propagate(const LindbladModel& model, const DensityMatrix& rho0,
                           const IntegratorConfig& cfg) {
    cfg.validate();
    if (model.dim() != rho0.dim()) {
        throw Error(ErrorKind::DimMismatch, "initial state and model dimensions differ");
    }
    const long long steps = step_count(cfg);

    TrajectoryRecord record;
    auto push = [&](DensityMatrix state, double t) {
        record.reports.push_back(bound_report(model, state, t));
        record.times.push_back(t);
        record.states.push_back(std::move(state));
    };
    push(rho0, 0.0);

    Matrix rho = rho0.matrix();
    for (long long n = 1; n <= steps; ++n) {
        const double t_prev = static_cast<double>(n - 1) * cfg.dt;
        const double t = n == steps ? cfg.t_max : static_cast<double>(n) * cfg.dt;
        rho = rk4_step(model, rho, t - t_prev);
        if (cfg.hermitize_each_step) rho = 0.5 * (rho + rho.adjoint());
        if (cfg.trace_renormalize_each_step) rho /= rho.trace();
        if (n % cfg.record_stride == 0 || n == steps) push(checked_state(rho, t, cfg), t);
    }
    return record;
}

std::optional<double> convergence_order_check(const LindbladModel& model,
                                              const DensityMatrix& rho0,
                                              const IntegratorConfig& cfg) {
    IntegratorConfig half = cfg;
    half.dt = cfg.dt / 2.0;
    IntegratorConfig quarter = cfg;
    quarter.dt = cfg.dt / 4.0;

    const Matrix coarse = final_matrix(model, rho0, cfg);
    const Matrix mid = final_matrix(model, rho0, half);
    const Matrix fine = final_matrix(model, rho0, quarter);

    const double coarse_err = (coarse - fine).norm();
    const double mid_err = (mid - fine).norm();
    // Anything within a few hundred ulps of the state is rounding, not truncation.
    const double noise = 1e-13 * std::max(1.0, fine.norm());
    if (mid_err <= noise || coarse_err <= noise) return std::nullopt;
    const double ratio = coarse_err / mid_err;
    if (!(ratio > 1.0)) return std::nullopt;
    return std::log2(ratio - 1.0);
}

}  // namespace oqs
