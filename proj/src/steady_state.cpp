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

#include "oqs/steady_state.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "oqs/errors.hpp"

namespace oqs {

Matrix Superoperator::apply(const Matrix& rho) const {
    require_square(rho, "superoperator argument");
    if (rho.rows() != dim) throw Error(ErrorKind::DimMismatch, "superoperator argument dimension");
    return unvec(matrix * vec(rho), dim);
}

Vector vec(const Matrix& x) { return Eigen::Map<const Vector>(x.data(), x.size()); }

Matrix unvec(const Vector& v, Index d) {
    if (v.size() != d * d) throw Error(ErrorKind::DimMismatch, "unvec: length is not d^2");
    return Eigen::Map<const Matrix>(v.data(), d, d);
}

Superoperator build_superoperator(const LindbladModel& model) {
    const Index d = model.dim();
    const Matrix eye = identity(d);
    const Matrix& h = model.hamiltonian();

    Superoperator s;
    s.dim = d;
    s.matrix = Complex(0.0, -1.0) * (kron(eye, h) - kron(h.transpose(), eye));
    for (const Matrix& l : model.channels()) {
        const Matrix decay = l.adjoint() * l;
        s.matrix += kron(l.conjugate(), l);
        s.matrix -= 0.5 * (kron(eye, decay) + kron(decay.transpose(), eye));
    }
    return s;
}

double superoperator_self_check(const LindbladModel& model, const Superoperator& generator,
                                int samples, std::uint64_t seed) {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const DensityMatrix rho = ginibre_state(model.dim(), seed + static_cast<std::uint64_t>(k));
        const double residual = (generator.apply(rho.matrix()) - liouvillian_rhs(model, rho)).norm();
        worst = std::max(worst, residual);
    }
    return worst;
}

Vector superoperator_spectrum(const Superoperator& generator) {
    Eigen::ComplexEigenSolver<Matrix> solver(generator.matrix, false);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::EigFailure, "generator eigensolver did not converge");
    }
    return solver.eigenvalues();
}

SteadyStateSolution solve_steady_state(const LindbladModel& model, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorKind::ConfigInvalid, "steady-state tol must be positive");
    const Index d = model.dim();
    const Superoperator generator = build_superoperator(model);

    Eigen::BDCSVD<Matrix> svd(generator.matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) throw Error(ErrorKind::EigFailure, "SVD did not converge");
    const RealVector& sigma = svd.singularValues();  // descending
    const double sigma_max = sigma(0);
    std::size_t null_dim = 0;
    for (Index k = 0; k < sigma.size(); ++k) {
        if (sigma(k) <= tol * sigma_max) ++null_dim;
    }
    if (null_dim == 0) {
        throw Error(ErrorKind::NoSteadyState,
                    "no singular value below tol * sigma_max; smallest is " +
                        std::to_string(sigma(sigma.size() - 1)));
    }
    if (null_dim > 1) {
        throw DegenerateSteadyState(null_dim, "null space of the generator has dimension " +
                                                  std::to_string(null_dim));
    }

    Matrix rho = unvec(svd.matrixV().col(sigma.size() - 1), d);
    const Complex trace = rho.trace();
    if (std::abs(trace) < 1e-12) {
        throw Error(ErrorKind::NotDensity, "null vector is traceless");
    }
    rho /= trace;
    rho = 0.5 * (rho + rho.adjoint());
    rho /= rho.trace().real();

    SteadyStateSolution out{DensityMatrix::validate(std::move(rho)), 0.0, 1};
    out.residual = generator.apply(out.state.matrix()).norm();
    if (out.residual > 10.0 * tol * std::max(1.0, sigma_max)) {
        throw Error(ErrorKind::NotDensity,
                    "steady-state residual " + std::to_string(out.residual) + " exceeds 10 tol");
    }
    return out;
}

DensityMatrix steady_state(const LindbladModel& model, double tol) {
    return solve_steady_state(model, tol).state;
}

DensityMatrix long_time_state(const LindbladModel& model, const DensityMatrix& rho0, double t_long,
                              IntegratorConfig cfg) {
    cfg.t_max = t_long;
    cfg.record_stride = std::numeric_limits<int>::max();
    return propagate(model, rho0, cfg).final_state();
}

double long_time_entropy(const LindbladModel& model, const DensityMatrix& rho0, double t_long,
                         const IntegratorConfig& cfg) {
    return von_neumann_entropy(long_time_state(model, rho0, t_long, cfg));
}

}  // namespace oqs
