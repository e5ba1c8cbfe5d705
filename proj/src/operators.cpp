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

#include "oqs/operators.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <string>

#include "oqs/errors.hpp"

namespace oqs {

namespace {

class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double standard_normal() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

std::string dims(const Matrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

Matrix identity(Index d) { return Matrix::Identity(d, d); }

Matrix zeros(Index d) { return Matrix::Zero(d, d); }

Matrix adjoint(const Matrix& a) { return a.adjoint(); }

double frobenius_norm_sq(const Matrix& a) { return a.squaredNorm(); }

double hermiticity_defect(const Matrix& a) { return (a - a.adjoint()).norm(); }

bool is_hermitian(const Matrix& a, double rel_tol) {
    if (a.rows() != a.cols()) return false;
    return hermiticity_defect(a) <= rel_tol * std::max(1.0, a.norm());
}

void require_square(const Matrix& a, const char* what) {
    if (a.rows() < 1 || a.rows() != a.cols()) {
        throw Error(ErrorKind::DimMismatch, std::string(what) + " must be square, got " + dims(a));
    }
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
    require_square(a, what);
    require_square(b, what);
    if (a.rows() != b.rows()) {
        throw Error(ErrorKind::DimMismatch,
                    std::string(what) + ": " + dims(a) + " vs " + dims(b));
    }
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

namespace pauli {

Matrix sigma_x() {
    Matrix m = zeros(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

Matrix sigma_y() {
    Matrix m = zeros(2);
    m(0, 1) = Complex(0.0, -1.0);
    m(1, 0) = Complex(0.0, 1.0);
    return m;
}

Matrix sigma_z() {
    Matrix m = zeros(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

Matrix sigma_minus() {
    Matrix m = zeros(2);
    m(1, 0) = 1.0;
    return m;
}

Matrix sigma_plus() { return sigma_minus().adjoint(); }

}  // namespace pauli

Matrix SpectralDecomposition::reconstruct() const {
    return apply([](double x) { return x; });
}

SpectralDecomposition hermitian_eig(const Matrix& a) {
    require_square(a, "hermitian_eig");
    const double scale = std::max(1.0, a.norm());
    const double defect = hermiticity_defect(a);
    if (defect > 1e-8 * scale) {
        throw Error(ErrorKind::NotHermitian,
                    "||A - A^dagger||_F = " + std::to_string(defect));
    }
    const Matrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::EigFailure, "self-adjoint eigensolver did not converge");
    }
    // Eigen returns ascending order.
    SpectralDecomposition out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

DensityMatrix DensityMatrix::validate(Matrix op, const DensityTolerances& tol) {
    require_square(op, "density matrix");
    const double defect = hermiticity_defect(op);
    if (defect > tol.hermiticity) {
        throw Error(ErrorKind::NotDensity, "not Hermitian: ||rho - rho^dagger||_F = " +
                                               std::to_string(defect));
    }
    const double trace_err = std::abs(op.trace() - Complex(1.0, 0.0));
    if (trace_err > tol.trace) {
        throw Error(ErrorKind::NotDensity, "trace differs from 1 by " + std::to_string(trace_err));
    }
    SpectralDecomposition spectrum = hermitian_eig(op);
    const double min_eig = spectrum.eigenvalues(spectrum.dim() - 1);
    if (min_eig < -tol.positivity) {
        throw Error(ErrorKind::NotDensity, "negative eigenvalue " + std::to_string(min_eig));
    }
    return DensityMatrix(std::move(op), std::move(spectrum));
}

DensityMatrix DensityMatrix::maximally_mixed(Index d) {
    if (d < 1) throw Error(ErrorKind::BadDimension, "dimension must be >= 1");
    return validate(identity(d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
    const double norm_sq = psi.squaredNorm();
    if (psi.size() < 1 || norm_sq == 0.0) {
        throw Error(ErrorKind::NotDensity, "pure state needs a non-zero vector");
    }
    return validate(psi * psi.adjoint() / norm_sq);
}

DensityMatrix DensityMatrix::basis_state(Index d, Index k) {
    if (d < 1 || k < 0 || k >= d) {
        throw Error(ErrorKind::BadDimension, "basis index out of range");
    }
    Vector psi = Vector::Zero(d);
    psi(k) = 1.0;
    return pure(psi);
}

Complex expectation(const Matrix& a, const DensityMatrix& rho) {
    require_same_dim(a, rho.matrix(), "expectation");
    return (a * rho.matrix()).trace();
}

Matrix ginibre_matrix(Index d, std::uint64_t seed) {
    if (d < 1) throw Error(ErrorKind::BadDimension, "dimension must be >= 1");
    NormalStream rng(seed);
    const double scale = std::sqrt(0.5);
    Matrix g(d, d);
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            const double re = rng.standard_normal();
            const double im = rng.standard_normal();
            g(i, j) = Complex(scale * re, scale * im);
        }
    }
    return g;
}

DensityMatrix ginibre_state(Index d, std::uint64_t seed) {
    const Matrix g = ginibre_matrix(d, seed);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    // G G^dagger is Hermitian only up to rounding in the off-diagonal sums.
    rho = 0.5 * (rho + rho.adjoint());
    return DensityMatrix::validate(std::move(rho));
}

Matrix gue_hermitian(Index d, std::uint64_t seed) {
    const Matrix g = ginibre_matrix(d, seed);
    return 0.5 * (g + g.adjoint());
}

Matrix haar_unitary(Index d, std::uint64_t seed) {
    const Matrix g = ginibre_matrix(d, seed);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index k = 0; k < d; ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) q.col(k) *= r(k, k) / mag;
    }
    return q;
}

}  // namespace oqs
