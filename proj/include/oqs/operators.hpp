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

// Dense complex operator algebra shared by every other module.
//
// Operators are plain Eigen::MatrixXcd values. DensityMatrix is the one
// strong type: it can only be obtained through validation, and it carries
// its own spectral decomposition so entropy and bound evaluations do not
// diagonalize the same state twice.

#include <complex>
#include <cmath>
#include <cstdint>
#include <utility>

#include <Eigen/Dense>

namespace oqs {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

Matrix identity(Index d);
Matrix zeros(Index d);

/// Conjugate transpose. Involutive bit-for-bit.
Matrix adjoint(const Matrix& a);

/// Tr(A^dagger A), the sum of squared entry moduli.
///
/// Note the squared norm is what enters every entropy bound; it is the
/// quantity written ||L||_F^2 in the bound formulas.
double frobenius_norm_sq(const Matrix& a);

/// ||A - A^dagger||_F.
double hermiticity_defect(const Matrix& a);

/// True when ||A - A^dagger||_F <= rel_tol * max(1, ||A||_F).
bool is_hermitian(const Matrix& a, double rel_tol = 1e-8);

/// Throws DimMismatch unless `a` is a non-empty square matrix.
void require_square(const Matrix& a, const char* what);

/// Throws DimMismatch unless both operands are d x d for the same d.
void require_same_dim(const Matrix& a, const Matrix& b, const char* what);

/// Kronecker product, (A (x) B)_{(i,k),(j,l)} = A_ij B_kl.
Matrix kron(const Matrix& a, const Matrix& b);

namespace pauli {
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();
/// |g><e| in the (e, g) basis order: maps index 0 to index 1.
Matrix sigma_minus();
Matrix sigma_plus();
}  // namespace pauli

struct SpectralDecomposition {
    RealVector eigenvalues;  // descending
    Matrix eigenvectors;     // columns, unitary

    Index dim() const { return eigenvalues.size(); }
    Matrix reconstruct() const;

    /// V f(Lambda) V^dagger for a scalar function f applied eigenvalue-wise.
    template <class F>
    Matrix apply(F&& f) const {
        Vector mapped(dim());
        for (Index k = 0; k < dim(); ++k) mapped(k) = Complex(f(eigenvalues(k)), 0.0);
        return eigenvectors * mapped.asDiagonal() * eigenvectors.adjoint();
    }
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
///
/// Throws NotHermitian if ||A - A^dagger||_F > 1e-8 max(1, ||A||_F) and
/// EigFailure if the solver does not converge. For degenerate eigenvalues
/// the eigenvector basis inside each eigenspace is unspecified.
SpectralDecomposition hermitian_eig(const Matrix& a);

struct DensityTolerances {
    double hermiticity = 1e-10;
    double positivity = 1e-10;
    double trace = 1e-10;
};

class DensityMatrix {
public:
    /// Checks rho = rho^dagger, rho >= 0 and Tr rho = 1 at the given
    /// tolerances; throws NotDensity (or DimMismatch for non-square input).
    static DensityMatrix validate(Matrix op, const DensityTolerances& tol = {});

    static DensityMatrix maximally_mixed(Index d);
    /// |psi><psi| / <psi|psi>.
    static DensityMatrix pure(const Vector& psi);
    /// |k><k| for basis index k.
    static DensityMatrix basis_state(Index d, Index k);

    const Matrix& matrix() const noexcept { return op_; }
    Index dim() const noexcept { return op_.rows(); }
    const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }

    double min_eigenvalue() const { return spectrum_.eigenvalues(dim() - 1); }
    double trace_error() const { return std::abs(op_.trace() - Complex(1.0, 0.0)); }
    double purity() const { return (op_ * op_).trace().real(); }

private:
    DensityMatrix(Matrix op, SpectralDecomposition spectrum)
        : op_(std::move(op)), spectrum_(std::move(spectrum)) {}

    Matrix op_;
    SpectralDecomposition spectrum_;
};

/// Tr(A rho).
Complex expectation(const Matrix& a, const DensityMatrix& rho);

// Random ensembles. Every sampler is a pure function of (d, seed): a fresh
// std::mt19937_64 is seeded with `seed`, uniforms are the top 53 bits of
// each draw scaled to [0, 1), and normals come from the Box-Muller cosine
// branch. Matrix entries are filled row-major, real part first, each a
// standard complex normal (re, im ~ N(0, 1/2)).

/// d x d matrix of i.i.d. standard complex normal entries.
Matrix ginibre_matrix(Index d, std::uint64_t seed);

/// G G^dagger / Tr(G G^dagger) with G = ginibre_matrix(d, seed).
DensityMatrix ginibre_state(Index d, std::uint64_t seed);

/// (G + G^dagger) / 2 with G = ginibre_matrix(d, seed).
Matrix gue_hermitian(Index d, std::uint64_t seed);

/// Haar-distributed unitary: QR of a Ginibre matrix with R's diagonal
/// phases absorbed into Q.
Matrix haar_unitary(Index d, std::uint64_t seed);

}  // namespace oqs
