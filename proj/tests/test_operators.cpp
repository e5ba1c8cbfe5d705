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

#include <cmath>

#include "doctest.h"
#include "oqs/errors.hpp"
#include "oqs/operators.hpp"
#include "test_util.hpp"

using namespace oqs;
using namespace oqs::testing;

TEST_SUITE("operators") {

TEST_CASE("adjoint") {
    CHECK(adjoint(identity(2)) == identity(2));
    CHECK(adjoint(pauli::sigma_minus()) == pauli::sigma_plus());

    const Matrix a = ginibre_matrix(3, 7);
    const Matrix a_dag = adjoint(a);
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) CHECK(a_dag(i, j) == std::conj(a(j, i)));
    CHECK(adjoint(a_dag) == a);
}

TEST_CASE("frobenius_norm_sq") {
    CHECK(frobenius_norm_sq(identity(2)) == 2.0);
    CHECK(frobenius_norm_sq(pauli::sigma_z()) == 2.0);
    Matrix a = zeros(2);
    a(0, 1) = Complex(0.0, 2.0);
    CHECK(frobenius_norm_sq(a) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(frobenius_norm_sq(zeros(3)) == 0.0);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Matrix g = ginibre_matrix(4, seed);
        const double n = frobenius_norm_sq(g);
        CHECK(std::abs(n - frobenius_norm_sq(adjoint(g))) <= 1e-12 * n);
        CHECK(n == doctest::Approx(brute_trace(brute_mul(brute_adjoint(g), g)).real()).epsilon(1e-12));
    }
}

TEST_CASE("hermitian_eig basic spectra") {
    const SpectralDecomposition diag_sp = hermitian_eig(diag({0.25, 0.75}));
    CHECK(diag_sp.eigenvalues(0) == doctest::Approx(0.75));
    CHECK(diag_sp.eigenvalues(1) == doctest::Approx(0.25));
    // Eigenvectors of a diagonal matrix are basis vectors up to phase.
    CHECK(std::abs(diag_sp.eigenvectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(diag_sp.eigenvectors(0, 1)) == doctest::Approx(1.0));

    // Roots of lambda^2 - 1.
    const SpectralDecomposition sx = hermitian_eig(pauli::sigma_x());
    CHECK(sx.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(sx.eigenvalues(1) == doctest::Approx(-1.0));
}

TEST_CASE("hermitian_eig invariants on random Hermitian input") {
    for (Index d = 1; d <= 6; ++d) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Matrix a = gue_hermitian(d, seed);
            const SpectralDecomposition sp = hermitian_eig(a);
            const double scale = std::max(1.0, a.norm());
            CHECK((a - sp.reconstruct()).norm() <= 1e-10 * scale);
            CHECK((sp.eigenvectors.adjoint() * sp.eigenvectors - identity(d)).norm() <= 1e-10);
            for (Index k = 1; k < d; ++k) CHECK(sp.eigenvalues(k - 1) >= sp.eigenvalues(k));
            CHECK(std::abs(a.trace().real() - sp.eigenvalues.sum()) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    CHECK_THROWS_AS(hermitian_eig(pauli::sigma_minus()), Error);
    try {
        hermitian_eig(pauli::sigma_minus());
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotHermitian);
    }
    CHECK_THROWS_AS(hermitian_eig(Matrix::Zero(2, 3)), Error);
}

TEST_CASE("expectation") {
    const DensityMatrix rho = ginibre_state(3, 11);
    CHECK(std::abs(expectation(identity(3), rho) - Complex(1.0, 0.0)) <= 1e-12);
    CHECK(expectation(pauli::sigma_z(), DensityMatrix::basis_state(2, 0)).real() == doctest::Approx(1.0));
    const Complex plus_x = expectation(pauli::sigma_x(), DensityMatrix::validate(plus_projector()));
    CHECK(plus_x.real() == doctest::Approx(1.0));
    CHECK(std::abs(plus_x.imag()) <= 1e-15);

    const Complex h = expectation(gue_hermitian(3, 2), rho);
    CHECK(std::abs(h.imag()) <= 1e-10);

    try {
        expectation(identity(2), rho);
        FAIL("expected DimMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimMismatch);
    }
}

TEST_CASE("DensityMatrix validation") {
    CHECK_NOTHROW(DensityMatrix::validate(diag({0.75, 0.25})));
    auto kind_of = [](const Matrix& m) {
        try {
            DensityMatrix::validate(m);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ConfigInvalid;  // sentinel: no throw
    };
    CHECK(kind_of(diag({1.5, -0.5})) == ErrorKind::NotDensity);
    CHECK(kind_of(diag({0.5, 0.25})) == ErrorKind::NotDensity);
    CHECK(kind_of(pauli::sigma_minus() + diag({0.5, 0.5})) == ErrorKind::NotDensity);
}

TEST_CASE("ginibre_state") {
    const DensityMatrix one = ginibre_state(1, 99);
    CHECK(one.matrix()(0, 0) == Complex(1.0, 0.0));

    const DensityMatrix two = ginibre_state(2, 42);
    CHECK(two.spectrum().eigenvalues(1) > 0.0);

    CHECK(ginibre_state(3, 5).matrix() == ginibre_state(3, 5).matrix());
    CHECK(ginibre_state(3, 5).matrix() != ginibre_state(3, 6).matrix());

    DensityTolerances strict;  // all 1e-10
    for (Index d = 2; d <= 4; ++d) {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const DensityMatrix rho = ginibre_state(d, seed);
            CHECK_NOTHROW(DensityMatrix::validate(rho.matrix(), strict));
            const RealVector& ev = rho.spectrum().eigenvalues;
            CHECK(ev.minCoeff() >= 0.0);
            CHECK(ev.maxCoeff() <= 1.0);
            CHECK(std::abs(ev.sum() - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("gue_hermitian") {
    const Matrix one = gue_hermitian(1, 3);
    CHECK(one(0, 0).imag() == 0.0);
    const Matrix two = gue_hermitian(2, 3);
    CHECK(two == two.adjoint());
    const Matrix four = gue_hermitian(4, 3);
    CHECK(four.trace().imag() == 0.0);
    CHECK(gue_hermitian(4, 3) == four);
}

TEST_CASE("haar_unitary is unitary") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Matrix u = haar_unitary(4, seed);
        CHECK((u.adjoint() * u - identity(4)).norm() <= 1e-12);
    }
}

TEST_CASE("Tr(AB) <= Tr(A) Tr(B) for PSD pairs") {
    for (Index d = 2; d <= 4; ++d) {
        for (std::uint64_t k = 0; k < 100; ++k) {
            const Matrix ga = ginibre_matrix(d, 2 * k);
            const Matrix gb = ginibre_matrix(d, 2 * k + 1);
            const Matrix a = ga * ga.adjoint();
            const Matrix b = gb * gb.adjoint();
            const double lhs = brute_trace(brute_mul(a, b)).real();
            const double rhs = brute_trace(a).real() * brute_trace(b).real();
            CHECK(lhs <= rhs + 1e-10);
        }
    }
}

TEST_CASE("kron matches the index definition") {
    const Matrix a = ginibre_matrix(2, 1);
    const Matrix b = ginibre_matrix(3, 2);
    const Matrix k = kron(a, b);
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j)
            for (Index p = 0; p < 3; ++p)
                for (Index q = 0; q < 3; ++q) CHECK(k(3 * i + p, 3 * j + q) == a(i, j) * b(p, q));
}

}  // TEST_SUITE
