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
#include <numbers>

#include "doctest.h"
#include "oqs/dynamics.hpp"
#include "oqs/errors.hpp"
#include "oqs/models.hpp"
#include "test_util.hpp"

using namespace oqs;
using namespace oqs::testing;

namespace {

// D[L]rho from explicit loops.
Matrix dissipator_oracle(const Matrix& l, const Matrix& rho) {
    const Matrix l_dag = brute_adjoint(l);
    const Matrix decay = brute_mul(l_dag, l);
    return brute_mul(brute_mul(l, rho), l_dag) - 0.5 * brute_mul(decay, rho) - 0.5 * brute_mul(rho, decay);
}

LindbladModel random_model(Index d, std::uint64_t seed) {
    return LindbladModel(gue_hermitian(d, seed), {ginibre_matrix(d, seed + 1), gue_hermitian(d, seed + 2)});
}

IntegratorConfig config(double dt, double t_max, int stride = 1) {
    IntegratorConfig cfg;
    cfg.dt = dt;
    cfg.t_max = t_max;
    cfg.record_stride = stride;
    return cfg;
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("dissipator examples") {
    const DensityMatrix rho = ginibre_state(2, 4);
    CHECK(dissipator(identity(2), rho).norm() <= 1e-15);

    const Matrix decay = dissipator(pauli::sigma_minus(), DensityMatrix::basis_state(2, 0));
    CHECK(max_abs_diff(decay, diag({-1.0, 1.0})) <= 1e-15);

    const Matrix deph = dissipator(pauli::sigma_z(), plus_projector());
    const Matrix expected = dissipator_oracle(pauli::sigma_z(), plus_projector());
    CHECK(max_abs_diff(deph, expected) <= 1e-15);
    CHECK(std::abs(deph(0, 0)) == 0.0);
    CHECK(std::abs(deph(1, 1)) == 0.0);
    CHECK(deph(0, 1).real() == doctest::Approx(-2.0 * 0.5));
    CHECK(deph(1, 0).real() == doctest::Approx(-2.0 * 0.5));
}

TEST_CASE("dissipator is traceless and Hermitian-preserving") {
    for (Index d = 2; d <= 4; ++d) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Matrix l = ginibre_matrix(d, seed + 100);
            const DensityMatrix rho = ginibre_state(d, seed);
            const Matrix out = dissipator(l, rho);
            CHECK(std::abs(out.trace()) <= 1e-10);
            CHECK(hermiticity_defect(out) <= 1e-10);
            CHECK(max_abs_diff(out, dissipator_oracle(l, rho.matrix())) <= 1e-12);
        }
    }
    try {
        dissipator(identity(3), ginibre_state(2, 0));
        FAIL("expected DimMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimMismatch);
    }
}

TEST_CASE("liouvillian_rhs examples") {
    CHECK(liouvillian_rhs(LindbladModel::trivial(2), ginibre_state(2, 1)).norm() == 0.0);
    const LindbladModel hz(pauli::sigma_z(), {});
    CHECK(liouvillian_rhs(hz, DensityMatrix::validate(diag({0.3, 0.7}))).norm() == 0.0);
    const Matrix damp = liouvillian_rhs(get_model("amplitude_damping"), DensityMatrix::basis_state(2, 0));
    CHECK(max_abs_diff(damp, diag({-1.0, 1.0})) <= 1e-15);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const LindbladModel model = random_model(3, seed);
        const Matrix r = liouvillian_rhs(model, ginibre_state(3, seed));
        CHECK(std::abs(r.trace()) <= 1e-9);
        CHECK(hermiticity_defect(r) <= 1e-9);
    }
}

TEST_CASE("propagate: zero generator leaves the state unchanged") {
    const DensityMatrix rho0 = ginibre_state(3, 2);
    const TrajectoryRecord rec = propagate(LindbladModel::trivial(3), rho0, config(1e-2, 1.0, 10));
    CHECK((rec.final_state().matrix() - rho0.matrix()).norm() <= 1e-12);
    CHECK(rec.times.front() == 0.0);
    CHECK(rec.times.back() == 1.0);
    CHECK(rec.size() == 11);
}

TEST_CASE("propagate: dephasing coherence decays as exp(-2 gamma t)") {
    const TrajectoryRecord rec =
        propagate(get_model("dephasing"), named_state("plus", 2), config(1e-3, 1.0, 100));
    for (std::size_t k = 0; k < rec.size(); ++k) {
        const double expected = 0.5 * std::exp(-2.0 * rec.times[k]);
        CHECK(std::abs(rec.states[k].matrix()(0, 1) - Complex(expected, 0.0)) <= 1e-6);
    }
    CHECK(std::abs(rec.final_state().matrix()(0, 1).real() - 0.5 * std::exp(-2.0)) <= 1e-6);
}

TEST_CASE("propagate: amplitude damping population decays as exp(-gamma t)") {
    const double gamma = 0.8;
    const TrajectoryRecord rec = propagate(get_model("amplitude_damping", {{"gamma", gamma}}),
                                           named_state("excited", 2), config(1e-3, 1.0, 50));
    for (std::size_t k = 0; k < rec.size(); ++k) {
        CHECK(std::abs(rec.states[k].matrix()(0, 0).real() - std::exp(-gamma * rec.times[k])) <= 1e-6);
    }
}

TEST_CASE("propagate: unitary evolution keeps a pure state pure") {
    const LindbladModel model(pauli::sigma_z(), {});
    const TrajectoryRecord rec = propagate(model, named_state("plus", 2), config(1e-3, 2.0, 50));
    for (const BoundReport& r : rec.reports) CHECK(std::abs(r.entropy) <= 1e-9);
}

TEST_CASE("propagate: last step is shortened to land on t_max") {
    const TrajectoryRecord rec =
        propagate(get_model("dephasing"), named_state("plus", 2), config(0.3, 1.0, 1));
    REQUIRE(rec.size() == 5);
    CHECK(rec.times[3] == doctest::Approx(0.9));
    CHECK(rec.times[4] == 1.0);
    for (std::size_t k = 1; k < rec.size(); ++k) CHECK(rec.times[k] > rec.times[k - 1]);
}

TEST_CASE("trace and Hermiticity are conserved without renormalization") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Index d = 2 + static_cast<Index>(seed % 3);
        const LindbladModel model(gue_hermitian(d, seed), {0.5 * ginibre_matrix(d, seed + 1)});
        IntegratorConfig cfg = config(1e-3, 10.0, 250);
        cfg.hermitize_each_step = false;
        const TrajectoryRecord rec = propagate(model, ginibre_state(d, seed + 2), cfg);
        for (const DensityMatrix& s : rec.states) {
            CHECK(s.trace_error() <= 1e-7);
            CHECK(hermiticity_defect(s.matrix()) <= 1e-9);
        }
    }
}

TEST_CASE("purity is non-increasing under dephasing") {
    const TrajectoryRecord rec =
        propagate(get_model("dephasing", {{"gamma", 0.6}}), ginibre_state(2, 3), config(1e-3, 3.0, 10));
    for (std::size_t k = 1; k < rec.size(); ++k) {
        CHECK(rec.states[k].purity() <= rec.states[k - 1].purity() + 1e-9);
    }
}

TEST_CASE("propagation is linear in the initial state") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const LindbladModel model = random_model(3, seed);
        const DensityMatrix a = ginibre_state(3, seed + 10);
        const DensityMatrix b = ginibre_state(3, seed + 20);
        const DensityMatrix mix = DensityMatrix::validate(0.5 * (a.matrix() + b.matrix()));
        const IntegratorConfig cfg = config(1e-3, 1.0, 1000);
        const Matrix lhs = propagate(model, mix, cfg).final_state().matrix();
        const Matrix rhs =
            0.5 * (propagate(model, a, cfg).final_state().matrix() + propagate(model, b, cfg).final_state().matrix());
        CHECK((lhs - rhs).norm() <= 1e-8);
    }
}

TEST_CASE("trace renormalization keeps unit trace") {
    IntegratorConfig cfg = config(1e-2, 1.0, 10);
    cfg.trace_renormalize_each_step = true;
    const TrajectoryRecord rec = propagate(random_model(3, 4), ginibre_state(3, 4), cfg);
    for (const DensityMatrix& s : rec.states) CHECK(s.trace_error() <= 1e-14);
}

TEST_CASE("recorded rate matches central differences of S") {
    const double dt = 1e-4;
    const TrajectoryRecord rec = propagate(random_model(3, 9), ginibre_state(3, 9), config(dt, 0.2, 1));
    for (std::size_t k = 1; k + 1 < rec.size(); k += 97) {
        const double fd = (rec.reports[k + 1].entropy - rec.reports[k - 1].entropy) / (2.0 * dt);
        const double rate = rec.reports[k].rate_exact;
        CHECK(std::abs(fd - rate) <= std::max(1e-4, 1e-3 * std::abs(rate)));
    }
}

TEST_CASE("PositivityLost when the step size is far too large") {
    try {
        propagate(get_model("amplitude_damping", {{"gamma", 1.0}}), named_state("excited", 2),
                  config(3.0, 30.0, 1));
        FAIL("expected PositivityLost");
    } catch (const PositivityLost& e) {
        CHECK(e.kind() == ErrorKind::PositivityLost);
        CHECK(e.time() > 0.0);
        CHECK(e.min_eig() < -1e-8);
    }
}

TEST_CASE("invalid integrator configurations") {
    const LindbladModel model = get_model("dephasing");
    const DensityMatrix rho = named_state("plus", 2);
    auto kind = [&](const IntegratorConfig& cfg) {
        try {
            propagate(model, rho, cfg);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::NotDensity;  // sentinel: no throw
    };
    CHECK(kind(config(0.0, 1.0)) == ErrorKind::ConfigInvalid);
    CHECK(kind(config(1.0, 1.0)) == ErrorKind::ConfigInvalid);
    CHECK(kind(config(1e-2, -1.0)) == ErrorKind::ConfigInvalid);
    CHECK(kind(config(1e-2, 1.0, 0)) == ErrorKind::ConfigInvalid);
    CHECK(kind(config(std::nan(""), 1.0)) == ErrorKind::ConfigInvalid);
    try {
        propagate(model, ginibre_state(3, 1), config(1e-2, 1.0));
        FAIL("expected DimMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimMismatch);
    }
}

TEST_CASE("convergence_order_check") {
    const IntegratorConfig cfg = config(1e-2, 1.0, 1);
    const auto deph = convergence_order_check(get_model("dephasing"), named_state("plus", 2), cfg);
    REQUIRE(deph.has_value());
    CHECK(std::abs(*deph - 4.0) <= 0.5);

    const auto damp = convergence_order_check(get_model("amplitude_damping"), named_state("plus", 2), cfg);
    REQUIRE(damp.has_value());
    CHECK(std::abs(*damp - 4.0) <= 0.5);

    CHECK_FALSE(convergence_order_check(LindbladModel::trivial(2), ginibre_state(2, 1), cfg).has_value());
}

}  // TEST_SUITE
