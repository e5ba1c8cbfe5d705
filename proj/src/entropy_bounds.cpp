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

#include "oqs/entropy_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oqs/errors.hpp"

namespace oqs {

namespace {

double xlogx(double x) { return x > kEigFloor ? x * std::log(x) : 0.0; }

void require_model_dim(const LindbladModel& model, const DensityMatrix& rho, const char* what) {
    if (model.dim() != rho.dim()) {
        throw Error(ErrorKind::DimMismatch, std::string(what) + ": model dim " +
                                                std::to_string(model.dim()) + " vs state dim " +
                                                std::to_string(rho.dim()));
    }
}

void require_observable(const Matrix& observable, const DensityMatrix& rho, const char* what) {
    require_same_dim(observable, rho.matrix(), what);
    if (!is_hermitian(observable)) {
        throw Error(ErrorKind::NotHermitian, std::string(what) + " needs a Hermitian channel");
    }
}

double require_channels(const LindbladModel& model, const char* what) {
    if (model.channels().empty()) {
        throw Error(ErrorKind::NoChannels, std::string(what) + " needs at least one channel");
    }
    const double norms = model.total_channel_norm_sq();
    if (norms == 0.0) {
        throw Error(ErrorKind::ZeroChannel, std::string(what) + ": every channel is zero");
    }
    return norms;
}

double beta_sum(const LindbladModel& model, const DensityMatrix& rho) {
    double total = 0.0;
    for (const Matrix& l : model.channels()) total += channel_beta(l, rho);
    return total;
}

}  // namespace

bool EntropyRate::saturated() const { return std::isinf(value); }

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    const RealVector& lambda = rho.spectrum().eigenvalues;
    for (Index k = 0; k < lambda.size(); ++k) s -= xlogx(lambda(k));
    return std::max(0.0, s);
}

EntropyRate entropy_rate(const LindbladModel& model, const DensityMatrix& rho) {
    require_model_dim(model, rho, "entropy_rate");
    const SpectralDecomposition& sp = rho.spectrum();
    const Index d = sp.dim();

    RealVector lambda_log_lambda(d);
    RealVector log_lambda(d);
    std::vector<bool> null_direction(static_cast<std::size_t>(d));
    for (Index k = 0; k < d; ++k) {
        const double lam = sp.eigenvalues(k);
        null_direction[static_cast<std::size_t>(k)] = lam <= kEigFloor;
        lambda_log_lambda(k) = xlogx(lam);
        log_lambda(k) = lam > kEigFloor ? std::log(lam) : 0.0;
    }
    const Vector lambda_c = sp.eigenvalues.cast<Complex>();

    EntropyRate out;
    for (const Matrix& l : model.channels()) {
        // Channel in the eigenbasis of rho.
        const Matrix w = sp.eigenvectors.adjoint() * l * sp.eigenvectors;
        const Matrix jump = w * lambda_c.asDiagonal() * w.adjoint();  // L rho L^dag
        double leakage = 0.0;
        double term = 0.0;
        for (Index k = 0; k < d; ++k) {
            const double decay_kk = w.col(k).squaredNorm();  // (W^dag W)_kk
            term += decay_kk * lambda_log_lambda(k);
            if (null_direction[static_cast<std::size_t>(k)]) {
                leakage += jump(k, k).real();
            } else {
                term -= jump(k, k).real() * log_lambda(k);
            }
        }
        if (leakage > kNullLeakageTol) {
            out.value = std::numeric_limits<double>::infinity();
            out.log_floor_hit = true;
            return out;
        }
        out.value += term;
    }
    return out;
}

double entropy_rate_exact(const LindbladModel& model, const DensityMatrix& rho) {
    return entropy_rate(model, rho).value;
}

double channel_beta(const Matrix& channel, const DensityMatrix& rho) {
    require_same_dim(channel, rho.matrix(), "channel_beta");
    const Matrix& r = rho.matrix();
    const Matrix l_dag = channel.adjoint();
    const Complex decay = (l_dag * channel * r).trace();
    const Complex overlap = (channel * r * l_dag * r).trace();
    return (decay - overlap).real();
}

double rate_lower_bound(const LindbladModel& model, const DensityMatrix& rho) {
    require_model_dim(model, rho, "rate_lower_bound");
    const double s = von_neumann_entropy(rho);
    double total = 0.0;
    for (const Matrix& l : model.channels()) total += -frobenius_norm_sq(l) * s + channel_beta(l, rho);
    return total;
}

double monotonicity_threshold(const LindbladModel& model, const DensityMatrix& rho) {
    require_model_dim(model, rho, "monotonicity_threshold");
    const double norms = require_channels(model, "monotonicity_threshold");
    return beta_sum(model, rho) / norms;
}

double variance(const Matrix& observable, const DensityMatrix& rho) {
    require_observable(observable, rho, "variance");
    const Matrix& r = rho.matrix();
    const double second = (observable * observable * r).trace().real();
    const double first = (observable * r).trace().real();
    return second - first * first;
}

double variance_threshold(const Matrix& observable, const DensityMatrix& rho) {
    const double var = variance(observable, rho);
    const double norm = frobenius_norm_sq(observable);
    if (norm == 0.0) throw Error(ErrorKind::ZeroChannel, "variance_threshold of a zero channel");
    return var / norm;
}

VarianceStepAudit audit_variance_step(const Matrix& observable, const DensityMatrix& rho) {
    require_observable(observable, rho, "audit_variance_step");
    const Matrix sqrt_rho = rho.spectrum().apply([](double x) { return std::sqrt(std::max(0.0, x)); });
    const Matrix a = sqrt_rho * observable * sqrt_rho;
    VarianceStepAudit out;
    out.lhs = (a * a).trace().real();
    const double mean = (observable * rho.matrix()).trace().real();
    out.rhs = mean * mean;
    out.holds = out.lhs <= out.rhs + 1e-10;
    return out;
}

double rate_bound_at_entropy(double x, const LindbladModel& model, const DensityMatrix& rho) {
    require_model_dim(model, rho, "rate_bound_at_entropy");
    if (model.channels().empty()) {
        throw Error(ErrorKind::NoChannels, "rate_bound_at_entropy needs at least one channel");
    }
    return -model.total_channel_norm_sq() * x + beta_sum(model, rho);
}

SteadyBound s_star(const LindbladModel& model, const DensityMatrix& rho_inf) {
    require_model_dim(model, rho_inf, "s_star");
    SteadyBound out;
    out.norm_sums = require_channels(model, "s_star");
    out.channel_betas.reserve(model.channels().size());
    for (const Matrix& l : model.channels()) {
        out.channel_betas.push_back(channel_beta(l, rho_inf));
        out.beta += out.channel_betas.back();
    }
    out.s_star_raw = out.beta / out.norm_sums;
    out.s_star = std::max(0.0, out.s_star_raw);
    return out;
}

double s_star_maximally_mixed(int d) {
    if (d < 2) throw Error(ErrorKind::BadDimension, "s_star_maximally_mixed needs d >= 2");
    const long long num = d - 1;
    const long long den = static_cast<long long>(d) * d;
    return static_cast<double>(num) / static_cast<double>(den);
}

double log_inequality_min_eig(const DensityMatrix& rho) {
    const Matrix neg_log = rho.spectrum().apply([](double x) { return -std::log(std::max(x, kEigFloor)); });
    const Matrix gap = neg_log - identity(rho.dim()) + rho.matrix();
    const SpectralDecomposition sp = hermitian_eig(gap);
    return sp.eigenvalues(sp.dim() - 1);
}

BoundReport bound_report(const LindbladModel& model, const DensityMatrix& rho, double time) {
    require_model_dim(model, rho, "bound_report");
    BoundReport r;
    r.time = time;
    r.entropy = von_neumann_entropy(rho);
    const EntropyRate rate = entropy_rate(model, rho);
    r.rate_exact = rate.value;
    r.log_floor_hit = rate.log_floor_hit;
    r.rate_lower_bound = rate_lower_bound(model, rho);

    const double norms = model.total_channel_norm_sq();
    if (!model.channels().empty() && norms > 0.0) {
        r.threshold_general = beta_sum(model, rho) / norms;
        r.monotone_guaranteed = r.entropy <= *r.threshold_general;
        if (model.all_channels_hermitian()) {
            double var_sum = 0.0;
            for (const Matrix& l : model.channels()) var_sum += variance(l, rho);
            r.threshold_variance = var_sum / norms;
        }
    }
    return r;
}

}  // namespace oqs
