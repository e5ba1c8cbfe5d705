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

#include "oqs/cli/commands.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "oqs/cli/config.hpp"
#include "oqs/entropy_bounds.hpp"
#include "oqs/errors.hpp"
#include "oqs/models.hpp"
#include "oqs/steady_state.hpp"

namespace oqs::cli {

using nlohmann::json;

namespace {

bool is_config_error(ErrorKind kind) {
    return kind == ErrorKind::ConfigInvalid || kind == ErrorKind::UnknownModel ||
           kind == ErrorKind::BadParams || kind == ErrorKind::DimMismatch;
}

// Maps exceptions from parsing or running a command onto exit codes.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const PositivityLost& e) {
        err << "error: " << e.what() << '\n';
        return kExitPositivityLost;
    } catch (const DegenerateSteadyState& e) {
        err << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_config_error(e.kind()) ? kExitConfig : kExitNumerical;
    } catch (const json::exception& e) {
        err << "error: malformed config: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

// Parse failures are config errors whatever their kind.
RunConfig parse_or_config_error(const json& config) {
    try {
        return parse_run_config(config);
    } catch (const Error& e) {
        if (is_config_error(e.kind())) throw;
        throw Error(ErrorKind::ConfigInvalid, e.what());
    }
}

json rate_to_json(double rate) {
    if (std::isinf(rate)) return rate > 0 ? "inf" : "-inf";
    return rate;
}

json optional_to_json(const std::optional<double>& value) {
    return value ? json(*value) : json(nullptr);
}

void steady_bound_fields(json& report, const LindbladModel& model, const DensityMatrix& rho) {
    if (model.channels().empty() || model.total_channel_norm_sq() == 0.0) {
        report["beta"] = nullptr;
        report["channel_betas"] = json::array();
        report["norm_sums"] = model.total_channel_norm_sq();
        report["s_star"] = nullptr;
        report["s_star_raw"] = nullptr;
        return;
    }
    const SteadyBound bound = s_star(model, rho);
    report["beta"] = bound.beta;
    report["channel_betas"] = bound.channel_betas;
    report["norm_sums"] = bound.norm_sums;
    report["s_star"] = bound.s_star;
    report["s_star_raw"] = bound.s_star_raw;
}

}  // namespace

int cmd_simulate(const json& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const RunConfig run = parse_or_config_error(config);
        if (!run.initial_state) throw Error(ErrorKind::ConfigInvalid, "simulate needs an initial_state");
        const TrajectoryRecord rec = propagate(run.model, *run.initial_state, run.integrator);

        std::ostringstream csv;
        csv << kTrajectoryHeader << '\n';
        for (std::size_t k = 0; k < rec.size(); ++k) {
            const BoundReport& r = rec.reports[k];
            const DensityMatrix& s = rec.states[k];
            csv << format_double(r.time) << ',' << format_double(r.entropy) << ','
                << format_double(r.rate_exact) << ',' << format_double(r.rate_lower_bound) << ','
                << (r.threshold_general ? format_double(*r.threshold_general) : "") << ','
                << (r.threshold_variance ? format_double(*r.threshold_variance) : "") << ','
                << (r.monotone_guaranteed ? "true" : "false") << ',' << format_double(s.trace_error())
                << ',' << format_double(s.min_eigenvalue()) << '\n';
        }
        out << csv.str();
        return kExitOk;
    });
}

int cmd_steady(const json& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const RunConfig run = parse_or_config_error(config);
        if (run.steady_fallback_t_long && !run.initial_state) {
            throw Error(ErrorKind::ConfigInvalid, "steady.fallback_t_long needs an initial_state");
        }
        json report;
        report["model"] = run.model.label();
        report["dim"] = run.model.dim();
        try {
            const SteadyStateSolution sol = solve_steady_state(run.model, run.steady_tol);
            report["null_dimension"] = sol.null_dimension;
            report["rho_inf"] = matrix_to_json(sol.state.matrix());
            report["entropy"] = von_neumann_entropy(sol.state);
            report["residual"] = sol.residual;
            steady_bound_fields(report, run.model, sol.state);
        } catch (const DegenerateSteadyState& e) {
            report["error"] = "DegenerateSteadyState";
            report["null_dimension"] = e.null_dimension();
            if (run.steady_fallback_t_long) {
                // The long-time limit depends on the initial state here.
                const DensityMatrix late = long_time_state(run.model, *run.initial_state,
                                                           *run.steady_fallback_t_long, run.integrator);
                json fallback;
                fallback["t_long"] = *run.steady_fallback_t_long;
                fallback["rho"] = matrix_to_json(late.matrix());
                fallback["entropy"] = von_neumann_entropy(late);
                steady_bound_fields(fallback, run.model, late);
                report["long_time_fallback"] = std::move(fallback);
            }
            out << report.dump(2) << '\n';
            err << "error: " << e.what() << '\n';
            return kExitDegenerate;
        }
        out << report.dump(2) << '\n';
        return kExitOk;
    });
}

int cmd_bounds(const json& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const RunConfig run = parse_or_config_error(config);
        if (!run.initial_state) throw Error(ErrorKind::ConfigInvalid, "bounds needs an explicit initial_state");
        const LindbladModel& model = run.model;
        if (model.channels().empty() || model.total_channel_norm_sq() == 0.0) {
            err << "error: the model has no non-zero channel, nothing to bound\n";
            return kExitBoundsUnavailable;
        }
        if (run.request_variance && !model.all_channels_hermitian()) {
            err << "error: variance threshold requested but a channel is not Hermitian\n";
            return kExitBoundsUnavailable;
        }
        const DensityMatrix& rho = *run.initial_state;
        const BoundReport r = bound_report(model, rho, 0.0);

        json report;
        report["model"] = model.label();
        report["dim"] = model.dim();
        report["time"] = r.time;
        report["entropy"] = r.entropy;
        report["rate_exact"] = rate_to_json(r.rate_exact);
        report["rate_lower_bound"] = r.rate_lower_bound;
        report["threshold_general"] = optional_to_json(r.threshold_general);
        report["threshold_variance"] = optional_to_json(r.threshold_variance);
        report["monotone_guaranteed"] = r.monotone_guaranteed;
        report["log_floor_hit"] = r.log_floor_hit;
        report["ln_d"] = std::log(static_cast<double>(model.dim()));
        report["s_star_maximally_mixed"] =
            model.dim() >= 2 ? json(s_star_maximally_mixed(static_cast<int>(model.dim()))) : json(nullptr);
        steady_bound_fields(report, model, rho);
        out << report.dump(2) << '\n';
        return kExitOk;
    });
}

AuditSpec parse_audit_spec(const json& config) {
    if (!config.is_object()) throw Error(ErrorKind::ConfigInvalid, "audit config must be an object");
    AuditSpec spec;
    for (const auto& item : config.items()) {
        const json& v = item.value();
        if (item.key() == "psd") {
            if (!v.is_boolean()) throw Error(ErrorKind::ConfigInvalid, "audit psd must be a boolean");
            spec.psd_channels = v.get<bool>();
            continue;
        }
        if (!v.is_number_integer()) throw Error(ErrorKind::ConfigInvalid, "audit " + item.key() + " must be an integer");
        if (item.key() == "d") {
            spec.d = v.get<long long>();
        } else if (item.key() == "count") {
            spec.count = v.get<long long>();
        } else if (item.key() == "seed") {
            if (v.get<long long>() < 0) throw Error(ErrorKind::ConfigInvalid, "audit seed must be non-negative");
            spec.seed = v.get<std::uint64_t>();
        } else {
            throw Error(ErrorKind::ConfigInvalid, "unknown key '" + item.key() + "' in audit config");
        }
    }
    return spec;
}

int cmd_audit(const AuditSpec& spec, std::ostream& out, std::ostream& err) {
    if (spec.d < 2 || spec.d > 64) {
        err << "error: audit needs 2 <= d <= 64\n";
        return kExitConfig;
    }
    if (spec.count < 1) {
        err << "error: audit needs count >= 1\n";
        return kExitConfig;
    }
    return guarded(err, [&] {
        const Index d = static_cast<Index>(spec.d);
        std::ostringstream csv;
        csv << kAuditHeader << '\n';
        long long eq11_violations = 0;
        long long log_violations = 0;
        for (long long i = 0; i < spec.count; ++i) {
            // Case 0 of a qubit sweep is the known counterexample sigma_z at I/2.
            const bool canned = d == 2 && i == 0 && !spec.psd_channels;
            const std::uint64_t base = spec.seed + 2 * static_cast<std::uint64_t>(i);
            const DensityMatrix rho = canned ? DensityMatrix::maximally_mixed(2) : ginibre_state(d, base);
            Matrix l;
            if (canned) {
                l = pauli::sigma_z();
            } else if (spec.psd_channels) {
                const Matrix g = ginibre_matrix(d, base + 1);
                l = g * g.adjoint();
                l = 0.5 * (l + l.adjoint());
            } else {
                l = gue_hermitian(d, base + 1);
            }
            const VarianceStepAudit a = audit_variance_step(l, rho);
            const double log_gap = log_inequality_min_eig(rho);
            if (!a.holds) ++eq11_violations;
            if (log_gap < -1e-10) ++log_violations;
            csv << i << ',' << format_double(a.lhs) << ',' << format_double(a.rhs) << ','
                << (a.holds ? "true" : "false") << ',' << format_double(log_gap) << '\n';
        }
        csv << "# cases=" << spec.count << " eq11_violations=" << eq11_violations
            << " logineq_violations=" << log_violations << '\n';
        out << csv.str();
        return kExitOk;
    });
}

int cmd_models(bool as_json, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto& specs = list_models();
        if (as_json) {
            json list = json::array();
            for (const ModelSpec& s : specs) {
                json params = json::array();
                for (const ParamSpec& p : s.params) {
                    params.push_back({{"name", p.name}, {"default", p.default_value}, {"description", p.description}});
                }
                list.push_back({{"name", s.name},
                                {"summary", s.summary},
                                {"params", std::move(params)},
                                {"multi_channel", s.multi_channel},
                                {"certifies", s.certifies}});
            }
            out << list.dump(2) << '\n';
            return kExitOk;
        }
        for (const ModelSpec& s : specs) {
            out << s.name << (s.multi_channel ? " [multi-channel]" : "") << "\n  " << s.summary << "\n  params:";
            for (const ParamSpec& p : s.params) out << ' ' << p.name << '=' << p.default_value;
            out << "\n  certifies: " << s.certifies << '\n';
        }
        return kExitOk;
    });
}

}  // namespace oqs::cli
