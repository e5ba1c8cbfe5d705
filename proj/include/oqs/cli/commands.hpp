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

#include <cstdint>
#include <iosfwd>

#include "json.hpp"

namespace oqs::cli {

// Process exit codes. Every failure path has its own code.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitPositivityLost = 3,
    kExitNumerical = 4,
    kExitDegenerate = 5,
    kExitBoundsUnavailable = 6,
};

inline constexpr const char* kTrajectoryHeader =
    "t,S,rate_exact,rate_lower_bound,threshold_general,threshold_variance,"
    "monotone_guaranteed,trace_error,min_eig";

inline constexpr const char* kAuditHeader = "case_id,eq11_lhs,eq11_rhs,eq11_holds,logineq_min_eig";

struct AuditSpec {
    long long d = 2;
    long long count = 100;
    std::uint64_t seed = 0;
    /// Draw PSD channels G G^dagger instead of GUE observables.
    bool psd_channels = false;
};

// Each command writes its report to `out` and one-line diagnostics to `err`,
// and returns the process exit code.
int cmd_simulate(const nlohmann::json& config, std::ostream& out, std::ostream& err);
int cmd_steady(const nlohmann::json& config, std::ostream& out, std::ostream& err);
int cmd_bounds(const nlohmann::json& config, std::ostream& out, std::ostream& err);
int cmd_audit(const AuditSpec& spec, std::ostream& out, std::ostream& err);
int cmd_models(bool json, std::ostream& out, std::ostream& err);

/// Reads {"d", "count", "seed", "psd"}; throws oqs::Error(ConfigInvalid) on bad types.
AuditSpec parse_audit_spec(const nlohmann::json& config);

}  // namespace oqs::cli
