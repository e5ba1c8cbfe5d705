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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oqs {

enum class ErrorKind {
    NotHermitian,
    EigFailure,
    DimMismatch,
    NotDensity,
    PositivityLost,
    ConfigInvalid,
    NoChannels,
    ZeroChannel,
    BadDimension,
    DegenerateSteadyState,
    NoSteadyState,
    UnknownModel,
    BadParams,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by the integrator when a recorded state drops below -positivity_tol.
class PositivityLost : public Error {
public:
    PositivityLost(double time, double min_eig, const std::string& what)
        : Error(ErrorKind::PositivityLost, what), time_(time), min_eig_(min_eig) {}

    double time() const noexcept { return time_; }
    double min_eig() const noexcept { return min_eig_; }

private:
    double time_;
    double min_eig_;
};

/// The generator has a fixed-point manifold rather than a unique steady state.
class DegenerateSteadyState : public Error {
public:
    DegenerateSteadyState(std::size_t null_dimension, const std::string& what)
        : Error(ErrorKind::DegenerateSteadyState, what), null_dimension_(null_dimension) {}

    std::size_t null_dimension() const noexcept { return null_dimension_; }

private:
    std::size_t null_dimension_;
};

}  // namespace oqs
