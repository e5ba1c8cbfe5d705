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

#include "oqs/errors.hpp"

namespace oqs {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::EigFailure: return "EigFailure";
        case ErrorKind::DimMismatch: return "DimMismatch";
        case ErrorKind::NotDensity: return "NotDensity";
        case ErrorKind::PositivityLost: return "PositivityLost";
        case ErrorKind::ConfigInvalid: return "ConfigInvalid";
        case ErrorKind::NoChannels: return "NoChannels";
        case ErrorKind::ZeroChannel: return "ZeroChannel";
        case ErrorKind::BadDimension: return "BadDimension";
        case ErrorKind::DegenerateSteadyState: return "DegenerateSteadyState";
        case ErrorKind::NoSteadyState: return "NoSteadyState";
        case ErrorKind::UnknownModel: return "UnknownModel";
        case ErrorKind::BadParams: return "BadParams";
    }
    return "Unknown";
}

}  // namespace oqs
