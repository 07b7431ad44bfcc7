// Copyright 2026 The zgsim Authors
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

#include "zgsim/errors.h"

namespace zgsim {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kInvalidArgument:
            return "InvalidArgument";
        case ErrorKind::kSchema:
            return "SchemaError";
        case ErrorKind::kNotSymplectic:
            return "NotSymplectic";
        case ErrorKind::kModeMismatch:
            return "ModeMismatch";
        case ErrorKind::kOracleScaleExceeded:
            return "OracleScaleExceeded";
        case ErrorKind::kDecompositionFailed:
            return "DecompositionFailed";
        case ErrorKind::kNotPositiveDefinite:
            return "NotPositiveDefinite";
        case ErrorKind::kTruncationOverflow:
            return "TruncationOverflow";
        case ErrorKind::kCutoffTooSmall:
            return "CutoffTooSmall";
        case ErrorKind::kSamplerEfficiency:
            return "SamplerEfficiency";
        case ErrorKind::kInfeasiblePlan:
            return "InfeasiblePlan";
    }
    return "Unknown";
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kInvalidArgument:
        case ErrorKind::kSchema:
        case ErrorKind::kNotSymplectic:
        case ErrorKind::kModeMismatch:
            return 2;
        case ErrorKind::kInfeasiblePlan:
            return 4;
        default:
            return 3;
    }
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace zgsim
