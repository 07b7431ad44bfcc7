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

#ifndef ZGSIM_ERRORS_H
#define ZGSIM_ERRORS_H

#include <stdexcept>
#include <string>

namespace zgsim {

enum class ErrorKind {
    kInvalidArgument,
    kSchema,
    kNotSymplectic,
    kModeMismatch,
    kOracleScaleExceeded,
    kDecompositionFailed,
    kNotPositiveDefinite,
    kTruncationOverflow,
    kCutoffTooSmall,
    kSamplerEfficiency,
    kInfeasiblePlan,
};

const char *error_kind_name(ErrorKind kind);

/// CLI exit status for an error kind: 2 input/schema, 3 numeric, 4 infeasible plan.
int exit_code_for(ErrorKind kind);

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace zgsim

#endif
