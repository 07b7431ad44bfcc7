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

#include "zgsim/code_params.h"

#include <cmath>
#include <numbers>
#include <string>

#include "zgsim/errors.h"

namespace zgsim {

CodeParams CodeParams::make(int d, int n) {
    if (d < 3 || d % 2 == 0) {
        throw Error(ErrorKind::kInvalidArgument, "d must be odd and >= 3, got " + std::to_string(d));
    }
    if (n < 1) {
        throw Error(ErrorKind::kInvalidArgument, "n must be >= 1, got " + std::to_string(n));
    }
    CodeParams p;
    p.d = d;
    p.n = n;
    p.ell = std::sqrt(2 * std::numbers::pi / d);
    p.omega = std::polar(1.0, 2 * std::numbers::pi / d);
    p.two_inv = (d + 1) / 2;
    return p;
}

Cx CodeParams::omega_pow(int64_t k) const {
    return std::polar(1.0, 2 * std::numbers::pi * (double)floor_mod(k, d) / d);
}

double wrap_torus(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0) {
        r += period;
    }
    // fmod of a tiny negative value can round up to exactly `period`.
    if (r >= period) {
        r -= period;
    }
    return r;
}

double wrap_torus_snapped(double x, double period, double step, double snap) {
    double r = wrap_torus(x, period);
    double k = std::round(r / step);
    if (std::abs(r - k * step) <= snap * step) {
        r = k * step;
        if (r >= period) {
            r -= period;
        }
    }
    return r;
}

}  // namespace zgsim
