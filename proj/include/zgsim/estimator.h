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

#ifndef ZGSIM_ESTIMATOR_H
#define ZGSIM_ESTIMATOR_H

#include <cstdint>
#include <vector>

#include "zgsim/measure.h"
#include "zgsim/wigner_state.h"

namespace zgsim {

constexpr uint64_t kDefaultSampleCap = 2'000'000'000;

/// Hoeffding plan: N = ceil(2 M^2 log(2 / delta) / epsilon^2). The guarantee
/// |p_hat - p| <= epsilon with probability 1 - delta holds for each outcome
/// separately, not jointly.
struct EstimatePlan {
    double epsilon = 0.05;
    double delta = 0.05;
    double negativity = 1;
    uint64_t samples = 0;
};

/// Throws InvalidArgument for epsilon or delta outside (0, 1) or M < 1, and
/// InfeasiblePlan when N exceeds cap.
EstimatePlan plan_estimate(double epsilon, double delta, double negativity, uint64_t cap = kDefaultSampleCap);

struct EstimateReport {
    MeasurementSpec spec;
    EstimatePlan plan;
    uint64_t seed = 0;
    /// Per outcome: M (positive - negative) / N. May fall outside [0, 1].
    std::vector<double> estimates;
    /// Sample standard error of each estimate.
    std::vector<double> standard_errors;
    std::vector<int64_t> positive;
    std::vector<int64_t> negative;
    double wall_seconds = 0;

    /// Estimates clipped to [0, 1]; biased, for display only.
    std::vector<double> clamped() const;
};

/// Draws plan.samples points from |W| / M and averages M sign(W) times the bin
/// indicator for every outcome at once. Bit-identical for a given seed and plan,
/// whatever the thread count.
EstimateReport estimate(const WignerState &state, const MeasurementSpec &spec, const EstimatePlan &plan,
                        uint64_t seed, int threads = 1);

}  // namespace zgsim

#endif
