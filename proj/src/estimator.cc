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

#include "zgsim/estimator.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "zgsim/errors.h"

namespace zgsim {

EstimatePlan plan_estimate(double epsilon, double delta, double negativity, uint64_t cap) {
    if (!(epsilon > 0 && epsilon < 1)) {
        throw Error(ErrorKind::kInvalidArgument, "epsilon must lie in (0, 1)");
    }
    if (!(delta > 0 && delta < 1)) {
        throw Error(ErrorKind::kInvalidArgument, "delta must lie in (0, 1)");
    }
    if (!(negativity >= 1 - 1e-6) || !std::isfinite(negativity)) {
        throw Error(ErrorKind::kInvalidArgument, "negativity must be at least 1");
    }
    double n = std::ceil(2 / (epsilon * epsilon) * negativity * negativity * std::log(2 / delta));
    if (!(n <= (double)cap)) {
        throw Error(ErrorKind::kInfeasiblePlan, "plan needs " + std::to_string(n) + " samples; cap is " +
                                                    std::to_string(cap) + " (raise it by a factor of " +
                                                    std::to_string(n / (double)cap) + ")");
    }
    return {epsilon, delta, negativity, (uint64_t)n};
}

std::vector<double> EstimateReport::clamped() const {
    std::vector<double> c = estimates;
    for (double &v : c) {
        v = std::clamp(v, 0.0, 1.0);
    }
    return c;
}

EstimateReport estimate(const WignerState &state, const MeasurementSpec &spec, const EstimatePlan &plan,
                        uint64_t seed, int threads) {
    auto start = std::chrono::steady_clock::now();
    if (plan.samples == 0) {
        throw Error(ErrorKind::kInvalidArgument, "plan has no samples");
    }
    if (std::abs(plan.negativity - state.negativity()) > 1e-9 * state.negativity()) {
        throw Error(ErrorKind::kInvalidArgument, "plan negativity does not match the state");
    }
    const CodeParams &p = state.params();
    size_t outcomes = spec.outcome_count();
    EstimateReport r;
    r.spec = spec;
    r.plan = plan;
    r.seed = seed;
    r.positive.assign(outcomes, 0);
    r.negative.assign(outcomes, 0);

    // Chunks are processed in batches so that per-chunk outcome lists stay small.
    size_t chunks = (plan.samples + kSampleChunk - 1) / kSampleChunk;
    size_t batch = std::max<size_t>(1, (size_t)std::max(threads, 1) * 8);
    std::vector<std::vector<int64_t>> signed_outcomes(batch);
    for (size_t first = 0; first < chunks; first += batch) {
        size_t count = std::min(batch, chunks - first);
        parallel_chunks(count, threads, [&](size_t i) {
            size_t k = first + i;
            size_t n = std::min<uint64_t>(kSampleChunk, plan.samples - (uint64_t)k * kSampleChunk);
            std::vector<PhaseSample> xs = state.sample_chunk(seed, k, n);
            std::vector<int64_t> &out = signed_outcomes[i];
            out.clear();
            for (const PhaseSample &x : xs) {
                int64_t o = (int64_t)outcome_index(p, spec, x.eta);
                out.push_back(x.sign > 0 ? o : -o - 1);
            }
        });
        for (size_t i = 0; i < count; i++) {
            for (int64_t o : signed_outcomes[i]) {
                if (o >= 0) {
                    r.positive[o]++;
                } else {
                    r.negative[-o - 1]++;
                }
            }
        }
    }

    double n = (double)plan.samples, m = plan.negativity;
    r.estimates.resize(outcomes);
    r.standard_errors.resize(outcomes);
    for (size_t o = 0; o < outcomes; o++) {
        double mean = m * (double)(r.positive[o] - r.negative[o]) / n;
        double second = m * m * (double)(r.positive[o] + r.negative[o]) / n;
        double var = n > 1 ? std::max(0.0, second - mean * mean) * n / (n - 1) : 0.0;
        r.estimates[o] = mean;
        r.standard_errors[o] = std::sqrt(var / n);
    }
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace zgsim
