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

#ifndef ZGSIM_MEASURE_H
#define ZGSIM_MEASURE_H

#include <vector>

#include "zgsim/code_params.h"
#include "zgsim/wigner_state.h"

namespace zgsim {

/// Modular position measurement: K half-open bins [k dl/K, (k+1) dl/K) per measured
/// mode on the eta_X coordinate. Outcomes are flattened as z_0 + K z_1 + ...
struct MeasurementSpec {
    std::vector<int> modes;
    int bins = 3;

    /// Validates distinct in-range modes and K >= 1.
    static MeasurementSpec make(const CodeParams &params, std::vector<int> modes, int bins);
    size_t outcome_count() const;
    std::vector<int> unflatten(size_t outcome) const;
    bool operator==(const MeasurementSpec &) const = default;
};

/// Bin of a coordinate; points within 1e-9 of an edge belong to the bin the edge opens.
int bin_index(const CodeParams &params, int bins, double eta_x);
size_t outcome_index(const CodeParams &params, const MeasurementSpec &spec, const PhasePoint &eta);
bool povm_indicator(const CodeParams &params, const MeasurementSpec &spec, const std::vector<int> &z,
                    const PhasePoint &eta);

/// Exact outcome table for all-ideal inputs: lattice weights pushed through the
/// map and binned. Throws InvalidArgument if a factor is realistic.
std::vector<double> exact_probabilities_ideal(const WignerState &state, const MeasurementSpec &spec);

/// Bin probabilities of a single-mode smooth state by adaptive quadrature of the
/// evolved W over each bin strip.
std::vector<double> quadrature_probabilities(const WignerState &state, const MeasurementSpec &spec,
                                             double abs_tol = 1e-10);

}  // namespace zgsim

#endif
