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

#include "zgsim/measure.h"

#include <cmath>
#include <set>
#include <string>

#include "zgsim/errors.h"
#include "zgsim/quadrature.h"

namespace zgsim {

namespace {

constexpr double kEdgeSnap = 1e-9;

}  // namespace

MeasurementSpec MeasurementSpec::make(const CodeParams &params, std::vector<int> modes, int bins) {
    if (bins < 1) {
        throw Error(ErrorKind::kInvalidArgument, "bin count must be positive");
    }
    std::set<int> seen;
    for (int m : modes) {
        if (m < 0 || m >= params.n) {
            throw Error(ErrorKind::kInvalidArgument, "measured mode " + std::to_string(m) + " out of range");
        }
        if (!seen.insert(m).second) {
            throw Error(ErrorKind::kInvalidArgument, "mode " + std::to_string(m) + " measured twice");
        }
    }
    MeasurementSpec s;
    s.modes = std::move(modes);
    s.bins = bins;
    if (s.outcome_count() > (size_t)1 << 24) {
        throw Error(ErrorKind::kInvalidArgument, "outcome table too large");
    }
    return s;
}

size_t MeasurementSpec::outcome_count() const {
    size_t c = 1;
    for (size_t k = 0; k < modes.size(); k++) {
        c *= bins;
    }
    return c;
}

std::vector<int> MeasurementSpec::unflatten(size_t outcome) const {
    std::vector<int> z(modes.size());
    for (size_t k = 0; k < modes.size(); k++) {
        z[k] = (int)(outcome % bins);
        outcome /= bins;
    }
    return z;
}

int bin_index(const CodeParams &params, int bins, double eta_x) {
    double u = bins * eta_x / params.torus_length();
    double r = std::round(u);
    if (std::abs(u - r) <= kEdgeSnap) {
        u = r;
    }
    return (int)floor_mod((int64_t)std::floor(u), bins);
}

size_t outcome_index(const CodeParams &params, const MeasurementSpec &spec, const PhasePoint &eta) {
    size_t o = 0, place = 1;
    for (int m : spec.modes) {
        o += place * (size_t)bin_index(params, spec.bins, eta.x(m));
        place *= spec.bins;
    }
    return o;
}

bool povm_indicator(const CodeParams &params, const MeasurementSpec &spec, const std::vector<int> &z,
                    const PhasePoint &eta) {
    if (z.size() != spec.modes.size()) {
        throw Error(ErrorKind::kInvalidArgument, "bin vector has the wrong length");
    }
    for (size_t k = 0; k < z.size(); k++) {
        if (bin_index(params, spec.bins, eta.x(spec.modes[k])) != z[k]) {
            return false;
        }
    }
    return true;
}

std::vector<double> exact_probabilities_ideal(const WignerState &state, const MeasurementSpec &spec) {
    if (!state.all_ideal()) {
        throw Error(ErrorKind::kInvalidArgument, "exact probabilities need all-ideal inputs");
    }
    const CodeParams &p = state.params();
    int n = p.n, d = p.d;
    // Support of each factor: (x, z, weight) with nonzero weight.
    std::vector<std::vector<std::tuple<int, int, double>>> support(n);
    for (int k = 0; k < n; k++) {
        const std::vector<double> &t = state.factors()[k].table();
        for (int i = 0; i < d * d; i++) {
            if (t[i] != 0) {
                support[k].emplace_back(i % d, i / d, t[i]);
            }
        }
    }
    std::vector<double> out(spec.outcome_count(), 0.0);
    std::vector<size_t> pos(n, 0);
    std::vector<int64_t> m(2 * n);
    while (true) {
        double w = 1;
        for (int k = 0; k < n; k++) {
            const auto &[x, z, v] = support[k][pos[k]];
            m[k] = x;
            m[n + k] = z;
            w *= v;
        }
        std::vector<double> img = state.map().pushforward_lattice(m);
        size_t o = 0, place = 1;
        for (int mode : spec.modes) {
            o += place * (size_t)bin_index(p, spec.bins, img[mode] * p.ell);
            place *= spec.bins;
        }
        out[o] += w;
        int k = 0;
        while (k < n && ++pos[k] == support[k].size()) {
            pos[k++] = 0;
        }
        if (k == n) {
            break;
        }
    }
    return out;
}

std::vector<double> quadrature_probabilities(const WignerState &state, const MeasurementSpec &spec,
                                             double abs_tol) {
    const CodeParams &p = state.params();
    if (p.n != 1 || state.all_ideal()) {
        throw Error(ErrorKind::kInvalidArgument, "quadrature probabilities need one realistic mode");
    }
    double len = p.torus_length();
    std::vector<double> out(spec.outcome_count(), 0.0);
    if (spec.modes.empty()) {
        out[0] = 1;
        return out;
    }
    ThetaFourierSeries series = evolved_series(state);
    GridIntegrand w = [&](const std::vector<double> &xs, const std::vector<double> &zs) {
        return series_grid(series, p, xs, zs);
    };
    double width = len / spec.bins;
    for (int b = 0; b < spec.bins; b++) {
        int cells = std::max(4, 32 / spec.bins);
        out[b] = integrate_rectangle(w, b * width, (b + 1) * width, 0, len, {abs_tol / spec.bins, cells}).value;
    }
    return out;
}

}  // namespace zgsim
