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

#ifndef ZGSIM_GAUSSIAN_ORACLE_H
#define ZGSIM_GAUSSIAN_ORACLE_H

#include <vector>

#include "zgsim/code_params.h"
#include "zgsim/gkp_theta.h"

namespace zgsim {

/// psi(x) = sum_i c_i exp(i kappa_i x) exp(-(x - mu_i)^2 / (2 sigma^2)).
struct GaussianTerm {
    Cx coeff;
    double mu = 0;
    double kappa = 0;
};

struct GaussianSumState {
    double sigma = 1;
    std::vector<GaussianTerm> terms;

    static GaussianSumState vacuum();
    /// Peaks with envelope weight below rel_floor times the largest are dropped.
    static GaussianSumState gkp(const RealisticGkpSpec &spec, double rel_floor = 1e-20);
    /// T_b psi for a continuous shift b in units of ell (position b_X ell, momentum b_Z ell).
    GaussianSumState displaced(double b_x, double b_z, double ell) const;
    double norm_squared() const;
};

/// Normalized single-mode Wigner value from the defining sum over a in
/// [-cutoff, cutoff]^2. Throws CutoffTooSmall when a boundary term exceeds
/// 1e-12 of the absolute sum.
WignerValue direct_wigner(const GaussianSumState &state, int d, double eta_x, double eta_z, int cutoff);

/// The same sum as a Fourier series in (eta_Z, -eta_X) / (d ell), indexed by
/// (a_X, a_Z); evaluates to direct_wigner at every point.
ThetaFourierSeries direct_wigner_series(const GaussianSumState &state, int d, int cutoff);

/// Cutoff large enough that the neglected terms are below double precision.
int default_oracle_cutoff(const RealisticGkpSpec &spec);

WignerValue gkp_wigner_oracle(const RealisticGkpSpec &spec, double eta_x, double eta_z, int cutoff = 0);

}  // namespace zgsim

#endif
