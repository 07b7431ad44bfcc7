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

#ifndef ZGSIM_QUADRATURE_H
#define ZGSIM_QUADRATURE_H

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <vector>

namespace zgsim {

/// Integrand evaluated on a tensor grid: result(i, j) = f(xs[i], zs[j]).
using GridIntegrand = std::function<Eigen::MatrixXd(const std::vector<double> &xs, const std::vector<double> &zs)>;

struct QuadratureOptions {
    /// Target absolute error over the whole rectangle.
    double abs_tol = 1e-9;
    /// Initial cells per side.
    int base_cells = 32;
    /// Refinement stops (unconverged) once this many leaf cells exist.
    size_t max_cells = 1 << 20;
};

struct QuadratureResult {
    double value = 0;
    /// Sum of |children - parent| over the leaf cells.
    double error_estimate = 0;
    size_t cells = 0;
    size_t evaluations = 0;
    /// False when max_cells was reached first.
    bool converged = true;
};

/// Globally adaptive tensor Gauss-Legendre (8 points per side) over
/// [x0,x1] x [z0,z1]. Each leaf carries the sum of its four children and the
/// error estimate |children - parent|; the worst leaf is split until the total
/// estimate drops below abs_tol.
QuadratureResult integrate_rectangle(const GridIntegrand &f, double x0, double x1, double z0, double z1,
                                     const QuadratureOptions &options = {});

}  // namespace zgsim

#endif
