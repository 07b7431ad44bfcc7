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

#ifndef ZGSIM_SIEGEL_THETA_H
#define ZGSIM_SIEGEL_THETA_H

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <vector>

#include "zgsim/code_params.h"

namespace zgsim {

constexpr int kThetaRadiusCap = 200;

/// Complex symmetric m x m matrix with positive definite imaginary part.
class SiegelForm {
   public:
    /// Throws InvalidArgument if not symmetric (1e-12), NotPositiveDefinite otherwise.
    static SiegelForm make(const Eigen::MatrixXcd &gamma);

    const Eigen::MatrixXcd &gamma() const {
        return gamma_;
    }
    int m() const {
        return (int)gamma_.rows();
    }
    const Eigen::MatrixXd &im() const {
        return im_;
    }
    double lambda_min() const {
        return lambda_min_;
    }
    double lambda_max() const {
        return lambda_max_;
    }

   private:
    Eigen::MatrixXcd gamma_;
    Eigen::MatrixXd im_;
    double lambda_min_ = 0;
    double lambda_max_ = 0;
};

/// Calls `visit` for every integer t with (t - c)^T Y (t - c) <= bound, in a fixed
/// order (last coordinate outermost, each ascending). Y must be positive definite.
void enumerate_ellipsoid(const Eigen::MatrixXd &y, const Eigen::VectorXd &center, double bound,
                         const std::function<void(const std::vector<int> &)> &visit);

/// Truncation plan for sum_t exp(log_scale + i pi t^T G t + 2 pi i t^T z): every
/// term outside {pi (t-c)^T Y (t-c) <= exponent_bound} is dropped and the dropped
/// mass is at most `tol`.
struct ThetaTruncation {
    Eigen::VectorXd center;
    double exponent_bound = 0;
    /// Half-width of the integer box around round(center) containing the ellipsoid.
    int radius = 0;
};
ThetaTruncation plan_truncation(const SiegelForm &form, const Eigen::VectorXd &im_z, double log_scale, double tol,
                                int radius_cap = kThetaRadiusCap);

struct ThetaValue {
    Cx value;
    int radius = 0;
    size_t terms = 0;
};

/// exp(log_scale) * theta(G, z), with absolute truncation error at most tol.
ThetaValue siegel_theta(const SiegelForm &form, const Eigen::VectorXcd &z, double tol, double log_scale = 0,
                        int radius_cap = kThetaRadiusCap);

/// Theta sums as trigonometric polynomials in the real parts of z_0 and z_1:
///
///     value(s0, s1) = sum_{t0,t1} coeff(t0, t1) exp(2 pi i (t0 s0 + t1 s1))
///
/// so that value(s0, s1) is the theta sum at z + (s0, s1, 0, ...). The truncation
/// set does not depend on real shifts, so the error bound holds for every (s0, s1).
class ThetaFourierSeries {
   public:
    ThetaFourierSeries() = default;
    ThetaFourierSeries(int t0_radius, int t1_radius);

    /// Adds exp(log_scale) * coefficient * theta(G, z) with absolute error at most tol.
    void add_theta(const SiegelForm &form, const Eigen::VectorXcd &z, Cx coefficient, double log_scale, double tol,
                   int radius_cap = kThetaRadiusCap);

    /// Adds v to coeff(t0, t1).
    void add_term(int t0, int t1, Cx v);
    Cx evaluate(double s0, double s1) const;
    /// Values on the tensor grid s0 in s0s (rows) x s1 in s1s (cols).
    Eigen::MatrixXcd evaluate_grid(const std::vector<double> &s0s, const std::vector<double> &s1s) const;

    Cx coefficient(int t0, int t1) const;
    int t0_radius() const {
        return r0_;
    }
    int t1_radius() const {
        return r1_;
    }
    /// sum |coeff| |t0| and sum |coeff| |t1|.
    double weighted_abs_sum_t0() const;
    double weighted_abs_sum_t1() const;
    size_t terms() const {
        return terms_;
    }
    int max_radius() const {
        return max_radius_;
    }

   private:
    void grow(int r0, int r1);

    int r0_ = 0;
    int r1_ = 0;
    Eigen::MatrixXcd coeff_ = Eigen::MatrixXcd::Zero(1, 1);  // (t0 + r0, t1 + r1)
    size_t terms_ = 0;
    int max_radius_ = 0;
};

}  // namespace zgsim

#endif
