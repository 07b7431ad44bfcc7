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

#include "zgsim/siegel_theta.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zgsim/errors.h"

namespace zgsim {

namespace {

constexpr double kPi = std::numbers::pi;

// Upper bound on sum_{t : pi q(t-c) > L} exp(-pi q(t-c)). Lattice points with
// q <= r^2 number at most vol(Y-ball of radius r + delta), where delta is the
// Y-norm half-diagonal of a unit cube.
double log_tail_bound(double L, int m, double log_det_y, double lambda_max) {
    double delta = std::sqrt(m * lambda_max) / 2;
    double log_vm = (m / 2.0) * std::log(kPi) - std::lgamma(m / 2.0 + 1);
    double total = 0;
    for (int k = 0; k < 4000; k++) {
        double r = std::sqrt((L + k + 1) / kPi);
        double log_count = log_vm + m * std::log(r + delta) - log_det_y / 2;
        double term = std::exp(log_count - k);
        total += term;
        if (k > 10 && term < 1e-6 * total) {
            break;
        }
    }
    return std::log(total) - L;
}

struct Enumerator {
    const Eigen::MatrixXd &r;
    const Eigen::VectorXd &c;
    const std::function<void(const std::vector<int> &)> &visit;
    std::vector<int> t;
    int m;

    void level(int i, double budget) {
        double s = 0;
        for (int j = i + 1; j < m; j++) {
            s += r(i, j) * (t[j] - c[j]);
        }
        double rii = r(i, i);
        double mid = c[i] - s / rii;
        double half = std::sqrt(std::max(budget, 0.0)) / rii;
        int lo = (int)std::ceil(mid - half - 1e-12);
        int hi = (int)std::floor(mid + half + 1e-12);
        for (int v = lo; v <= hi; v++) {
            double e = rii * (v - c[i]) + s;
            double rest = budget - e * e;
            if (rest < -1e-12 * (1 + budget)) {
                continue;
            }
            t[i] = v;
            if (i == 0) {
                visit(t);
            } else {
                level(i - 1, rest);
            }
        }
    }
};

Cx term_exponent(const SiegelForm &form, const std::vector<int> &t, const Eigen::VectorXcd &z, double log_scale) {
    int m = form.m();
    Cx quad = 0;
    for (int a = 0; a < m; a++) {
        if (t[a] == 0) {
            continue;
        }
        Cx row = 0;
        for (int b = 0; b < m; b++) {
            row += form.gamma()(a, b) * (double)t[b];
        }
        quad += (double)t[a] * row;
    }
    Cx lin = 0;
    for (int a = 0; a < m; a++) {
        lin += (double)t[a] * z[a];
    }
    return Cx(0, kPi) * quad + Cx(0, 2 * kPi) * lin + log_scale;
}

}  // namespace

SiegelForm SiegelForm::make(const Eigen::MatrixXcd &gamma) {
    if (gamma.rows() != gamma.cols() || gamma.rows() == 0) {
        throw Error(ErrorKind::kInvalidArgument, "Siegel form must be square");
    }
    double scale = std::max(1.0, gamma.cwiseAbs().maxCoeff());
    if ((gamma - gamma.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw Error(ErrorKind::kInvalidArgument, "Siegel form must be symmetric");
    }
    SiegelForm f;
    f.gamma_ = (gamma + gamma.transpose()) / 2.0;
    f.im_ = f.gamma_.imag();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f.im_);
    f.lambda_min_ = es.eigenvalues().minCoeff();
    f.lambda_max_ = es.eigenvalues().maxCoeff();
    if (!(f.lambda_min_ > 0)) {
        throw Error(ErrorKind::kNotPositiveDefinite,
                    "imaginary part has smallest eigenvalue " + std::to_string(f.lambda_min_));
    }
    return f;
}

void enumerate_ellipsoid(const Eigen::MatrixXd &y, const Eigen::VectorXd &center, double bound,
                         const std::function<void(const std::vector<int> &)> &visit) {
    Eigen::LLT<Eigen::MatrixXd> llt(y);
    if (llt.info() != Eigen::Success) {
        throw Error(ErrorKind::kNotPositiveDefinite, "Cholesky factorization failed");
    }
    Eigen::MatrixXd r = llt.matrixU();
    int m = (int)y.rows();
    Enumerator e{r, center, visit, std::vector<int>(m, 0), m};
    e.level(m - 1, bound);
}

ThetaTruncation plan_truncation(const SiegelForm &form, const Eigen::VectorXd &im_z, double log_scale, double tol,
                                int radius_cap) {
    if (!(tol > 0)) {
        throw Error(ErrorKind::kInvalidArgument, "tolerance must be positive");
    }
    const Eigen::MatrixXd &y = form.im();
    Eigen::LLT<Eigen::MatrixXd> llt(y);
    ThetaTruncation plan;
    plan.center = -llt.solve(im_z);
    double log_det = 2 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    double log_peak = log_scale + kPi * plan.center.dot(y * plan.center);
    double target = std::log(tol);
    double L = std::max(0.0, log_peak - target);
    while (log_peak + log_tail_bound(L, form.m(), log_det, form.lambda_max()) > target) {
        L += 0.25;
    }
    plan.exponent_bound = L;
    Eigen::MatrixXd yinv = llt.solve(Eigen::MatrixXd::Identity(y.rows(), y.cols()));
    double radius = 0;
    for (int i = 0; i < form.m(); i++) {
        double off = std::abs(plan.center[i] - std::round(plan.center[i]));
        radius = std::max(radius, off + std::sqrt(L / kPi * yinv(i, i)));
    }
    plan.radius = (int)std::ceil(radius);
    if (plan.radius > radius_cap) {
        throw Error(ErrorKind::kTruncationOverflow, "theta truncation radius " + std::to_string(plan.radius) +
                                                        " exceeds cap " + std::to_string(radius_cap));
    }
    return plan;
}

ThetaValue siegel_theta(const SiegelForm &form, const Eigen::VectorXcd &z, double tol, double log_scale,
                        int radius_cap) {
    if (z.size() != form.m()) {
        throw Error(ErrorKind::kInvalidArgument, "z has wrong length");
    }
    ThetaTruncation plan = plan_truncation(form, z.imag(), log_scale, tol, radius_cap);
    ThetaValue out;
    out.radius = plan.radius;
    enumerate_ellipsoid(form.im(), plan.center, plan.exponent_bound / kPi, [&](const std::vector<int> &t) {
        out.value += std::exp(term_exponent(form, t, z, log_scale));
        out.terms++;
    });
    return out;
}

ThetaFourierSeries::ThetaFourierSeries(int t0_radius, int t1_radius)
    : r0_(t0_radius), r1_(t1_radius), coeff_(Eigen::MatrixXcd::Zero(2 * t0_radius + 1, 2 * t1_radius + 1)) {
}

void ThetaFourierSeries::add_theta(const SiegelForm &form, const Eigen::VectorXcd &z, Cx coefficient,
                                   double log_scale, double tol, int radius_cap) {
    if (form.m() < 2 || z.size() != form.m()) {
        throw Error(ErrorKind::kInvalidArgument, "theta series needs m >= 2 and matching z");
    }
    if (coefficient == Cx(0)) {
        return;
    }
    double log_c = std::log(std::abs(coefficient));
    Cx unit = coefficient / std::abs(coefficient);
    ThetaTruncation plan = plan_truncation(form, z.imag(), log_scale + log_c, tol, radius_cap);
    max_radius_ = std::max(max_radius_, plan.radius);
    std::vector<std::pair<std::vector<int>, Cx>> found;
    int need0 = r0_, need1 = r1_;
    enumerate_ellipsoid(form.im(), plan.center, plan.exponent_bound / kPi, [&](const std::vector<int> &t) {
        found.emplace_back(t, unit * std::exp(term_exponent(form, t, z, log_scale + log_c)));
        need0 = std::max(need0, std::abs(t[0]));
        need1 = std::max(need1, std::abs(t[1]));
    });
    grow(need0, need1);
    for (const auto &[t, v] : found) {
        coeff_(t[0] + r0_, t[1] + r1_) += v;
    }
    terms_ += found.size();
}

void ThetaFourierSeries::grow(int r0, int r1) {
    if (r0 <= r0_ && r1 <= r1_) {
        return;
    }
    r0 = std::max(r0, r0_);
    r1 = std::max(r1, r1_);
    Eigen::MatrixXcd grown = Eigen::MatrixXcd::Zero(2 * r0 + 1, 2 * r1 + 1);
    grown.block(r0 - r0_, r1 - r1_, coeff_.rows(), coeff_.cols()) = coeff_;
    coeff_ = std::move(grown);
    r0_ = r0;
    r1_ = r1;
}

void ThetaFourierSeries::add_term(int t0, int t1, Cx v) {
    grow(std::abs(t0), std::abs(t1));
    coeff_(t0 + r0_, t1 + r1_) += v;
    terms_++;
    max_radius_ = std::max({max_radius_, std::abs(t0), std::abs(t1)});
}

Cx ThetaFourierSeries::coefficient(int t0, int t1) const {
    if (std::abs(t0) > r0_ || std::abs(t1) > r1_) {
        return 0;
    }
    return coeff_(t0 + r0_, t1 + r1_);
}

Cx ThetaFourierSeries::evaluate(double s0, double s1) const {
    Eigen::MatrixXcd g = evaluate_grid({s0}, {s1});
    return g(0, 0);
}

Eigen::MatrixXcd ThetaFourierSeries::evaluate_grid(const std::vector<double> &s0s, const std::vector<double> &s1s) const {
    Eigen::MatrixXcd e0(s0s.size(), 2 * r0_ + 1);
    for (size_t i = 0; i < s0s.size(); i++) {
        for (int t = -r0_; t <= r0_; t++) {
            e0(i, t + r0_) = std::polar(1.0, 2 * kPi * t * s0s[i]);
        }
    }
    Eigen::MatrixXcd e1(2 * r1_ + 1, s1s.size());
    for (int t = -r1_; t <= r1_; t++) {
        for (size_t j = 0; j < s1s.size(); j++) {
            e1(t + r1_, j) = std::polar(1.0, 2 * kPi * t * s1s[j]);
        }
    }
    return e0 * (coeff_ * e1);
}

double ThetaFourierSeries::weighted_abs_sum_t0() const {
    double s = 0;
    for (int a = 0; a < coeff_.rows(); a++) {
        for (int b = 0; b < coeff_.cols(); b++) {
            s += std::abs(coeff_(a, b)) * std::abs(a - r0_);
        }
    }
    return s;
}

double ThetaFourierSeries::weighted_abs_sum_t1() const {
    double s = 0;
    for (int a = 0; a < coeff_.rows(); a++) {
        for (int b = 0; b < coeff_.cols(); b++) {
            s += std::abs(coeff_(a, b)) * std::abs(b - r1_);
        }
    }
    return s;
}

}  // namespace zgsim
