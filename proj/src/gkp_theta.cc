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

#include "zgsim/gkp_theta.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "zgsim/errors.h"

namespace zgsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Cx kI{0, 1};

// Envelope-weighted peaks (c_j w_jk, mu_jk) above a relative floor.
std::vector<std::pair<double, double>> peaks(const RealisticGkpSpec &spec, const CodeParams &p) {
    std::vector<double> c = spec.coeffs;
    double cmax = 0;
    for (double v : c) {
        cmax = std::max(cmax, std::abs(v));
    }
    std::vector<std::pair<double, double>> out;
    double d2 = spec.delta * spec.delta;
    for (int j = 0; j < spec.d; j++) {
        if (c[j] == 0) {
            continue;
        }
        for (int k = 0;; k++) {
            bool any = false;
            for (int sign : {1, -1}) {
                if (k == 0 && sign < 0) {
                    break;
                }
                int kk = sign * k;
                double mu = (j + spec.d * kk) * p.ell;
                double w = std::exp(-0.5 * d2 * mu * mu);
                if (w * std::abs(c[j]) >= 1e-20 * cmax) {
                    out.emplace_back(c[j] * w, mu);
                    any = true;
                }
            }
            if (!any && k > 0) {
                break;
            }
        }
    }
    return out;
}

}  // namespace

RealisticGkpSpec RealisticGkpSpec::logical_state(int d, double delta, int j) {
    RealisticGkpSpec s;
    s.d = d;
    s.delta = delta;
    s.kind = Kind::kLogical;
    s.logical = j;
    s.coeffs.assign(d, 0.0);
    if (j >= 0 && j < d) {
        s.coeffs[j] = 1;
    }
    s.validate();
    return s;
}

RealisticGkpSpec RealisticGkpSpec::phase_state(double delta) {
    RealisticGkpSpec s;
    s.d = 3;
    s.delta = delta;
    s.kind = Kind::kPhaseState;
    double a = 1 / std::sqrt(3.0);
    s.coeffs = {a, a, -a};
    s.validate();
    return s;
}

RealisticGkpSpec RealisticGkpSpec::superposition(int d, double delta, std::vector<double> coeffs) {
    RealisticGkpSpec s;
    s.d = d;
    s.delta = delta;
    s.kind = Kind::kSuperposition;
    s.coeffs = std::move(coeffs);
    s.validate();
    return s;
}

void RealisticGkpSpec::validate() const {
    if (d < 3 || d % 2 == 0) {
        throw Error(ErrorKind::kInvalidArgument, "d must be odd and >= 3");
    }
    if (!(delta > 0) || !std::isfinite(delta)) {
        throw Error(ErrorKind::kInvalidArgument, "delta must be positive");
    }
    if ((int)coeffs.size() != d) {
        throw Error(ErrorKind::kInvalidArgument, "need d amplitudes");
    }
    double norm = 0;
    for (double c : coeffs) {
        norm += c * c;
    }
    if (!(norm > 0)) {
        throw Error(ErrorKind::kInvalidArgument, "amplitudes must not all vanish");
    }
    if (kind == Kind::kLogical && (logical < 0 || logical >= d)) {
        throw Error(ErrorKind::kInvalidArgument, "logical index out of range");
    }
    if (kind == Kind::kPhaseState && d != 3) {
        throw Error(ErrorKind::kInvalidArgument, "the phase state is defined for d = 3");
    }
}

std::string RealisticGkpSpec::label() const {
    std::ostringstream s;
    switch (kind) {
        case Kind::kLogical:
            s << "logical_" << logical;
            break;
        case Kind::kPhaseState:
            s << "phase_state";
            break;
        case Kind::kSuperposition:
            s << "superposition";
            break;
    }
    s << "(d=" << d << ",delta=" << delta << ")";
    return s.str();
}

ThetaForm gamma_zero_logical(const RealisticGkpSpec &spec) {
    spec.validate();
    double d = spec.d, d2 = spec.delta * spec.delta;
    Eigen::Matrix4cd g;
    g << kI / (d * d2), 1.0, -kI / d2, kI / d2,                   //
        1.0, kI * d2 / d, 1.0, 1.0,                               //
        -kI / d2, 1.0, kI * d * (1 + 2 * d2 * d2) / d2, -kI * d / d2,  //
        kI / d2, 1.0, -kI * d / d2, kI * d * (1 + 2 * d2 * d2) / d2;
    g /= 2.0;
    CodeParams p = CodeParams::make(spec.d, 1);
    ZMap z{Eigen::VectorXcd::Zero(4), Eigen::VectorXcd::Zero(4), Eigen::VectorXcd::Zero(4)};
    z.per_eta_z[0] = 1 / p.torus_length();
    z.per_eta_x[1] = -1 / p.torus_length();
    return {SiegelForm::make(g), z};
}

ThetaCrossTerm gamma_general(const RealisticGkpSpec &spec, int j, int jp) {
    spec.validate();
    if (j < 0 || j >= spec.d || jp < 0 || jp >= spec.d) {
        throw Error(ErrorKind::kInvalidArgument, "logical indices out of range");
    }
    double d = spec.d, d2 = spec.delta * spec.delta;
    CodeParams p = CodeParams::make(spec.d, 1);
    // Quadratic part of the exponent in (a_X, a_Z, k, k'); identical for all (j, j').
    Eigen::Matrix4cd g;
    g << kI / (d * d2), 1.0, kI / d2, -kI / d2,                   //
        1.0, kI * d2 / d, 1.0, 1.0,                               //
        kI / d2, 1.0, kI * d * (1 + 2 * d2 * d2) / d2, -kI * d / d2,  //
        -kI / d2, 1.0, -kI * d / d2, kI * d * (1 + 2 * d2 * d2) / d2;
    g /= 2.0;
    double diff = j - jp;
    ZMap z{Eigen::VectorXcd::Zero(4), Eigen::VectorXcd::Zero(4), Eigen::VectorXcd::Zero(4)};
    z.offset[0] = kI * diff / (2 * d * d2);
    z.offset[1] = (j + jp) / (2 * d);
    z.offset[2] = kI * (d2 * j + diff / (2 * d2));
    z.offset[3] = kI * (d2 * jp - diff / (2 * d2));
    z.per_eta_z[0] = 1 / p.torus_length();
    z.per_eta_x[1] = -1 / p.torus_length();
    double l2 = p.ell * p.ell;
    double log_pref = -0.5 * d2 * l2 * (j * j + jp * jp) - l2 * diff * diff / (4 * d2);
    return {SiegelForm::make(g), z, log_pref};
}

double gkp_norm_squared(const RealisticGkpSpec &spec) {
    spec.validate();
    CodeParams p = CodeParams::make(spec.d, 1);
    auto pk = peaks(spec, p);
    double s = 0;
    double d2 = spec.delta * spec.delta;
    for (const auto &[ci, mi] : pk) {
        for (const auto &[cj, mj] : pk) {
            double g = std::exp(-(mi - mj) * (mi - mj) / (4 * d2));
            if (g > 0) {
                s += ci * cj * g;
            }
        }
    }
    return s * std::sqrt(kPi) * spec.delta;
}

GkpThetaWigner GkpThetaWigner::build(const RealisticGkpSpec &spec, double tol) {
    spec.validate();
    GkpThetaWigner w;
    w.spec_ = spec;
    w.params_ = CodeParams::make(spec.d, 1);
    w.tol_ = tol;
    w.normalization_ = std::sqrt(kPi) * spec.delta / (2 * kPi) / (gkp_norm_squared(spec) * spec.d);
    int pairs = 0;
    for (int j = 0; j < spec.d; j++) {
        for (int jp = 0; jp < spec.d; jp++) {
            pairs += spec.coeffs[j] != 0 && spec.coeffs[jp] != 0;
        }
    }
    for (int j = 0; j < spec.d; j++) {
        for (int jp = 0; jp < spec.d; jp++) {
            double c = spec.coeffs[j] * spec.coeffs[jp];
            if (c == 0) {
                continue;
            }
            ThetaCrossTerm term = gamma_general(spec, j, jp);
            w.series_.add_theta(term.form, term.z.offset, c, term.log_prefactor + std::log(w.normalization_),
                                tol / pairs);
        }
    }
    return w;
}

WignerValue GkpThetaWigner::evaluate(double eta_x, double eta_z) const {
    double len = params_.torus_length();
    Cx v = series_.evaluate(eta_z / len, -eta_x / len);
    return {v.real(), std::abs(v.imag())};
}

Eigen::MatrixXcd GkpThetaWigner::evaluate_grid(const std::vector<double> &eta_xs,
                                               const std::vector<double> &eta_zs) const {
    double len = params_.torus_length();
    std::vector<double> s0, s1;
    for (double z : eta_zs) {
        s0.push_back(z / len);
    }
    for (double x : eta_xs) {
        s1.push_back(-x / len);
    }
    // Series rows follow s0 (eta_Z); transpose to put eta_X on rows.
    return series_.evaluate_grid(s0, s1).transpose();
}

double GkpThetaWigner::lipschitz_x() const {
    return 2 * kPi / params_.torus_length() * series_.weighted_abs_sum_t1();
}

double GkpThetaWigner::lipschitz_z() const {
    return 2 * kPi / params_.torus_length() * series_.weighted_abs_sum_t0();
}

double GkpThetaWigner::integral() const {
    double len = params_.torus_length();
    return series_.coefficient(0, 0).real() * len * len;
}

}  // namespace zgsim
