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

#include "zgsim/gaussian_oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "zgsim/errors.h"

namespace zgsim {

namespace {

constexpr double kPi = std::numbers::pi;
// exp(-kPrune) is far below the relative precision of any sum we form.
constexpr double kPrune = 46.0;
constexpr double kBoundaryRel = 1e-12;

}  // namespace

GaussianSumState GaussianSumState::vacuum() {
    return {1.0, {{Cx(1), 0, 0}}};
}

GaussianSumState GaussianSumState::gkp(const RealisticGkpSpec &spec, double rel_floor) {
    spec.validate();
    CodeParams p = CodeParams::make(spec.d, 1);
    double d2 = spec.delta * spec.delta;
    double cmax = 0;
    for (double c : spec.coeffs) {
        cmax = std::max(cmax, std::abs(c));
    }
    GaussianSumState s;
    s.sigma = spec.delta;
    for (int j = 0; j < spec.d; j++) {
        if (spec.coeffs[j] == 0) {
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
                if (w * std::abs(spec.coeffs[j]) >= rel_floor * cmax) {
                    s.terms.push_back({Cx(spec.coeffs[j] * w), mu, 0});
                    any = true;
                }
            }
            if (!any) {
                break;
            }
        }
    }
    return s;
}

GaussianSumState GaussianSumState::displaced(double b_x, double b_z, double ell) const {
    // Shift x by b_X ell, then kick momentum by b_Z ell; the ordering only changes a
    // global phase, which drops out of W.
    GaussianSumState s = *this;
    for (GaussianTerm &t : s.terms) {
        t.coeff *= std::polar(1.0, -t.kappa * b_x * ell);
        t.mu += b_x * ell;
        t.kappa += b_z * ell;
    }
    return s;
}

double GaussianSumState::norm_squared() const {
    double s2 = sigma * sigma;
    Cx total = 0;
    for (const auto &a : terms) {
        for (const auto &b : terms) {
            double dm = a.mu - b.mu, dk = a.kappa - b.kappa;
            double re = -dm * dm / (4 * s2) - dk * dk * s2 / 4;
            if (re < -kPrune) {
                continue;
            }
            total += a.coeff * std::conj(b.coeff) * std::exp(Cx(re, dk * (a.mu + b.mu) / 2));
        }
    }
    return total.real() * std::sqrt(kPi) * sigma;
}

namespace {

// Calls visit(a_X, a_Z, term) for every retained term of the defining sum with
// the eta-dependent phase exp(i ell (a_X eta_Z - a_Z eta_X)) stripped off.
// Returns the normalization 1 / (2 pi d |psi|^2).
template <typename Visit>
double for_each_direct_term(const GaussianSumState &state, int d, int cutoff, Visit &&visit) {
    if (cutoff < 1) {
        throw Error(ErrorKind::kInvalidArgument, "cutoff must be positive");
    }
    CodeParams p = CodeParams::make(d, 1);
    const double ell = p.ell;
    const double s2 = state.sigma * state.sigma;
    const double sqrt_pi_sigma = std::sqrt(kPi) * state.sigma;
    const double reach = std::sqrt(4 * s2 * kPrune) / ell;
    const double kreach = std::sqrt(4 * kPrune / s2) / ell;
    double abs_total = 0, boundary = 0;
    for (const auto &ti : state.terms) {
        for (const auto &tj : state.terms) {
            double dm = ti.mu - tj.mu;
            double dk = ti.kappa - tj.kappa;
            Cx cc = ti.coeff * std::conj(tj.coeff) * sqrt_pi_sigma;
            double mag_c = std::abs(cc);
            for (int ax : {-cutoff, cutoff}) {
                double e = dm + ell * ax;
                boundary = std::max(boundary, mag_c * std::exp(-e * e / (4 * s2)));
            }
            // Only a_X near -dm / ell survive the position overlap, a_Z near -dk / ell the momentum one.
            int ax_lo = std::max(-cutoff, (int)std::floor(-dm / ell - reach));
            int ax_hi = std::min(cutoff, (int)std::ceil(-dm / ell + reach));
            int az_lo = std::max(-cutoff, (int)std::floor(-dk / ell - kreach));
            int az_hi = std::min(cutoff, (int)std::ceil(-dk / ell + kreach));
            for (int ax = ax_lo; ax <= ax_hi; ax++) {
                double s = ell * ax;
                double gx = std::exp(-(dm + s) * (dm + s) / (4 * s2));
                if (gx * mag_c == 0) {
                    continue;
                }
                double m = (ti.mu + tj.mu - s) / 2;
                for (int az : {-cutoff, cutoff}) {
                    double kk = dk + ell * az;
                    boundary = std::max(boundary, mag_c * gx * std::exp(-kk * kk * s2 / 4));
                }
                for (int az = az_lo; az <= az_hi; az++) {
                    double kk = dk + ell * az;
                    double ph = kPi * (d + 1) * (double)ax * az / d + kk * m - tj.kappa * s;
                    Cx term = cc * gx * std::exp(Cx(-kk * kk * s2 / 4, ph));
                    abs_total += std::abs(term);
                    visit(ax, az, term);
                }
            }
        }
    }
    if (boundary > kBoundaryRel * abs_total) {
        throw Error(ErrorKind::kCutoffTooSmall, "boundary term " + std::to_string(boundary) +
                                                    " exceeds tolerance at cutoff " + std::to_string(cutoff));
    }
    return 1 / (2 * kPi * state.norm_squared() * d);
}

}  // namespace

WignerValue direct_wigner(const GaussianSumState &state, int d, double eta_x, double eta_z, int cutoff) {
    const double ell = CodeParams::make(d, 1).ell;
    Cx total = 0;
    double norm = for_each_direct_term(state, d, cutoff, [&](int ax, int az, Cx term) {
        total += term * std::polar(1.0, ell * (ax * eta_z - az * eta_x));
    });
    Cx w = total * norm;
    return {w.real(), std::abs(w.imag())};
}

ThetaFourierSeries direct_wigner_series(const GaussianSumState &state, int d, int cutoff) {
    ThetaFourierSeries series;
    std::vector<std::tuple<int, int, Cx>> terms;
    double norm = for_each_direct_term(state, d, cutoff, [&](int ax, int az, Cx term) { terms.emplace_back(ax, az, term); });
    for (const auto &[ax, az, term] : terms) {
        series.add_term(ax, az, term * norm);
    }
    return series;
}

int default_oracle_cutoff(const RealisticGkpSpec &spec) {
    CodeParams p = CodeParams::make(spec.d, 1);
    double d2 = spec.delta * spec.delta;
    // Position reach of the envelope and momentum reach of a single peak.
    double x_reach = std::sqrt(2 * kPrune / d2) / p.ell;
    double z_reach = std::sqrt(4 * kPrune / d2) / p.ell;
    return (int)std::ceil(std::max(2 * x_reach, z_reach)) + 4;
}

WignerValue gkp_wigner_oracle(const RealisticGkpSpec &spec, double eta_x, double eta_z, int cutoff) {
    if (cutoff == 0) {
        cutoff = default_oracle_cutoff(spec);
    }
    return direct_wigner(GaussianSumState::gkp(spec), spec.d, eta_x, eta_z, cutoff);
}

}  // namespace zgsim
