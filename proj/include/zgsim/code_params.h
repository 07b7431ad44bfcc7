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

#ifndef ZGSIM_CODE_PARAMS_H
#define ZGSIM_CODE_PARAMS_H

#include <complex>
#include <cstdint>
#include <vector>

namespace zgsim {

using Cx = std::complex<double>;

/// Odd qudit dimension, mode count and the derived lattice constants.
struct CodeParams {
    int d = 3;
    int n = 1;
    double ell = 0;
    Cx omega;
    int two_inv = 2;

    /// Validates d (odd, >= 3) and n (>= 1).
    static CodeParams make(int d, int n);

    /// Period of every torus coordinate, d*ell.
    double torus_length() const {
        return d * ell;
    }
    /// omega^k for any integer k.
    Cx omega_pow(int64_t k) const;
};

/// Integer exponent vector over Z_d, laid out as (x_0..x_{n-1}, z_0..z_{n-1}).
struct QuditVec {
    std::vector<int> comp;

    QuditVec() = default;
    explicit QuditVec(std::vector<int> c) : comp(std::move(c)) {
    }
    static QuditVec zeros(int n) {
        return QuditVec(std::vector<int>(2 * n, 0));
    }
    int n() const {
        return (int)comp.size() / 2;
    }
    int &x(int k) {
        return comp[k];
    }
    int &z(int k) {
        return comp[n() + k];
    }
    int x(int k) const {
        return comp[k];
    }
    int z(int k) const {
        return comp[n() + k];
    }
    bool operator==(const QuditVec &) const = default;
};

/// Point of the phase-space torus [0, d*ell)^{2n}, block order (eta_X; eta_Z).
struct PhasePoint {
    std::vector<double> eta;

    PhasePoint() = default;
    explicit PhasePoint(std::vector<double> e) : eta(std::move(e)) {
    }
    int n() const {
        return (int)eta.size() / 2;
    }
    double x(int k) const {
        return eta[k];
    }
    double z(int k) const {
        return eta[n() + k];
    }
};

/// Non-negative remainder of a modulo m (m > 0).
inline int64_t floor_mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Reduces x into [0, period).
double wrap_torus(double x, double period);

/// Reduces x into [0, period) and snaps it onto the nearest multiple of `step`
/// when within `snap * step`.
double wrap_torus_snapped(double x, double period, double step, double snap);

}  // namespace zgsim

#endif
