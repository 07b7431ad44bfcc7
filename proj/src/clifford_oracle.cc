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

#include "zgsim/clifford_oracle.h"

#include <cmath>
#include <string>

#include "zgsim/errors.h"

namespace zgsim {

namespace {

size_t stride_of(int mode, int d) {
    size_t s = 1;
    for (int k = 0; k < mode; k++) {
        s *= d;
    }
    return s;
}

// Applies a d x d matrix to mode `mode` of the state.
void apply_single(Eigen::VectorXcd &psi, const Eigen::MatrixXcd &u, int mode, int d) {
    size_t stride = stride_of(mode, d);
    size_t dim = psi.size();
    Eigen::VectorXcd buf(d);
    for (size_t base = 0; base < dim; base++) {
        if ((base / stride) % d != 0) {
            continue;
        }
        for (int j = 0; j < d; j++) {
            buf[j] = psi[base + j * stride];
        }
        Eigen::VectorXcd out = u * buf;
        for (int j = 0; j < d; j++) {
            psi[base + j * stride] = out[j];
        }
    }
}

// psi'[.., a, .., b + sign*a, ..] = psi[.., a, .., b, ..].
void apply_sum(Eigen::VectorXcd &psi, int ctrl, int tgt, int sign, int d) {
    size_t sc = stride_of(ctrl, d), st = stride_of(tgt, d);
    Eigen::VectorXcd out(psi.size());
    for (size_t idx = 0; idx < (size_t)psi.size(); idx++) {
        int a = (int)((idx / sc) % d);
        int b = (int)((idx / st) % d);
        int nb = (int)floor_mod(b + sign * a, d);
        out[idx + (size_t)(nb - b) * st] = psi[idx];
    }
    psi = std::move(out);
}

void apply_cz(Eigen::VectorXcd &psi, const CodeParams &p, int i, int j, int sign) {
    size_t si = stride_of(i, p.d), sj = stride_of(j, p.d);
    for (size_t idx = 0; idx < (size_t)psi.size(); idx++) {
        int64_t a = (int64_t)((idx / si) % p.d);
        int64_t b = (int64_t)((idx / sj) % p.d);
        psi[idx] *= p.omega_pow(sign * a * b);
    }
}

Eigen::MatrixXcd fourier_matrix(const CodeParams &p, int sign) {
    Eigen::MatrixXcd f(p.d, p.d);
    for (int k = 0; k < p.d; k++) {
        for (int j = 0; j < p.d; j++) {
            f(k, j) = p.omega_pow((int64_t)sign * j * k) / std::sqrt((double)p.d);
        }
    }
    return f;
}

Eigen::MatrixXcd phase_matrix(const CodeParams &p, int sign) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p.d, p.d);
    for (int j = 0; j < p.d; j++) {
        m(j, j) = p.omega_pow((int64_t)sign * p.two_inv * j * j);
    }
    return m;
}

Eigen::MatrixXcd shift_clock(const CodeParams &p, int64_t x, int64_t z) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p.d, p.d);
    for (int j = 0; j < p.d; j++) {
        m(floor_mod(j + x, p.d), j) = p.omega_pow(z * j);
    }
    return m;
}

void apply_gate(Eigen::VectorXcd &psi, std::vector<double> &f, const CodeParams &p, const GateTag &g) {
    int n = p.n;
    double &xi = f[g.i];
    double &zi = f[n + g.i];
    switch (g.kind) {
        case GateKind::kFourier: {
            apply_single(psi, fourier_matrix(p, 1), g.i, p.d);
            double x = xi;
            xi = -zi;
            zi = x;
            break;
        }
        case GateKind::kFourierInv: {
            apply_single(psi, fourier_matrix(p, -1), g.i, p.d);
            double x = xi;
            xi = zi;
            zi = -x;
            break;
        }
        case GateKind::kPhase:
            apply_single(psi, phase_matrix(p, 1), g.i, p.d);
            zi += xi + p.d / 2.0;
            break;
        case GateKind::kPhaseInv:
            apply_single(psi, phase_matrix(p, -1), g.i, p.d);
            zi -= xi + p.d / 2.0;
            break;
        case GateKind::kSum:
            apply_sum(psi, g.i, g.j, 1, p.d);
            f[g.j] += f[g.i];
            f[n + g.i] -= f[n + g.j];
            break;
        case GateKind::kSumInv:
            apply_sum(psi, g.i, g.j, -1, p.d);
            f[g.j] -= f[g.i];
            f[n + g.i] += f[n + g.j];
            break;
        case GateKind::kCz:
            apply_cz(psi, p, g.i, g.j, 1);
            f[n + g.i] += f[g.j];
            f[n + g.j] += f[g.i];
            break;
        case GateKind::kCzInv:
            apply_cz(psi, p, g.i, g.j, -1);
            f[n + g.i] -= f[g.j];
            f[n + g.j] -= f[g.i];
            break;
    }
}

}  // namespace

OracleOp OracleOp::pauli_x(int i, int n) {
    std::vector<double> c(2 * n, 0.0);
    c[i] = 1;
    return displace(std::move(c));
}

OracleOp OracleOp::pauli_z(int i, int n) {
    std::vector<double> c(2 * n, 0.0);
    c[n + i] = 1;
    return displace(std::move(c));
}

DenseOperator qudit_gate_unitary(const CodeParams &params, const GateTag &tag) {
    size_t dim = dense_dim(params);
    gate_matrix(tag, params.n);
    DenseOperator u{params, Eigen::MatrixXcd::Zero(dim, dim)};
    std::vector<double> frame(2 * params.n, 0.0);
    for (size_t j = 0; j < dim; j++) {
        Eigen::VectorXcd col = Eigen::VectorXcd::Zero(dim);
        col[j] = 1;
        apply_gate(col, frame, params, tag);
        u.m.col(j) = col;
    }
    return u;
}

Eigen::VectorXcd basis_ket(int d, int j) {
    Eigen::VectorXcd k = Eigen::VectorXcd::Zero(d);
    k[floor_mod(j, d)] = 1;
    return k;
}

OracleResult run_clifford_oracle(const CodeParams &params, const std::vector<Eigen::VectorXcd> &kets,
                                 const std::vector<OracleOp> &ops, const std::vector<int> &measured_modes,
                                 size_t cap) {
    dense_dim(params, cap);
    if ((int)kets.size() != params.n) {
        throw Error(ErrorKind::kInvalidArgument, "need one input ket per mode");
    }
    for (const auto &k : kets) {
        if (k.size() != params.d || k.norm() == 0) {
            throw Error(ErrorKind::kInvalidArgument, "input ket must be a non-zero length-d vector");
        }
    }
    std::vector<Eigen::VectorXcd> normed;
    for (const auto &k : kets) {
        normed.push_back(k / k.norm());
    }
    Eigen::VectorXcd psi = product_ket(normed);
    std::vector<double> f(2 * params.n, 0.0);

    for (const auto &op : ops) {
        if (op.kind == OracleOp::Kind::kGate) {
            gate_matrix(op.gate, params.n);  // validates mode indices
            apply_gate(psi, f, params, op.gate);
            continue;
        }
        if ((int)op.c.size() != 2 * params.n) {
            throw Error(ErrorKind::kInvalidArgument, "displacement has wrong length");
        }
        // Integer part acts as a qudit Pauli, the remainder stays in the frame.
        for (int k = 0; k < params.n; k++) {
            double rx = std::round(op.c[k]);
            double rz = std::round(op.c[params.n + k]);
            apply_single(psi, shift_clock(params, (int64_t)rx, (int64_t)rz), k, params.d);
            f[k] += op.c[k] - rx;
            f[params.n + k] += op.c[params.n + k] - rz;
        }
    }

    for (int m : measured_modes) {
        if (m < 0 || m >= params.n) {
            throw Error(ErrorKind::kInvalidArgument, "measured mode out of range");
        }
    }
    size_t out_size = stride_of((int)measured_modes.size(), params.d);
    std::vector<double> probs(out_size, 0.0);
    for (size_t idx = 0; idx < (size_t)psi.size(); idx++) {
        size_t o = 0, place = 1;
        for (int m : measured_modes) {
            o += place * (size_t)basis_digit(idx, m, params.d);
            place *= params.d;
        }
        probs[o] += std::norm(psi[idx]);
    }
    return {params, measured_modes, probs, f};
}

std::vector<double> clifford_oracle_probabilities(const CodeParams &params,
                                                  const std::vector<Eigen::VectorXcd> &kets,
                                                  const std::vector<OracleOp> &ops,
                                                  const std::vector<int> &measured_modes) {
    return run_clifford_oracle(params, kets, ops, measured_modes).logical_probs;
}

std::vector<double> oracle_bin_probabilities(const OracleResult &result, int bins) {
    if (bins < 1) {
        throw Error(ErrorKind::kInvalidArgument, "bin count must be positive");
    }
    int d = result.params.d;
    int m = (int)result.measured_modes.size();
    size_t out_size = 1;
    for (int k = 0; k < m; k++) {
        out_size *= bins;
    }
    std::vector<double> out(out_size, 0.0);
    for (size_t idx = 0; idx < result.logical_probs.size(); idx++) {
        size_t o = 0, place = 1;
        for (int k = 0; k < m; k++) {
            int j = basis_digit(idx, k, d);
            double y = wrap_torus_snapped(j + result.frame[result.measured_modes[k]], d, 1.0, 1e-9);
            double u = bins * y / d;
            double r = std::round(u);
            if (std::abs(u - r) < 1e-9) {
                u = r;
            }
            o += place * (size_t)floor_mod((int64_t)std::floor(u), bins);
            place *= bins;
        }
        out[o] += result.logical_probs[idx];
    }
    return out;
}

}  // namespace zgsim
