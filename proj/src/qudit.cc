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

#include "zgsim/qudit.h"

#include <cmath>
#include <string>

#include "zgsim/errors.h"

namespace zgsim {

namespace {

constexpr double kDensityTol = 1e-10;

void check_vec(const CodeParams &params, const QuditVec &a) {
    if (a.n() != params.n || (int)a.comp.size() != 2 * params.n) {
        throw Error(ErrorKind::kInvalidArgument, "qudit vector has wrong length");
    }
    for (int c : a.comp) {
        if (c < 0 || c >= params.d) {
            throw Error(ErrorKind::kInvalidArgument, "qudit vector component out of [0, d)");
        }
    }
}

void check_density(const DenseOperator &rho, size_t dim) {
    if ((size_t)rho.m.rows() != dim || (size_t)rho.m.cols() != dim) {
        throw Error(ErrorKind::kInvalidArgument, "density matrix has wrong dimension");
    }
    if ((rho.m - rho.m.adjoint()).cwiseAbs().maxCoeff() > kDensityTol) {
        throw Error(ErrorKind::kInvalidArgument, "density matrix is not Hermitian");
    }
    if (std::abs(rho.m.trace() - Cx(1)) > kDensityTol) {
        throw Error(ErrorKind::kInvalidArgument, "density matrix trace is not 1");
    }
}

}  // namespace

size_t dense_dim(const CodeParams &params, size_t cap) {
    size_t dim = 1;
    for (int k = 0; k < params.n; k++) {
        dim *= (size_t)params.d;
        if (dim > cap) {
            throw Error(
                ErrorKind::kOracleScaleExceeded,
                "d^n exceeds the dense cap of " + std::to_string(cap) + " (d=" + std::to_string(params.d) +
                    ", n=" + std::to_string(params.n) + ")");
        }
    }
    return dim;
}

BasisImage displace_basis(const CodeParams &params, const QuditVec &a, size_t j) {
    int d = params.d;
    int64_t phase_exp = 0;
    size_t out = 0;
    size_t place = 1;
    size_t rest = j;
    for (int k = 0; k < params.n; k++) {
        int64_t digit = (int64_t)(rest % d);
        rest /= d;
        phase_exp += (int64_t)params.two_inv * a.x(k) * a.z(k) + (int64_t)a.z(k) * digit;
        out += place * (size_t)floor_mod(digit + a.x(k), d);
        place *= d;
    }
    return {params.omega_pow(phase_exp), out};
}

DenseOperator pauli_displacement(const CodeParams &params, const QuditVec &a, size_t cap) {
    size_t dim = dense_dim(params, cap);
    check_vec(params, a);
    DenseOperator op{params, Eigen::MatrixXcd::Zero(dim, dim)};
    for (size_t j = 0; j < dim; j++) {
        BasisImage im = displace_basis(params, a, j);
        op.m(im.index, j) = im.phase;
    }
    return op;
}

int64_t symplectic_form(const QuditVec &a, const QuditVec &b) {
    int64_t s = 0;
    for (int k = 0; k < a.n(); k++) {
        s += (int64_t)a.x(k) * b.z(k) - (int64_t)a.z(k) * b.x(k);
    }
    return s;
}

DenseOperator gross_phase_point(const CodeParams &params, const QuditVec &t, size_t cap) {
    size_t dim = dense_dim(params, cap);
    check_vec(params, t);
    DenseOperator op{params, Eigen::MatrixXcd::Zero(dim, dim)};
    size_t count = dim * dim;
    for (size_t ai = 0; ai < count; ai++) {
        QuditVec a = unflatten_qudit_vec(ai, params.n, params.d);
        Cx w = params.omega_pow(-symplectic_form(t, a));
        for (size_t j = 0; j < dim; j++) {
            BasisImage im = displace_basis(params, a, j);
            op.m(im.index, j) += w * im.phase;
        }
    }
    op.m /= (double)dim;
    return op;
}

DenseOperator parity_operator(const CodeParams &params, size_t cap) {
    size_t dim = dense_dim(params, cap);
    DenseOperator op{params, Eigen::MatrixXcd::Zero(dim, dim)};
    for (size_t j = 0; j < dim; j++) {
        size_t out = 0;
        size_t place = 1;
        for (int k = 0; k < params.n; k++) {
            out += place * (size_t)floor_mod(-basis_digit(j, k, params.d), params.d);
            place *= params.d;
        }
        op.m(out, j) = 1;
    }
    return op;
}

DenseOperator density_from_ket(const CodeParams &params, const Eigen::VectorXcd &ket) {
    size_t dim = dense_dim(params);
    if ((size_t)ket.size() != dim) {
        throw Error(ErrorKind::kInvalidArgument, "ket has wrong dimension");
    }
    Eigen::VectorXcd k = ket / ket.norm();
    return {params, k * k.adjoint()};
}

Eigen::VectorXcd product_ket(const std::vector<Eigen::VectorXcd> &mode_kets) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Ones(1);
    // Later modes are more significant digits.
    for (const auto &k : mode_kets) {
        Eigen::VectorXcd next(out.size() * k.size());
        for (Eigen::Index hi = 0; hi < k.size(); hi++) {
            next.segment(hi * out.size(), out.size()) = k[hi] * out;
        }
        out = std::move(next);
    }
    return out;
}

GrossValue gross_wigner(const CodeParams &params, const DenseOperator &rho, const QuditVec &t) {
    size_t dim = dense_dim(params);
    check_density(rho, dim);
    check_vec(params, t);
    Cx v = (gross_phase_point(params, t).m * rho.m).trace();
    if (std::abs(v.imag()) > kDensityTol) {
        throw Error(ErrorKind::kInvalidArgument, "Gross Wigner value has imaginary residue above 1e-10");
    }
    return {v.real(), std::abs(v.imag())};
}

GrossTable gross_wigner_table(const CodeParams &params, const DenseOperator &rho) {
    size_t dim = dense_dim(params);
    check_density(rho, dim);
    GrossTable table{params, std::vector<double>(dim * dim), 0};
    // A_t = T_t P T_t^dagger with P the parity; each A_t has one entry per column.
    for (size_t ti = 0; ti < dim * dim; ti++) {
        QuditVec t = unflatten_qudit_vec(ti, params.n, params.d);
        QuditVec neg = t;
        for (int &c : neg.comp) {
            c = (int)floor_mod(-c, params.d);
        }
        Cx acc = 0;
        for (size_t j = 0; j < dim; j++) {
            BasisImage a = displace_basis(params, neg, j);
            size_t flipped = 0;
            size_t place = 1;
            for (int k = 0; k < params.n; k++) {
                flipped += place * (size_t)floor_mod(-basis_digit(a.index, k, params.d), params.d);
                place *= params.d;
            }
            BasisImage b = displace_basis(params, t, flipped);
            acc += a.phase * b.phase * rho.m(j, b.index);
        }
        if (std::abs(acc.imag()) > kDensityTol) {
            throw Error(ErrorKind::kInvalidArgument, "Gross Wigner value has imaginary residue above 1e-10");
        }
        table.values[ti] = acc.real();
        table.max_imag_residue = std::max(table.max_imag_residue, std::abs(acc.imag()));
    }
    return table;
}

std::vector<double> GrossTable::normalized() const {
    double scale = 1;
    for (int k = 0; k < params.n; k++) {
        scale *= params.d;
    }
    std::vector<double> out(values);
    for (double &v : out) {
        v /= scale;
    }
    return out;
}

size_t flatten_qudit_vec(const QuditVec &t, int d) {
    size_t index = 0;
    size_t place = 1;
    for (int c : t.comp) {
        index += place * (size_t)c;
        place *= d;
    }
    return index;
}

QuditVec unflatten_qudit_vec(size_t index, int n, int d) {
    QuditVec t = QuditVec::zeros(n);
    for (int i = 0; i < 2 * n; i++) {
        t.comp[i] = (int)(index % d);
        index /= d;
    }
    return t;
}

}  // namespace zgsim
