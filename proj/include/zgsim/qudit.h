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

#ifndef ZGSIM_QUDIT_H
#define ZGSIM_QUDIT_H

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "zgsim/code_params.h"

namespace zgsim {

/// Largest d^n accepted by the dense routines unless a caller raises it.
constexpr size_t kDefaultDenseCap = 3125;

/// Complex d^n x d^n matrix. Basis index of |j_0 ... j_{n-1}> is sum_k j_k d^k.
struct DenseOperator {
    CodeParams params;
    Eigen::MatrixXcd m;
};

/// d^n, or OracleScaleExceeded when it is above `cap`.
size_t dense_dim(const CodeParams &params, size_t cap = kDefaultDenseCap);

/// Digit k of a basis index.
inline int basis_digit(size_t index, int k, int d) {
    for (int i = 0; i < k; i++) {
        index /= d;
    }
    return (int)(index % d);
}

/// Action of the displacement T_a on a basis state: T_a|j> = phase |index>.
struct BasisImage {
    Cx phase;
    size_t index;
};
BasisImage displace_basis(const CodeParams &params, const QuditVec &a, size_t j);

/// omega^{2^{-1} a_X.a_Z} X^{a_X} Z^{a_Z}.
DenseOperator pauli_displacement(const CodeParams &params, const QuditVec &a, size_t cap = kDefaultDenseCap);

/// d^{-n} sum_a T_a omega^{-[t,a]}, built term by term from the definition.
DenseOperator gross_phase_point(const CodeParams &params, const QuditVec &t, size_t cap = kDefaultDenseCap);

/// (sum_j |-j><j|)^{(x) n}.
DenseOperator parity_operator(const CodeParams &params, size_t cap = kDefaultDenseCap);

DenseOperator density_from_ket(const CodeParams &params, const Eigen::VectorXcd &ket);

/// Tensor product of single-mode kets; mode 0 is the least significant digit.
Eigen::VectorXcd product_ket(const std::vector<Eigen::VectorXcd> &mode_kets);

struct GrossValue {
    double value;
    double imag_residue;
};

/// Tr(A_t rho). Rejects rho that is not Hermitian or not unit trace (1e-10).
GrossValue gross_wigner(const CodeParams &params, const DenseOperator &rho, const QuditVec &t);

/// Full Gross table over Z_d^{2n}, indexed by flatten_qudit_vec. Sums to d^n.
struct GrossTable {
    CodeParams params;
    std::vector<double> values;
    double max_imag_residue = 0;

    /// The table divided by d^n, a signed distribution summing to 1.
    std::vector<double> normalized() const;
};
GrossTable gross_wigner_table(const CodeParams &params, const DenseOperator &rho);

size_t flatten_qudit_vec(const QuditVec &t, int d);
QuditVec unflatten_qudit_vec(size_t index, int n, int d);

/// [a,b] = a_X.b_Z - a_Z.b_X.
int64_t symplectic_form(const QuditVec &a, const QuditVec &b);

}  // namespace zgsim

#endif
