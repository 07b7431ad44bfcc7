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

#ifndef ZGSIM_CLIFFORD_ORACLE_H
#define ZGSIM_CLIFFORD_ORACLE_H

#include <Eigen/Dense>
#include <vector>

#include "zgsim/code_params.h"
#include "zgsim/qudit.h"
#include "zgsim/symplectic.h"

namespace zgsim {

/// Brute-force reference simulator for encoded Clifford circuits.
///
/// The state is kept as T_f encode(psi) with psi a dense qudit vector and f a
/// real displacement frame (units of ell). Gates act on psi through their qudit
/// Clifford and on f by conjugation; the only generator that is not exactly
/// its encoded qudit gate is Phase = exp(i q^2/2), which equals
/// T_{(0, d/2)} encode(diag(omega^{2^{-1} j^2})) on the code space.
struct OracleOp {
    enum class Kind { kGate, kDisplace };
    Kind kind = Kind::kGate;
    GateTag gate{GateKind::kFourier, 0, -1};
    std::vector<double> c;

    static OracleOp of_gate(const GateTag &g) {
        return {Kind::kGate, g, {}};
    }
    static OracleOp displace(std::vector<double> c) {
        return {Kind::kDisplace, {}, std::move(c)};
    }
    /// Logical X (or Z) on mode i, i.e. T_c with c the i-th X (or Z) unit vector.
    static OracleOp pauli_x(int i, int n);
    static OracleOp pauli_z(int i, int n);
};

struct OracleResult {
    CodeParams params;
    std::vector<int> measured_modes;
    /// Born probabilities of logical outcomes, index sum_k j_k d^k over measured modes.
    std::vector<double> logical_probs;
    /// Final displacement frame, (f_X; f_Z) in units of ell.
    std::vector<double> frame;
};

/// Runs the circuit on product input kets (one length-d ket per mode).
OracleResult run_clifford_oracle(const CodeParams &params, const std::vector<Eigen::VectorXcd> &kets,
                                 const std::vector<OracleOp> &ops, const std::vector<int> &measured_modes,
                                 size_t cap = kDefaultDenseCap);

/// Logical outcome table over Z_d^m.
std::vector<double> clifford_oracle_probabilities(const CodeParams &params,
                                                  const std::vector<Eigen::VectorXcd> &kets,
                                                  const std::vector<OracleOp> &ops,
                                                  const std::vector<int> &measured_modes);

/// Outcome table over K bins per measured mode: logical j on mode k lands at
/// position ell (j + f_X[k]) and is binned as floor(K (j + f_X[k]) / d) mod K.
std::vector<double> oracle_bin_probabilities(const OracleResult &result, int bins);

/// Dense qudit Clifford used by the oracle for a generator.
DenseOperator qudit_gate_unitary(const CodeParams &params, const GateTag &tag);

/// |j> as a length-d ket.
Eigen::VectorXcd basis_ket(int d, int j);

}  // namespace zgsim

#endif
