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

#include <gtest/gtest.h>

#include <random>

#include "zgsim/errors.h"

using namespace zgsim;

namespace {

const GateKind kAllKinds[] = {GateKind::kSum,   GateKind::kSumInv,   GateKind::kFourier, GateKind::kFourierInv,
                              GateKind::kPhase, GateKind::kPhaseInv, GateKind::kCz,      GateKind::kCzInv};

QuditVec reduce(const std::vector<int64_t> &v, int d) {
    QuditVec q = QuditVec::zeros((int)v.size() / 2);
    for (size_t i = 0; i < v.size(); i++) {
        q.comp[i] = (int)floor_mod(v[i], d);
    }
    return q;
}

}  // namespace

TEST(clifford_oracle, spec_examples) {
    CodeParams p1 = CodeParams::make(3, 1);
    auto none = clifford_oracle_probabilities(p1, {basis_ket(3, 0)}, {}, {0});
    ASSERT_EQ(none, (std::vector<double>{1, 0, 0}));

    auto f = clifford_oracle_probabilities(p1, {basis_ket(3, 0)}, {OracleOp::of_gate({GateKind::kFourier, 0})}, {0});
    for (double v : f) {
        ASSERT_NEAR(v, 1.0 / 3, 1e-12);
    }

    CodeParams p2 = CodeParams::make(3, 2);
    auto bell = clifford_oracle_probabilities(
        p2, {basis_ket(3, 0), basis_ket(3, 0)},
        {OracleOp::of_gate({GateKind::kFourier, 0}), OracleOp::of_gate({GateKind::kSum, 0, 1})}, {0, 1});
    for (int a = 0; a < 3; a++) {
        for (int b = 0; b < 3; b++) {
            ASSERT_NEAR(bell[a + 3 * b], a == b ? 1.0 / 3 : 0, 1e-12);
        }
    }
}

TEST(clifford_oracle, sums_to_one) {
    std::mt19937_64 rng(5);
    CodeParams p = CodeParams::make(5, 3);
    std::uniform_int_distribution<int> kind(0, 7), mode(0, 2);
    for (int rep = 0; rep < 20; rep++) {
        std::vector<OracleOp> ops;
        for (int g = 0; g < 10; g++) {
            int i = mode(rng), j = (i + 1 + mode(rng) % 2) % 3;
            ops.push_back(OracleOp::of_gate({kAllKinds[kind(rng)], i, j}));
        }
        auto probs = clifford_oracle_probabilities(p, {basis_ket(5, 1), basis_ket(5, 0), basis_ket(5, 3)}, ops,
                                                   {0, 2});
        double s = 0;
        for (double v : probs) {
            s += v;
        }
        ASSERT_NEAR(s, 1, 1e-12);
    }
}

TEST(clifford_oracle, qudit_gates_realize_gate_matrices) {
    // U^dagger T_a U = T_{S a} exactly, tying each tag's matrix to its qudit Clifford.
    for (int d : {3, 5}) {
        CodeParams p = CodeParams::make(d, 2);
        for (GateKind k : kAllKinds) {
            GateTag g{k, 1, 0};
            Eigen::MatrixXcd u = qudit_gate_unitary(p, g).m;
            IntSymplectic s = gate_matrix(g, 2);
            for (size_t ai = 0; ai < (size_t)d * d * d * d; ai++) {
                QuditVec a = unflatten_qudit_vec(ai, 2, d);
                std::vector<int64_t> av(a.comp.begin(), a.comp.end());
                Eigen::MatrixXcd lhs = u.adjoint() * pauli_displacement(p, a).m * u;
                Eigen::MatrixXcd rhs = pauli_displacement(p, reduce(s * av, d)).m;
                ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-10) << gate_to_string(g) << " a=" << ai;
            }
        }
    }
}

TEST(clifford_oracle, phase_gate_frame_from_wavefunction) {
    // exp(i q^2/2) at q = (j + d k) ell equals omega^{2^{-1} j^2} exp(i ell (d/2) q).
    for (int d : {3, 5, 7}) {
        CodeParams p = CodeParams::make(d, 1);
        for (int j = 0; j < d; j++) {
            for (int k = -5; k <= 5; k++) {
                double q = (j + d * k) * p.ell;
                Cx cv = std::polar(1.0, q * q / 2);
                Cx logical = p.omega_pow((int64_t)p.two_inv * j * j) * std::polar(1.0, p.ell * (d / 2.0) * q);
                ASSERT_LT(std::abs(cv - logical), 1e-9);
            }
        }
    }
}

TEST(clifford_oracle, cz_and_sum_are_frame_free) {
    // exp(i q_1 q_2) on lattice points is omega^{ab} with no residual phase.
    CodeParams p = CodeParams::make(5, 2);
    for (int a = 0; a < 5; a++) {
        for (int b = 0; b < 5; b++) {
            for (int k1 = -3; k1 <= 3; k1++) {
                for (int k2 = -3; k2 <= 3; k2++) {
                    double q1 = (a + 5 * k1) * p.ell, q2 = (b + 5 * k2) * p.ell;
                    ASSERT_LT(std::abs(std::polar(1.0, q1 * q2) - p.omega_pow(a * b)), 1e-9);
                }
            }
        }
    }
}

TEST(clifford_oracle, pauli_ops_shift_outcomes) {
    CodeParams p = CodeParams::make(5, 1);
    auto r = run_clifford_oracle(p, {basis_ket(5, 1)}, {OracleOp::pauli_x(0, 1), OracleOp::pauli_x(0, 1)}, {0});
    ASSERT_NEAR(r.logical_probs[3], 1, 1e-12);
    auto z = run_clifford_oracle(p, {basis_ket(5, 1)}, {OracleOp::pauli_z(0, 1)}, {0});
    ASSERT_NEAR(z.logical_probs[1], 1, 1e-12);
}

TEST(clifford_oracle, fractional_displacement_moves_bins) {
    CodeParams p = CodeParams::make(3, 1);
    auto r = run_clifford_oracle(p, {basis_ket(3, 2)}, {OracleOp::displace({0.5, 0})}, {0});
    // Position 2.5 ell with K = 6 bins of width ell/2 lands in bin 5.
    auto bins = oracle_bin_probabilities(r, 6);
    ASSERT_NEAR(bins[5], 1, 1e-12);
}

TEST(clifford_oracle, phase_frame_reaches_position_after_fourier) {
    // Phase leaves a (0, d/2) frame; Fourier turns it into a position offset of -d/2.
    CodeParams p = CodeParams::make(3, 1);
    auto r = run_clifford_oracle(
        p, {basis_ket(3, 0)}, {OracleOp::of_gate({GateKind::kPhase, 0}), OracleOp::of_gate({GateKind::kFourier, 0})},
        {0});
    ASSERT_NEAR(r.frame[0], -1.5, 1e-15);
    ASSERT_NEAR(r.frame[1], 0, 1e-15);
}

TEST(clifford_oracle, rejects_bad_inputs) {
    CodeParams p = CodeParams::make(3, 2);
    ASSERT_THROW(clifford_oracle_probabilities(p, {basis_ket(3, 0)}, {}, {0}), Error);
    ASSERT_THROW(clifford_oracle_probabilities(p, {basis_ket(3, 0), basis_ket(3, 0)},
                                               {OracleOp::of_gate({GateKind::kSum, 0, 0})}, {0}),
                 Error);
    ASSERT_THROW(clifford_oracle_probabilities(p, {basis_ket(3, 0), basis_ket(3, 0)}, {}, {2}), Error);
}
