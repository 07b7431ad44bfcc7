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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "zgsim/errors.h"

using namespace zgsim;

namespace {

QuditVec random_vec(std::mt19937_64 &rng, int n, int d) {
    std::uniform_int_distribution<int> u(0, d - 1);
    QuditVec a = QuditVec::zeros(n);
    for (int &c : a.comp) {
        c = u(rng);
    }
    return a;
}

QuditVec add_mod(const QuditVec &a, const QuditVec &b, int d) {
    QuditVec s = a;
    for (size_t i = 0; i < s.comp.size(); i++) {
        s.comp[i] = (a.comp[i] + b.comp[i]) % d;
    }
    return s;
}

Eigen::VectorXcd random_ket(std::mt19937_64 &rng, size_t dim) {
    std::normal_distribution<double> g;
    Eigen::VectorXcd k(dim);
    for (size_t i = 0; i < dim; i++) {
        k[i] = Cx(g(rng), g(rng));
    }
    return k / k.norm();
}

}  // namespace

TEST(code_params, invariants) {
    for (int d : {3, 5, 7, 11}) {
        CodeParams p = CodeParams::make(d, 2);
        ASSERT_NEAR(p.ell * p.ell * d, 2 * M_PI, 1e-12);
        ASSERT_EQ((2 * p.two_inv) % d, 1);
        ASSERT_LT(std::abs(std::pow(p.omega, d) - Cx(1)), 1e-12);
    }
    ASSERT_THROW(CodeParams::make(4, 1), Error);
    ASSERT_THROW(CodeParams::make(1, 1), Error);
    ASSERT_THROW(CodeParams::make(3, 0), Error);
}

TEST(pauli_displacement, identity_and_shift) {
    CodeParams p = CodeParams::make(3, 1);
    ASSERT_TRUE(pauli_displacement(p, QuditVec({0, 0})).m.isApprox(Eigen::MatrixXcd::Identity(3, 3)));
    Eigen::MatrixXcd x = pauli_displacement(p, QuditVec({1, 0})).m;
    for (int j = 0; j < 3; j++) {
        ASSERT_EQ(x((j + 1) % 3, j), Cx(1));
    }
}

TEST(pauli_displacement, xz_phase_for_qutrit) {
    CodeParams p = CodeParams::make(3, 1);
    Eigen::MatrixXcd x = pauli_displacement(p, QuditVec({1, 0})).m;
    Eigen::MatrixXcd z = pauli_displacement(p, QuditVec({0, 1})).m;
    Eigen::MatrixXcd t = pauli_displacement(p, QuditVec({1, 1})).m;
    ASSERT_TRUE(t.isApprox(p.omega * p.omega * x * z, 1e-12));
    ASSERT_TRUE((t * t.adjoint()).isApprox(Eigen::MatrixXcd::Identity(3, 3), 1e-12));
}

TEST(pauli_displacement, composition_law) {
    std::mt19937_64 rng(7);
    for (int d : {3, 5}) {
        for (int n : {1, 2}) {
            CodeParams p = CodeParams::make(d, n);
            for (int rep = 0; rep < 50; rep++) {
                QuditVec a = random_vec(rng, n, d), b = random_vec(rng, n, d);
                Eigen::MatrixXcd lhs = pauli_displacement(p, a).m * pauli_displacement(p, b).m;
                Eigen::MatrixXcd rhs = p.omega_pow(p.two_inv * symplectic_form(b, a)) *
                           pauli_displacement(p, add_mod(a, b, d)).m;
                ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
            }
        }
    }
}

TEST(pauli_displacement, cap) {
    ASSERT_THROW(pauli_displacement(CodeParams::make(5, 6), QuditVec::zeros(6)), Error);
    try {
        dense_dim(CodeParams::make(7, 5));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::kOracleScaleExceeded);
    }
}

TEST(gross_phase_point, origin_is_parity) {
    CodeParams p = CodeParams::make(3, 1);
    Eigen::MatrixXcd a0 = gross_phase_point(p, QuditVec({0, 0})).m;
    for (int j = 0; j < 3; j++) {
        for (int k = 0; k < 3; k++) {
            ASSERT_NEAR(std::abs(a0(k, j) - Cx(k == (3 - j) % 3 ? 1 : 0)), 0, 1e-12);
        }
    }
    for (int d : {3, 5}) {
        for (int n : {1, 2}) {
            CodeParams q = CodeParams::make(d, n);
            ASSERT_LT((gross_phase_point(q, QuditVec::zeros(n)).m - parity_operator(q).m).cwiseAbs().maxCoeff(),
                      1e-12);
        }
    }
}

TEST(gross_phase_point, hermitian_with_unit_eigenvalues) {
    CodeParams p = CodeParams::make(3, 1);
    for (size_t ti = 0; ti < 9; ti++) {
        Eigen::MatrixXcd a = gross_phase_point(p, unflatten_qudit_vec(ti, 1, 3)).m;
        ASSERT_LT((a - a.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
        for (double ev : es.eigenvalues()) {
            ASSERT_NEAR(std::abs(ev), 1, 1e-12);
        }
    }
}

TEST(gross_phase_point, displacement_covariance) {
    CodeParams p = CodeParams::make(5, 1);
    QuditVec t({2, 3});
    Eigen::MatrixXcd tt = pauli_displacement(p, t).m;
    Eigen::MatrixXcd lhs = gross_phase_point(p, t).m;
    Eigen::MatrixXcd rhs = tt * gross_phase_point(p, QuditVec({0, 0})).m * tt.adjoint();
    ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(gross_wigner, computational_basis_state) {
    CodeParams p = CodeParams::make(3, 1);
    for (int j = 0; j < 3; j++) {
        Eigen::VectorXcd k = Eigen::VectorXcd::Zero(3);
        k[j] = 1;
        auto rho = density_from_ket(p, k);
        for (size_t ti = 0; ti < 9; ti++) {
            QuditVec t = unflatten_qudit_vec(ti, 1, 3);
            GrossValue v = gross_wigner(p, rho, t);
            ASSERT_NEAR(v.value, t.x(0) == j ? 1 : 0, 1e-12);
            ASSERT_LT(v.imag_residue, 1e-12);
        }
    }
}

TEST(gross_wigner, maximally_mixed) {
    CodeParams p = CodeParams::make(3, 1);
    DenseOperator rho{p, Eigen::MatrixXcd::Identity(3, 3) / 3.0};
    GrossTable table = gross_wigner_table(p, rho);
    for (double v : table.values) {
        ASSERT_NEAR(v, 1.0 / 3, 1e-12);
    }
}

TEST(gross_wigner, phase_state_is_negative) {
    CodeParams p = CodeParams::make(3, 1);
    Eigen::VectorXcd k(3);
    k << 1, 1, -1;
    GrossTable table = gross_wigner_table(p, density_from_ket(p, k));
    double lowest = *std::min_element(table.values.begin(), table.values.end());
    ASSERT_LT(lowest, -1e-3);
}

TEST(gross_wigner, table_matches_definition_and_sums_to_dn) {
    std::mt19937_64 rng(11);
    for (int d : {3, 5}) {
        for (int n : {1, 2}) {
            CodeParams p = CodeParams::make(d, n);
            size_t dim = dense_dim(p);
            auto rho = density_from_ket(p, random_ket(rng, dim));
            GrossTable table = gross_wigner_table(p, rho);
            double sum = 0;
            for (size_t ti = 0; ti < table.values.size(); ti++) {
                sum += table.values[ti];
                if (ti % 7 == 0) {
                    ASSERT_NEAR(table.values[ti], gross_wigner(p, rho, unflatten_qudit_vec(ti, n, d)).value, 1e-12);
                }
            }
            ASSERT_NEAR(sum, (double)dim, 1e-9);
            double nsum = 0;
            for (double v : table.normalized()) {
                nsum += v;
            }
            ASSERT_NEAR(nsum, 1, 1e-12);
        }
    }
}

TEST(gross_wigner, rejects_bad_density) {
    CodeParams p = CodeParams::make(3, 1);
    DenseOperator bad{p, Eigen::MatrixXcd::Zero(3, 3)};
    bad.m(0, 1) = 1;
    bad.m(0, 0) = 1;
    ASSERT_THROW(gross_wigner(p, bad, QuditVec({0, 0})), Error);
    DenseOperator unnormalized{p, Eigen::MatrixXcd::Identity(3, 3)};
    ASSERT_THROW(gross_wigner_table(p, unnormalized), Error);
}

TEST(qudit_vec, flatten_round_trip) {
    for (size_t i = 0; i < 625; i++) {
        ASSERT_EQ(flatten_qudit_vec(unflatten_qudit_vec(i, 2, 5), 5), i);
    }
}
