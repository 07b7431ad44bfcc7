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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "zgsim/errors.h"

using namespace zgsim;

namespace {

constexpr Cx kI{0, 1};

// Plain box sum, radius chosen by the caller.
Cx box_theta(const Eigen::MatrixXcd &g, const Eigen::VectorXcd &z, int radius) {
    int m = (int)g.rows();
    std::vector<int> t(m, -radius);
    Cx sum = 0;
    while (true) {
        Cx e = 0;
        for (int a = 0; a < m; a++) {
            for (int b = 0; b < m; b++) {
                e += M_PI * kI * (double)t[a] * g(a, b) * (double)t[b];
            }
            e += 2 * M_PI * kI * (double)t[a] * z[a];
        }
        sum += std::exp(e);
        int k = 0;
        while (k < m && t[k] == radius) {
            t[k++] = -radius;
        }
        if (k == m) {
            break;
        }
        t[k]++;
    }
    return sum;
}

Eigen::MatrixXcd random_form(std::mt19937_64 &rng, int m) {
    std::normal_distribution<double> g;
    Eigen::MatrixXd a(m, m), x(m, m);
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < m; j++) {
            a(i, j) = g(rng);
            x(i, j) = g(rng);
        }
    }
    Eigen::MatrixXd y = a * a.transpose() / m + 0.6 * Eigen::MatrixXd::Identity(m, m);
    Eigen::MatrixXd xs = (x + x.transpose()) / 2;
    return xs.cast<Cx>() + kI * y.cast<Cx>();
}

}  // namespace

TEST(siegel_theta, jacobi_constant) {
    Eigen::MatrixXcd g(1, 1);
    g(0, 0) = kI;
    ThetaValue v = siegel_theta(SiegelForm::make(g), Eigen::VectorXcd::Zero(1), 1e-15);
    ASSERT_NEAR(v.value.real(), 1.0864348112133080, 1e-14);
    ASSERT_NEAR(v.value.imag(), 0, 1e-15);
}

TEST(siegel_theta, matches_box_sum) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int m : {1, 2, 3, 4}) {
        for (int rep = 0; rep < 5; rep++) {
            Eigen::MatrixXcd gamma = random_form(rng, m);
            Eigen::VectorXcd z(m);
            for (int i = 0; i < m; i++) {
                z[i] = Cx(g(rng), 0.3 * g(rng));
            }
            ThetaValue v = siegel_theta(SiegelForm::make(gamma), z, 1e-13);
            Cx ref = box_theta(gamma, z, m <= 2 ? 14 : 8);
            ASSERT_LT(std::abs(v.value - ref), 1e-12 * std::max(1.0, std::abs(ref))) << m << " " << rep;
        }
    }
}

TEST(siegel_theta, even_and_periodic) {
    std::mt19937_64 rng(5);
    Eigen::MatrixXcd gamma = random_form(rng, 3);
    SiegelForm f = SiegelForm::make(gamma);
    Eigen::VectorXcd z(3);
    z << Cx(0.2, 0.1), Cx(-0.7, 0.05), Cx(0.33, -0.2);
    Cx a = siegel_theta(f, z, 1e-14).value;
    ASSERT_LT(std::abs(a - siegel_theta(f, -z, 1e-14).value), 1e-12);
    Eigen::VectorXcd shifted = z;
    shifted[1] += 1.0;
    shifted[2] -= 2.0;
    ASSERT_LT(std::abs(a - siegel_theta(f, shifted, 1e-14).value), 1e-12);
}

TEST(siegel_theta, quasi_periodic_in_gamma_direction) {
    // theta(z + G e_k) = exp(-i pi G_kk - 2 pi i z_k) theta(z).
    std::mt19937_64 rng(9);
    Eigen::MatrixXcd gamma = random_form(rng, 2);
    SiegelForm f = SiegelForm::make(gamma);
    Eigen::VectorXcd z(2);
    z << Cx(0.1, 0.05), Cx(0.4, -0.1);
    Cx a = siegel_theta(f, z, 1e-14).value;
    Cx b = siegel_theta(f, z + gamma.col(0), 1e-14).value;
    Cx expect = std::exp(-M_PI * kI * gamma(0, 0) - 2 * M_PI * kI * z[0]) * a;
    ASSERT_LT(std::abs(b - expect), 1e-11 * std::abs(expect));
}

TEST(siegel_theta, log_scale_is_a_factor) {
    Eigen::MatrixXcd g(2, 2);
    g << Cx(0.1, 1.2), Cx(0.3, 0.2), Cx(0.3, 0.2), Cx(-0.4, 0.9);
    SiegelForm f = SiegelForm::make(g);
    Eigen::VectorXcd z(2);
    z << Cx(0.25, 0.1), Cx(0.5, 0.2);
    Cx a = siegel_theta(f, z, 1e-14).value;
    Cx b = siegel_theta(f, z, 1e-14 * std::exp(-3.0), -3.0).value;
    ASSERT_LT(std::abs(b - std::exp(-3.0) * a), 1e-14);
}

TEST(siegel_form, rejects_bad_forms) {
    Eigen::MatrixXcd g(2, 2);
    g << kI, 0.0, 0.0, -kI;
    try {
        SiegelForm::make(g);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::kNotPositiveDefinite);
    }
    g << kI, 1.0, 0.0, kI;
    ASSERT_THROW(SiegelForm::make(g), Error);
}

TEST(siegel_theta, truncation_overflow) {
    Eigen::MatrixXcd g(1, 1);
    g(0, 0) = Cx(0, 1e-6);
    try {
        siegel_theta(SiegelForm::make(g), Eigen::VectorXcd::Zero(1), 1e-12);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::kTruncationOverflow);
    }
}

TEST(enumerate_ellipsoid, counts_points_in_disc) {
    Eigen::MatrixXd y = Eigen::MatrixXd::Identity(2, 2);
    int count = 0;
    enumerate_ellipsoid(y, Eigen::VectorXd::Zero(2), 25.0, [&](const std::vector<int> &) { count++; });
    ASSERT_EQ(count, 81);  // Gauss circle count N(5).
}

TEST(theta_fourier_series, matches_direct_theta_at_real_shifts) {
    std::mt19937_64 rng(13);
    Eigen::MatrixXcd gamma = random_form(rng, 4);
    SiegelForm f = SiegelForm::make(gamma);
    Eigen::VectorXcd z(4);
    z << Cx(0.1, 0.02), Cx(-0.3, 0.1), Cx(0.0, -0.15), Cx(0.4, 0.05);
    ThetaFourierSeries s;
    s.add_theta(f, z, Cx(0.5, -2.0), -1.0, 1e-14);
    s.add_theta(f, 0.5 * z, Cx(1.0, 0.0), 0.0, 1e-14);
    for (double s0 : {0.0, 0.13, -0.41}) {
        for (double s1 : {0.0, 0.27, 0.9}) {
            Eigen::VectorXcd shift = Eigen::VectorXcd::Zero(4);
            shift[0] = s0;
            shift[1] = s1;
            Cx ref = Cx(0.5, -2.0) * std::exp(-1.0) * siegel_theta(f, z + shift, 1e-15).value +
                     siegel_theta(f, 0.5 * z + shift, 1e-15).value;
            ASSERT_LT(std::abs(s.evaluate(s0, s1) - ref), 5e-14);
        }
    }
    Eigen::MatrixXcd grid = s.evaluate_grid({0.13, -0.41}, {0.27});
    ASSERT_LT(std::abs(grid(1, 0) - s.evaluate(-0.41, 0.27)), 1e-14);
}
