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

#include "zgsim/symplectic.h"

#include <gtest/gtest.h>

#include <random>

#include "zgsim/errors.h"

using namespace zgsim;

namespace {

std::vector<GateTag> random_word(std::mt19937_64 &rng, int n, int max_len) {
    static const GateKind kinds[] = {GateKind::kSum,   GateKind::kSumInv,   GateKind::kFourier, GateKind::kFourierInv,
                                     GateKind::kPhase, GateKind::kPhaseInv, GateKind::kCz,      GateKind::kCzInv};
    std::uniform_int_distribution<int> len(0, max_len), mode(0, n - 1);
    std::uniform_int_distribution<int> kind(n > 1 ? 0 : 2, n > 1 ? 7 : 5);
    std::vector<GateTag> w;
    int l = len(rng);
    for (int k = 0; k < l; k++) {
        GateTag g{kinds[kind(rng)], mode(rng), -1};
        if (g.two_mode()) {
            do {
                g.j = mode(rng);
            } while (g.j == g.i);
        }
        w.push_back(g);
    }
    return w;
}

}  // namespace

TEST(validate, examples) {
    ASSERT_NO_THROW(IntSymplectic::identity(3));
    ASSERT_NO_THROW(IntSymplectic::validate(IntMatrix::from_rows({{0, 1}, {-1, 0}})));
    ASSERT_NO_THROW(IntSymplectic::validate(IntMatrix::from_rows({{1, 1}, {0, 1}})));
    try {
        IntSymplectic::validate(IntMatrix::from_rows({{2, 0}, {0, 1}}));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::kNotSymplectic);
        ASSERT_NE(std::string(e.what()).find("(0,1)"), std::string::npos);
    }
    ASSERT_THROW(IntSymplectic::validate(IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), Error);
    ASSERT_THROW(IntSymplectic::validate_real({{1, 0.5}, {0, 1}}), Error);
}

TEST(t_bar, examples) {
    ASSERT_EQ(t_bar(IntSymplectic::identity(2)), (std::vector<int64_t>{0, 0, 0, 0}));
    auto shear = IntSymplectic::validate(IntMatrix::from_rows({{1, 0}, {1, 1}}));
    ASSERT_EQ(t_bar(shear), (std::vector<int64_t>{1, 0}));
    auto fourier = IntSymplectic::validate(IntMatrix::from_rows({{0, 1}, {-1, 0}}));
    ASSERT_EQ(t_bar(fourier), (std::vector<int64_t>{0, 0}));
    for (int ax = -2; ax <= 2; ax++) {
        for (int az = -2; az <= 2; az++) {
            ASSERT_TRUE(parity_identity_check(fourier, {ax, az}));
        }
    }
}

TEST(gate_matrix, phase_is_lower_shear) {
    auto s = gate_matrix({GateKind::kPhase, 0}, 1);
    ASSERT_EQ(s.matrix(), IntMatrix::from_rows({{1, 0}, {-1, 1}}));
    ASSERT_EQ(gate_matrix({GateKind::kPhaseInv, 0}, 1).matrix(), IntMatrix::from_rows({{1, 0}, {1, 1}}));
    ASSERT_EQ(gate_matrix({GateKind::kFourier, 0}, 1).matrix(), IntMatrix::from_rows({{0, 1}, {-1, 0}}));
}

TEST(gate_matrix, inverse_tags_invert) {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 50; rep++) {
        auto w = random_word(rng, 3, 1);
        for (const auto &g : w) {
            ASSERT_EQ(gate_matrix(g, 3) * gate_matrix(inverse_gate(g), 3), IntSymplectic::identity(3));
            ASSERT_EQ(gate_matrix(g, 3).inverse(), gate_matrix(inverse_gate(g), 3));
        }
    }
    ASSERT_THROW(gate_matrix({GateKind::kSum, 0, 0}, 2), Error);
    ASSERT_THROW(gate_matrix({GateKind::kFourier, 2}, 2), Error);
}

TEST(covariance_shift, examples) {
    CodeParams p = CodeParams::make(3, 1);
    ASSERT_EQ(covariance_shift(IntSymplectic::identity(1), p), (std::vector<int64_t>{0, 0}));
    auto shear = IntSymplectic::validate(IntMatrix::from_rows({{1, 0}, {1, 1}}));
    auto h = covariance_shift(shear, p);
    ASSERT_EQ(h, (std::vector<int64_t>{0, 3}));
    auto t = half_ell_to_real(h, p);
    ASSERT_NEAR(t[1], 1.5 * p.ell, 1e-15);
    ASSERT_NEAR(t[1], M_PI / p.ell, 1e-12);
    ASSERT_EQ(covariance_shift(gate_matrix({GateKind::kFourier, 0}, 1), p), (std::vector<int64_t>{0, 0}));
}

TEST(covariance_shift, multiples_of_half_d_ell_and_composition) {
    std::mt19937_64 rng(17);
    for (int d : {3, 5, 7}) {
        for (int n : {1, 2, 3}) {
            CodeParams p = CodeParams::make(d, n);
            for (int rep = 0; rep < 100; rep++) {
                auto s1 = recompose(random_word(rng, n, 12), n);
                auto s2 = recompose(random_word(rng, n, 12), n);
                auto h1 = covariance_shift(s1, p), h2 = covariance_shift(s2, p);
                auto h12 = covariance_shift(s1 * s2, p);
                auto moved = s1 * h2;
                for (int i = 0; i < 2 * n; i++) {
                    ASSERT_EQ(h1[i] % d, 0);
                    ASSERT_EQ(floor_mod(h1[i] + moved[i] - h12[i], 2 * d), 0);
                }
            }
        }
    }
}

TEST(parity_identity, examples_and_random) {
    ASSERT_TRUE(parity_identity_check(IntSymplectic::identity(2), {3, -1, 4, 1}));
    auto fourier = gate_matrix({GateKind::kFourier, 0}, 1);
    ASSERT_TRUE(parity_identity_check(fourier, {1, 1}));
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coef(-10, 10);
    for (int rep = 0; rep < 100; rep++) {
        int n = 1 + rep % 3;
        auto s = recompose(random_word(rng, n, 20), n);
        for (int k = 0; k < 1000; k++) {
            std::vector<int64_t> a(2 * n);
            for (auto &v : a) {
                v = coef(rng);
            }
            ASSERT_TRUE(parity_identity_check(s, a));
        }
    }
}

TEST(parity_identity, detects_wrong_correction) {
    // The identity fails for the plain a_X.a_Z rule once t_bar is non-zero.
    auto s = gate_matrix({GateKind::kPhase, 0}, 1);
    ASSERT_EQ(t_bar(s), (std::vector<int64_t>{-1, 0}));
    std::vector<int64_t> a{1, 0};
    auto b = s * a;
    ASSERT_NE(floor_mod(b[0] * b[1] - a[0] * a[1], 2), 0);
    ASSERT_TRUE(parity_identity_check(s, a));
}

TEST(decompose, identity_and_single_generator) {
    ASSERT_TRUE(decompose(IntSymplectic::identity(2)).empty());
    GateTag sum{GateKind::kSum, 0, 1};
    auto w = decompose(gate_matrix(sum, 2));
    ASSERT_EQ(w.size(), 1u);
    ASSERT_EQ(w[0], sum);
}

TEST(decompose, round_trip_random_words) {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 300; rep++) {
        int n = 1 + rep % 4;
        auto s = recompose(random_word(rng, n, 20), n);
        auto w = decompose(s);
        ASSERT_EQ(recompose(w, n), s);
    }
}

TEST(decompose, large_entries_and_caps) {
    auto s = IntSymplectic::validate(IntMatrix::from_rows({{13, 8}, {21, 13}}));
    ASSERT_EQ(recompose(decompose(s), 1), s);
    DecomposeOptions tight;
    tight.max_word_length = 3;
    try {
        decompose(s, tight);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::kDecompositionFailed);
    }
}

TEST(int_symplectic, exact_inverse) {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 100; rep++) {
        int n = 1 + rep % 3;
        auto s = recompose(random_word(rng, n, 15), n);
        ASSERT_EQ(s * s.inverse(), IntSymplectic::identity(n));
        ASSERT_EQ(s.inverse() * s, IntSymplectic::identity(n));
    }
}
