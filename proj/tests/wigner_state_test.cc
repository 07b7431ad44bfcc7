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

#include "zgsim/wigner_state.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "zgsim/errors.h"
#include "zgsim/symplectic.h"

using namespace zgsim;

TEST(ideal_input, logical_zero_support) {
    CodeParams p = CodeParams::make(3, 1);
    WignerState s = ideal_input_logical(p, {0});
    for (int x = 0; x < 3; x++) {
        for (int z = 0; z < 3; z++) {
            double v = s.evaluate(PhasePoint({x * p.ell, z * p.ell}));
            ASSERT_NEAR(v, x == 0 ? 1.0 / 3 : 0.0, 1e-12);
        }
    }
    ASSERT_EQ(s.evaluate(PhasePoint({0.5 * p.ell, 0.0})), 0);
    ASSERT_EQ(s.negativity(), 1);
}

TEST(ideal_input, fourier_moves_support_to_z_line) {
    CodeParams p = CodeParams::make(3, 1);
    WignerState s = ideal_input_logical(p, {0}).apply_gate({GateKind::kFourier, 0});
    for (int x = 0; x < 3; x++) {
        for (int z = 0; z < 3; z++) {
            double v = s.evaluate(PhasePoint({x * p.ell, z * p.ell}));
            ASSERT_NEAR(v, z == 0 ? 1.0 / 3 : 0.0, 1e-12);
        }
    }
}

TEST(ideal_input, phase_state_is_negative) {
    CodeParams p = CodeParams::make(3, 1);
    Eigen::VectorXcd k(3);
    k << 1, 1, -1;
    WignerState s = ideal_input(p, {density_from_ket(p, k / std::sqrt(3.0))});
    ASSERT_GT(s.negativity(), 1.1);
}

TEST(ideal_input, rejects_mode_mismatch) {
    CodeParams p = CodeParams::make(3, 2);
    ASSERT_THROW(ideal_input_logical(p, {0}), Error);
    ASSERT_THROW(ideal_input_logical(p, {0, 3}), Error);
}

TEST(wigner_state, pullback_and_factorization) {
    CodeParams p = CodeParams::make(3, 2), m = CodeParams::make(3, 1);
    ModeFactor a = ModeFactor::realistic(RealisticGkpSpec::logical_state(3, 0.45, 1));
    ModeFactor b = ModeFactor::realistic(RealisticGkpSpec::phase_state(0.5));
    WignerState s(p, {a, b});
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0, p.torus_length());
    for (int rep = 0; rep < 100; rep++) {
        PhasePoint eta({u(rng), u(rng), u(rng), u(rng)});
        double prod = a.value(eta.x(0), eta.z(0)) * b.value(eta.x(1), eta.z(1));
        ASSERT_NEAR(s.evaluate(eta), prod, 1e-10 * std::abs(prod) + 1e-300);
    }
    WignerState f = s.apply_gate({GateKind::kFourier, 1}).apply_gate({GateKind::kSum, 0, 1});
    for (int rep = 0; rep < 20; rep++) {
        PhasePoint eta({u(rng), u(rng), u(rng), u(rng)});
        ASSERT_NEAR(f.evaluate(eta), s.evaluate(f.map().pullback(eta)), 1e-12);
    }
}

TEST(wigner_state, negativity_is_multiplicative_and_invariant) {
    CodeParams p = CodeParams::make(3, 2);
    ModeFactor a = ModeFactor::realistic(RealisticGkpSpec::logical_state(3, 0.4, 0));
    WignerState s(p, {a, a});
    ASSERT_NEAR(s.negativity(), a.negativity() * a.negativity(), 1e-8 * s.negativity());
    WignerState g = s.apply_gate({GateKind::kCz, 0, 1}).apply_gate({GateKind::kPhase, 1}).apply_displacement({0.1, 0, 0, 2});
    ASSERT_EQ(g.negativity(), s.negativity());
    ASSERT_GE(a.negativity(), 1 - 1e-6);
}

TEST(wigner_state, displacement_round_trip_and_inverse_word) {
    CodeParams p = CodeParams::make(5, 2);
    WignerState s = ideal_input_logical(p, {1, 2});
    WignerState d = s.apply_displacement({0.3, -1, 2, 0.25}).apply_displacement({-0.3, 1, -2, -0.25});
    ASSERT_TRUE(d.map() == s.map());
    WignerState g = s.apply_gate({GateKind::kSum, 0, 1});
    std::vector<GateTag> word = decompose(gate_matrix({GateKind::kSum, 0, 1}, 2));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        g = g.apply_gate(inverse_gate(*it));
    }
    ASSERT_TRUE(g.map() == s.map());
}

TEST(sample_abs, ideal_logical_zero_frequencies) {
    CodeParams p = CodeParams::make(3, 1);
    WignerState s = ideal_input_logical(p, {0});
    std::vector<PhaseSample> xs = s.sample_abs(77, 3000);
    ASSERT_EQ(xs.size(), 3000u);
    int counts[3] = {0, 0, 0};
    for (const PhaseSample &x : xs) {
        ASSERT_EQ(x.sign, 1);
        ASSERT_NEAR(x.eta.x(0), 0, 1e-12);
        counts[(int)std::lround(x.eta.z(0) / p.ell) % 3]++;
    }
    for (int c : counts) {
        ASSERT_NEAR(c / 3000.0, 1.0 / 3, 0.03);
    }
}

TEST(sample_abs, realistic_negative_fraction) {
    CodeParams p = CodeParams::make(3, 1);
    WignerState s = realistic_input(p, {RealisticGkpSpec::logical_state(3, 0.3, 0)});
    size_t n = 100000;
    std::vector<PhaseSample> xs = s.sample_abs(5, n, 4);
    double neg = 0;
    for (const PhaseSample &x : xs) {
        neg += x.sign < 0;
    }
    double m = s.negativity();
    double expect = (m - 1) / (2 * m);
    double sigma = std::sqrt(expect * (1 - expect) / n);
    ASSERT_NEAR(neg / n, expect, 3 * sigma);
}

TEST(sample_abs, deterministic_across_threads) {
    CodeParams p = CodeParams::make(3, 2);
    WignerState s = WignerState(p, {ModeFactor::realistic(RealisticGkpSpec::phase_state(0.5)),
                                    ModeFactor::ideal_logical(CodeParams::make(3, 1), 2)})
                        .apply_gate({GateKind::kSum, 1, 0});
    std::vector<PhaseSample> a = s.sample_abs(123, 9000, 1);
    std::vector<PhaseSample> b = s.sample_abs(123, 9000, 3);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); i++) {
        ASSERT_EQ(a[i].eta.eta, b[i].eta.eta);
        ASSERT_EQ(a[i].sign, b[i].sign);
    }
    std::vector<PhaseSample> c = s.sample_abs(124, 10, 1);
    ASSERT_NE(a[0].eta.eta, c[0].eta.eta);
}

TEST(sample_abs, pushforward_consistency) {
    CodeParams p = CodeParams::make(3, 1);
    WignerState s = realistic_input(p, {RealisticGkpSpec::phase_state(0.45)});
    WignerState g = s.apply_gate({GateKind::kPhase, 0}).apply_gate({GateKind::kFourierInv, 0}).apply_displacement({0.2, 0.7});
    std::vector<PhaseSample> before = s.sample_chunk(9, 0, 200);
    std::vector<PhaseSample> after = g.sample_chunk(9, 0, 200);
    for (size_t i = 0; i < before.size(); i++) {
        double w0 = s.evaluate(before[i].eta);
        ASSERT_NEAR(g.evaluate(after[i].eta), w0, 1e-9 * std::abs(w0) + 1e-13);
        ASSERT_EQ(after[i].sign, before[i].sign);
        ASSERT_EQ(before[i].sign, w0 < 0 ? -1 : 1);
    }
}

TEST(envelope_sampler, efficiency_floor) {
    ModeFactor a = ModeFactor::realistic(RealisticGkpSpec::logical_state(3, 0.3, 0));
    ASSERT_GE(a.sampler().expected_efficiency(), EnvelopeSampler::kMinEfficiency);
    try {
        EnvelopeSampler::build(a.wigner().series(), a.params(), 1e-6, 1e-14);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::kSamplerEfficiency);
    }
}

TEST(series_negativity, integral_and_vacuum_like_width) {
    ModeFactor a = ModeFactor::realistic(RealisticGkpSpec::logical_state(3, 0.5, 0));
    QuadratureResult q = series_integral(a.wigner().series(), a.params(), 1e-10);
    ASSERT_NEAR(q.value, 1, 1e-9);
    ASSERT_TRUE(a.negativity_detail().converged);
    ASSERT_GT(a.negativity(), 1.1);
}
