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

#include "zgsim/measure.h"

#include <gtest/gtest.h>

#include <random>

#include "zgsim/clifford_oracle.h"
#include "zgsim/errors.h"

using namespace zgsim;

namespace {

GateTag random_gate(std::mt19937_64 &rng, int n) {
    std::uniform_int_distribution<int> kind(0, n > 1 ? 7 : 3), mode(0, n - 1);
    static const GateKind one[] = {GateKind::kFourier, GateKind::kFourierInv, GateKind::kPhase, GateKind::kPhaseInv};
    static const GateKind two[] = {GateKind::kSum, GateKind::kSumInv, GateKind::kCz, GateKind::kCzInv};
    int k = kind(rng);
    if (k < 4) {
        return {one[k], mode(rng)};
    }
    int i = mode(rng), j = mode(rng);
    while (j == i) {
        j = mode(rng);
    }
    return {two[k - 4], i, j};
}

Eigen::VectorXcd random_ket(std::mt19937_64 &rng, int d) {
    std::normal_distribution<double> g;
    Eigen::VectorXcd k(d);
    for (int i = 0; i < d; i++) {
        k[i] = Cx(g(rng), g(rng));
    }
    return k / k.norm();
}

}  // namespace

TEST(measurement_spec, validation_and_flattening) {
    CodeParams p = CodeParams::make(3, 2);
    MeasurementSpec s = MeasurementSpec::make(p, {1, 0}, 3);
    ASSERT_EQ(s.outcome_count(), 9u);
    ASSERT_EQ(s.unflatten(5), (std::vector<int>{2, 1}));
    ASSERT_THROW(MeasurementSpec::make(p, {2}, 3), Error);
    ASSERT_THROW(MeasurementSpec::make(p, {0, 0}, 3), Error);
    ASSERT_THROW(MeasurementSpec::make(p, {0}, 0), Error);
}

TEST(povm_indicator, bins) {
    CodeParams p = CodeParams::make(3, 1);
    MeasurementSpec one = MeasurementSpec::make(p, {0}, 1);
    ASSERT_TRUE(povm_indicator(p, one, {0}, PhasePoint({2.9, 0.1})));
    // Edges belong to the bin they open.
    ASSERT_EQ(bin_index(p, 3, p.ell), 1);
    ASSERT_EQ(bin_index(p, 3, p.ell * (1 - 1e-12)), 1);
    ASSERT_EQ(bin_index(p, 3, p.ell * 0.999), 0);
    ASSERT_EQ(bin_index(p, 3, p.torus_length() * (1 - 1e-12)), 0);
    MeasurementSpec k3 = MeasurementSpec::make(p, {0}, 3);
    ASSERT_TRUE(povm_indicator(p, k3, {1}, PhasePoint({p.ell, 0.0})));
    ASSERT_FALSE(povm_indicator(p, k3, {0}, PhasePoint({p.ell, 0.0})));
}

TEST(exact_probabilities_ideal, logical_zero_is_deterministic) {
    CodeParams p = CodeParams::make(3, 1);
    WignerState s = ideal_input_logical(p, {0});
    std::vector<double> probs = exact_probabilities_ideal(s, MeasurementSpec::make(p, {0}, 3));
    ASSERT_NEAR(probs[0], 1, 1e-12);
    ASSERT_NEAR(probs[1], 0, 1e-12);
    std::vector<double> f = exact_probabilities_ideal(s.apply_gate({GateKind::kFourier, 0}),
                                                      MeasurementSpec::make(p, {0}, 3));
    for (double v : f) {
        ASSERT_NEAR(v, 1.0 / 3, 1e-12);
    }
}

TEST(exact_probabilities_ideal, marginal_of_product_state) {
    CodeParams p2 = CodeParams::make(5, 2), p1 = CodeParams::make(5, 1);
    WignerState two = ideal_input_logical(p2, {3, 1}).apply_gate({GateKind::kFourier, 1});
    WignerState one = ideal_input_logical(p1, {1}).apply_gate({GateKind::kFourier, 0});
    std::vector<double> a = exact_probabilities_ideal(two, MeasurementSpec::make(p2, {1}, 5));
    std::vector<double> b = exact_probabilities_ideal(one, MeasurementSpec::make(p1, {0}, 5));
    for (size_t i = 0; i < a.size(); i++) {
        ASSERT_NEAR(a[i], b[i], 1e-12);
    }
}

TEST(exact_probabilities_ideal, matches_dense_oracle) {
    std::mt19937_64 rng(2024);
    for (int d : {3, 5}) {
        for (int n : {1, 2}) {
            CodeParams p = CodeParams::make(d, n);
            for (int rep = 0; rep < 20; rep++) {
                std::vector<Eigen::VectorXcd> kets;
                std::vector<DenseOperator> rhos;
                CodeParams mode = CodeParams::make(d, 1);
                for (int k = 0; k < n; k++) {
                    kets.push_back(random_ket(rng, d));
                    rhos.push_back(density_from_ket(mode, kets.back()));
                }
                WignerState s = ideal_input(p, rhos);
                std::vector<OracleOp> ops;
                std::uniform_int_distribution<int> len(0, 10), coin(0, 3), shift(-2, 2);
                int L = len(rng);
                for (int g = 0; g < L; g++) {
                    if (coin(rng) == 0) {
                        std::vector<double> c(2 * n);
                        for (double &v : c) {
                            v = shift(rng);
                        }
                        ops.push_back(OracleOp::displace(c));
                        s = s.apply_displacement(c);
                    } else {
                        GateTag t = random_gate(rng, n);
                        ops.push_back(OracleOp::of_gate(t));
                        s = s.apply_gate(t);
                    }
                }
                std::vector<int> measured;
                for (int k = 0; k < n; k++) {
                    measured.push_back(k);
                }
                OracleResult ref = run_clifford_oracle(p, kets, ops, measured);
                for (int bins : {d, 2 * d}) {
                    std::vector<double> want = oracle_bin_probabilities(ref, bins);
                    std::vector<double> got = exact_probabilities_ideal(s, MeasurementSpec::make(p, measured, bins));
                    ASSERT_EQ(want.size(), got.size());
                    for (size_t i = 0; i < want.size(); i++) {
                        ASSERT_NEAR(got[i], want[i], 1e-9) << "d=" << d << " n=" << n << " rep=" << rep << " K=" << bins;
                    }
                }
            }
        }
    }
}

TEST(exact_probabilities_ideal, refining_bins_sums_children) {
    CodeParams p = CodeParams::make(3, 1);
    Eigen::VectorXcd k(3);
    k << 1, Cx(0, 1), -1;
    WignerState s = ideal_input(p, {density_from_ket(p, k / k.norm())})
                        .apply_gate({GateKind::kPhase, 0})
                        .apply_displacement({0.25, 0.0});
    std::vector<double> coarse = exact_probabilities_ideal(s, MeasurementSpec::make(p, {0}, 3));
    std::vector<double> fine = exact_probabilities_ideal(s, MeasurementSpec::make(p, {0}, 6));
    double total = 0;
    for (int b = 0; b < 3; b++) {
        ASSERT_NEAR(coarse[b], fine[2 * b] + fine[2 * b + 1], 1e-12);
        total += coarse[b];
    }
    ASSERT_NEAR(total, 1, 1e-12);
}

TEST(exact_probabilities_ideal, rejects_realistic_factor) {
    CodeParams p = CodeParams::make(3, 1);
    WignerState s = realistic_input(p, {RealisticGkpSpec::logical_state(3, 0.4, 0)});
    ASSERT_THROW(exact_probabilities_ideal(s, MeasurementSpec::make(p, {0}, 3)), Error);
}

TEST(quadrature_probabilities, realistic_zero_logical_straddles_edge) {
    // The peak at eta_X = 0 sits on the edge between bins 2 and 0.
    CodeParams p = CodeParams::make(3, 1);
    WignerState s = realistic_input(p, {RealisticGkpSpec::logical_state(3, 0.3, 0)});
    MeasurementSpec spec = MeasurementSpec::make(p, {0}, 3);
    std::vector<double> q = quadrature_probabilities(s, spec);
    ASSERT_NEAR(q[0] + q[1] + q[2], 1, 1e-9);
    ASSERT_NEAR(q[0], q[2], 1e-9);
    ASSERT_GT(q[0] + q[2], 0.95);
    std::vector<double> centered = quadrature_probabilities(s.apply_displacement({0.5, 0.0}), spec);
    ASSERT_GT(centered[0], 0.95);
    std::vector<double> moved = quadrature_probabilities(s.apply_displacement({1.5, 0.0}), spec);
    ASSERT_NEAR(moved[1], centered[0], 1e-9);
}

TEST(quadrature_probabilities, matches_pointwise_evolution) {
    CodeParams p = CodeParams::make(3, 1);
    WignerState s = realistic_input(p, {RealisticGkpSpec::phase_state(0.4)})
                        .apply_gate({GateKind::kPhase, 0})
                        .apply_gate({GateKind::kFourier, 0})
                        .apply_displacement({0.3, -0.7});
    ThetaFourierSeries e = evolved_series(s);
    for (double x : {0.1, 1.7, 3.2}) {
        for (double z : {0.4, 2.8}) {
            ASSERT_NEAR(series_value(e, p, x, z), s.evaluate(PhasePoint({x, z})), 1e-12);
        }
    }
}
