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

#ifndef ZGSIM_WIGNER_STATE_H
#define ZGSIM_WIGNER_STATE_H

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "zgsim/affine_map.h"
#include "zgsim/code_params.h"
#include "zgsim/gkp_theta.h"
#include "zgsim/quadrature.h"
#include "zgsim/qudit.h"
#include "zgsim/siegel_theta.h"

namespace zgsim {

/// Samples are drawn in fixed chunks; chunk k uses its own generator seeded from
/// (seed, k), so output does not depend on the thread count.
constexpr size_t kSampleChunk = 4096;

struct NegativityResult {
    double negativity = 1;
    double error_estimate = 0;
    bool converged = true;
};

/// Single-mode W in the theta-series layout (see ThetaFourierSeries), on the grid
/// eta_xs (rows) x eta_zs (cols).
Eigen::MatrixXd series_grid(const ThetaFourierSeries &series, const CodeParams &params,
                            const std::vector<double> &eta_xs, const std::vector<double> &eta_zs);
double series_value(const ThetaFourierSeries &series, const CodeParams &params, double eta_x, double eta_z);

/// M = int W + 2 int max(-W, 0) over the torus; int W comes from the constant
/// coefficient, the negative part from adaptive quadrature.
NegativityResult series_negativity(const ThetaFourierSeries &series, const CodeParams &params,
                                   double abs_tol = 1e-10);

/// int W over the torus by adaptive quadrature.
QuadratureResult series_integral(const ThetaFourierSeries &series, const CodeParams &params, double abs_tol = 1e-9);

/// Rejection sampler for |W| / M against a piecewise-constant envelope. Each
/// cell's envelope is |W(center)| + (h/2)(L_X + L_Z) + tol, an upper bound on |W|
/// over the cell given the global Lipschitz bounds L of the series.
class EnvelopeSampler {
   public:
    static constexpr double kMinEfficiency = 0.01;
    static constexpr int kBaseResolution = 256;
    static constexpr int kMaxResolution = 2048;

    /// Doubles the grid until the expected acceptance rate reaches kMinEfficiency;
    /// throws SamplerEfficiency past kMaxResolution.
    static EnvelopeSampler build(const ThetaFourierSeries &series, const CodeParams &params, double negativity,
                                 double tol);

    int resolution() const {
        return res_;
    }
    /// int |W| / (envelope mass).
    double expected_efficiency() const {
        return efficiency_;
    }

    struct Draw {
        double eta_x;
        double eta_z;
        double value;
    };
    /// One accepted point; throws SamplerEfficiency after too many rejections in a row.
    Draw draw(std::mt19937_64 &rng, const ThetaFourierSeries &series, const CodeParams &params) const;

   private:
    int res_ = 0;
    double h_ = 0;
    double efficiency_ = 0;
    std::vector<double> envelope_;    // row-major (x cell, z cell)
    std::vector<double> cumulative_;  // running envelope sums
};

/// A single-mode input: an ideal lattice distribution or a realistic GKP state.
class ModeFactor {
   public:
    enum class Kind { kIdeal, kRealistic };

    /// Encoded qudit density (d x d); the table is its normalized Gross Wigner function.
    static ModeFactor ideal(const CodeParams &mode_params, const DenseOperator &rho);
    static ModeFactor ideal_logical(const CodeParams &mode_params, int j);
    /// `tol` bounds the theta truncation error of every value.
    static ModeFactor realistic(const RealisticGkpSpec &spec, double tol = 1e-14, double negativity_tol = 1e-10);

    Kind kind() const {
        return kind_;
    }
    const CodeParams &params() const {
        return params_;
    }
    double negativity() const {
        return negativity_;
    }
    /// Normalized table over Z_d^2, index x + d z (ideal factors only).
    const std::vector<double> &table() const;
    const GkpThetaWigner &wigner() const;
    const NegativityResult &negativity_detail() const;
    const EnvelopeSampler &sampler() const;

    /// Ideal: weight of the atom at eta (0 off the lattice). Realistic: W(eta).
    double value(double eta_x, double eta_z) const;

    struct Draw {
        double eta_x;
        double eta_z;
        int sign;
    };
    Draw sample(std::mt19937_64 &rng) const;

   private:
    struct Realistic;

    Kind kind_ = Kind::kIdeal;
    CodeParams params_;
    double negativity_ = 1;
    std::vector<double> table_;
    std::vector<double> cumulative_;  // of |table|
    std::shared_ptr<const Realistic> realistic_;
};

struct PhaseSample {
    PhasePoint eta;
    int sign = 1;
};

/// Product input plus the accumulated affine evolution. Immutable; apply_*
/// return new states sharing the factors.
class WignerState {
   public:
    WignerState(const CodeParams &params, std::vector<ModeFactor> factors);

    const CodeParams &params() const {
        return params_;
    }
    const std::vector<ModeFactor> &factors() const {
        return *factors_;
    }
    const AffineMap &map() const {
        return map_;
    }
    bool all_ideal() const;

    WignerState apply_gate(const GateTag &tag) const;
    WignerState apply_symplectic(const IntSymplectic &s) const;
    WignerState apply_displacement(const std::vector<double> &c) const;

    /// Evolved W at eta: product of factor values at the pulled-back point.
    double evaluate(const PhasePoint &eta) const;
    /// Product of the factor negativities.
    double negativity() const;

    /// count points from |W| / M pushed forward through the map, with sign(W).
    std::vector<PhaseSample> sample_abs(uint64_t seed, size_t count, int threads = 1) const;
    /// Chunk `chunk` of the stream (at most kSampleChunk points).
    std::vector<PhaseSample> sample_chunk(uint64_t seed, size_t chunk, size_t count) const;

   private:
    CodeParams params_;
    std::shared_ptr<const std::vector<ModeFactor>> factors_;
    AffineMap map_;

    WignerState(const CodeParams &params, std::shared_ptr<const std::vector<ModeFactor>> factors, AffineMap map)
        : params_(params), factors_(std::move(factors)), map_(std::move(map)) {
    }
};

/// Evolved W of a one-mode realistic state as a series in the same layout:
/// coefficient C_a moves to S^{-1} a with phase exp(-i ell [a, t + ell S c]).
ThetaFourierSeries evolved_series(const WignerState &state);

WignerState ideal_input(const CodeParams &params, const std::vector<DenseOperator> &rhos);
WignerState ideal_input_logical(const CodeParams &params, const std::vector<int> &logicals);
WignerState realistic_input(const CodeParams &params, const std::vector<RealisticGkpSpec> &specs,
                            double tol = 1e-14);

/// Generator for chunk `chunk` of the stream with master seed `seed`.
std::mt19937_64 chunk_rng(uint64_t seed, size_t chunk);

/// Runs body(chunk) for chunk in [0, chunks) on up to `threads` workers; worker
/// w handles chunks w, w + threads, ...
void parallel_chunks(size_t chunks, int threads, const std::function<void(size_t)> &body);

}  // namespace zgsim

#endif
