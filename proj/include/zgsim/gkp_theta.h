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

#ifndef ZGSIM_GKP_THETA_H
#define ZGSIM_GKP_THETA_H

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "zgsim/code_params.h"
#include "zgsim/siegel_theta.h"

namespace zgsim {

/// Finitely squeezed single-mode GKP input,
///
///     psi(x) = sum_j c_j sum_k exp(-Delta^2 mu_jk^2 / 2) exp(-(x - mu_jk)^2 / (2 Delta^2)),
///     mu_jk = (j + d k) ell.
struct RealisticGkpSpec {
    enum class Kind { kLogical, kPhaseState, kSuperposition };

    int d = 3;
    double delta = 0.25;
    Kind kind = Kind::kLogical;
    int logical = 0;
    /// Real amplitudes c_j (length d); normalization is irrelevant.
    std::vector<double> coeffs;

    static RealisticGkpSpec logical_state(int d, double delta, int j);
    /// (|0> + |1> - |2>) / sqrt(3) for d = 3.
    static RealisticGkpSpec phase_state(double delta);
    static RealisticGkpSpec superposition(int d, double delta, std::vector<double> coeffs);

    void validate() const;
    std::string label() const;
    bool operator==(const RealisticGkpSpec &) const = default;
};

/// Affine map from a phase point (eta_X, eta_Z) to a complex theta argument.
struct ZMap {
    Eigen::VectorXcd offset;
    Eigen::VectorXcd per_eta_x;
    Eigen::VectorXcd per_eta_z;

    Eigen::VectorXcd at(double eta_x, double eta_z) const {
        return offset + eta_x * per_eta_x + eta_z * per_eta_z;
    }
};

struct ThetaForm {
    SiegelForm form;
    ZMap z;
};

/// Literal 4x4 form for the 0-logical state with z = (eta_Z, -eta_X, 0, 0) / (d ell).
ThetaForm gamma_zero_logical(const RealisticGkpSpec &spec);

/// One (j, j') cross term of a superposition:
///
///     c_j c_j' exp(log_prefactor) theta(Gamma, r(eta))
///
/// summed over j, j' and scaled by sqrt(pi) Delta / (2 pi) gives the unnormalized
/// Wigner function. The lattice index order is t = (a_X, a_Z, k, k').
struct ThetaCrossTerm {
    SiegelForm form;
    ZMap z;
    double log_prefactor = 0;
};
ThetaCrossTerm gamma_general(const RealisticGkpSpec &spec, int j, int jp);

/// sum_{jk, j'k'} c_j c_j' w w' sqrt(pi) Delta exp(-(mu - mu')^2 / (4 Delta^2)).
double gkp_norm_squared(const RealisticGkpSpec &spec);

struct WignerValue {
    double value = 0;
    double imag_residue = 0;
};

/// Normalized single-mode Wigner function of a realistic GKP state, stored as a
/// trigonometric polynomial whose coefficients come from the theta cross terms.
class GkpThetaWigner {
   public:
    /// `tol` bounds the absolute truncation error of every value.
    static GkpThetaWigner build(const RealisticGkpSpec &spec, double tol = 1e-14);

    const RealisticGkpSpec &spec() const {
        return spec_;
    }
    const CodeParams &params() const {
        return params_;
    }
    double tol() const {
        return tol_;
    }
    /// Constant turning the unnormalized theta sum into a unit-integral function.
    double normalization() const {
        return normalization_;
    }
    int radius() const {
        return series_.max_radius();
    }
    /// Coefficients indexed by (a_X, a_Z) with s0 = eta_Z / (d ell), s1 = -eta_X / (d ell).
    const ThetaFourierSeries &series() const {
        return series_;
    }

    WignerValue evaluate(double eta_x, double eta_z) const;
    /// Complex values on eta_xs (rows) x eta_zs (cols).
    Eigen::MatrixXcd evaluate_grid(const std::vector<double> &eta_xs, const std::vector<double> &eta_zs) const;
    /// Bounds on sup |dW/d eta_X| and sup |dW/d eta_Z|.
    double lipschitz_x() const;
    double lipschitz_z() const;
    /// Exact integral over the torus (the constant Fourier coefficient times area).
    double integral() const;

   private:
    RealisticGkpSpec spec_;
    CodeParams params_;
    double tol_ = 0;
    double normalization_ = 0;
    ThetaFourierSeries series_;
};

}  // namespace zgsim

#endif
