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

#include "zgsim/affine_map.h"

#include "zgsim/errors.h"

namespace zgsim {

namespace {

std::vector<double> int_times_real(const IntSymplectic &s, const std::vector<double> &v) {
    int dim = 2 * s.n();
    std::vector<double> out(dim, 0);
    for (int r = 0; r < dim; r++) {
        for (int k = 0; k < dim; k++) {
            int64_t e = s.matrix()(r, k);
            if (e != 0) {
                out[r] += (double)e * v[k];
            }
        }
    }
    return out;
}

}  // namespace

AffineMap AffineMap::identity(const CodeParams &params) {
    return AffineMap(params, IntSymplectic::identity(params.n), IntSymplectic::identity(params.n),
                     std::vector<int64_t>(2 * params.n, 0), std::vector<double>(2 * params.n, 0.0));
}

AffineMap AffineMap::then_symplectic(const IntSymplectic &s) const {
    if (s.n() != params_.n) {
        throw Error(ErrorKind::kInvalidArgument, "symplectic matrix size does not match mode count");
    }
    IntSymplectic s_inv = s.inverse();
    std::vector<int64_t> shift = covariance_shift(s, params_);
    std::vector<int64_t> moved = s_ * shift;
    std::vector<int64_t> t(t_half_.size());
    for (size_t i = 0; i < t.size(); i++) {
        t[i] = floor_mod(t_half_[i] + floor_mod(moved[i], 2 * params_.d), 2 * params_.d);
    }
    return AffineMap(params_, s_ * s, s_inv * s_inv_, std::move(t), int_times_real(s_inv, c_));
}

AffineMap AffineMap::then_gate(const GateTag &tag) const {
    return then_symplectic(gate_matrix(tag, params_.n));
}

AffineMap AffineMap::then_displacement(const std::vector<double> &c) const {
    if ((int)c.size() != 2 * params_.n) {
        throw Error(ErrorKind::kInvalidArgument, "displacement has wrong length");
    }
    std::vector<double> out(c_);
    for (size_t i = 0; i < out.size(); i++) {
        out[i] += c[i];
    }
    return AffineMap(params_, s_, s_inv_, t_half_, std::move(out));
}

PhasePoint AffineMap::pushforward(const PhasePoint &eta) const {
    int dim = 2 * params_.n;
    if ((int)eta.eta.size() != dim) {
        throw Error(ErrorKind::kInvalidArgument, "phase point has wrong length");
    }
    std::vector<double> shifted(dim);
    for (int i = 0; i < dim; i++) {
        shifted[i] = eta.eta[i] + (double)t_half_[i] * params_.ell / 2;
    }
    std::vector<double> out = int_times_real(s_inv_, shifted);
    for (int i = 0; i < dim; i++) {
        out[i] = wrap_torus(out[i] + params_.ell * c_[i], params_.torus_length());
    }
    return PhasePoint(std::move(out));
}

PhasePoint AffineMap::pullback(const PhasePoint &eta) const {
    int dim = 2 * params_.n;
    if ((int)eta.eta.size() != dim) {
        throw Error(ErrorKind::kInvalidArgument, "phase point has wrong length");
    }
    std::vector<double> shifted(dim);
    for (int i = 0; i < dim; i++) {
        shifted[i] = eta.eta[i] - params_.ell * c_[i];
    }
    std::vector<double> out = int_times_real(s_, shifted);
    for (int i = 0; i < dim; i++) {
        out[i] = wrap_torus(out[i] - (double)t_half_[i] * params_.ell / 2, params_.torus_length());
    }
    return PhasePoint(std::move(out));
}

std::vector<double> AffineMap::pushforward_lattice(const std::vector<int64_t> &m) const {
    int dim = 2 * params_.n;
    if ((int)m.size() != dim) {
        throw Error(ErrorKind::kInvalidArgument, "lattice point has wrong length");
    }
    // Exact in integers up to the final halving: S^{-1}(2m + t_half) / 2.
    std::vector<int64_t> doubled(dim);
    for (int i = 0; i < dim; i++) {
        doubled[i] = checked_add(checked_mul(2, m[i]), t_half_[i]);
    }
    std::vector<int64_t> img = s_inv_ * doubled;
    std::vector<double> out(dim);
    for (int i = 0; i < dim; i++) {
        double whole = (double)floor_mod(img[i], 2 * params_.d) / 2;
        out[i] = wrap_torus_snapped(whole + c_[i], params_.d, 1.0, kLatticeSnap);
    }
    return out;
}

PhasePoint apply_affine(const AffineMap &map, const PhasePoint &eta) {
    return map.pushforward(eta);
}

}  // namespace zgsim
