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

#ifndef ZGSIM_AFFINE_MAP_H
#define ZGSIM_AFFINE_MAP_H

#include <cstdint>
#include <vector>

#include "zgsim/code_params.h"
#include "zgsim/symplectic.h"

namespace zgsim {

/// Snap tolerance for lattice points, in units of ell.
constexpr double kLatticeSnap = 1e-9;

/// Accumulated evolution of a state: support points move as
///
///     eta' = S^{-1} (eta + t) + ell c     (mod d ell)
///
/// with t = t_half * ell / 2 kept as exact integers and c the accumulated
/// displacement exponent. The evolved Wigner function is
/// W'(eta') = W(S (eta' - ell c) - t).
class AffineMap {
   public:
    static AffineMap identity(const CodeParams &params);

    const CodeParams &params() const {
        return params_;
    }
    const IntSymplectic &s() const {
        return s_;
    }
    const IntSymplectic &s_inv() const {
        return s_inv_;
    }
    const std::vector<int64_t> &t_half() const {
        return t_half_;
    }
    const std::vector<double> &c() const {
        return c_;
    }

    /// Map after additionally applying the unitary with matrix `s`.
    AffineMap then_symplectic(const IntSymplectic &s) const;
    AffineMap then_gate(const GateTag &tag) const;
    /// Map after additionally applying the displacement T_c.
    AffineMap then_displacement(const std::vector<double> &c) const;

    /// Image of a support point, reduced onto the torus.
    PhasePoint pushforward(const PhasePoint &eta) const;
    /// Pre-image of eta under pushforward (reduced onto the torus).
    PhasePoint pullback(const PhasePoint &eta) const;
    /// Image of the lattice point ell*m, in units of ell, reduced into [0, d) and snapped.
    std::vector<double> pushforward_lattice(const std::vector<int64_t> &m) const;

    bool operator==(const AffineMap &other) const {
        return s_ == other.s_ && t_half_ == other.t_half_ && c_ == other.c_;
    }

   private:
    AffineMap(CodeParams params, IntSymplectic s, IntSymplectic s_inv, std::vector<int64_t> t_half,
              std::vector<double> c)
        : params_(params), s_(std::move(s)), s_inv_(std::move(s_inv)), t_half_(std::move(t_half)), c_(std::move(c)) {
    }

    CodeParams params_;
    IntSymplectic s_;
    IntSymplectic s_inv_;
    std::vector<int64_t> t_half_;
    std::vector<double> c_;
};

/// Forward image of a support point under the map.
PhasePoint apply_affine(const AffineMap &map, const PhasePoint &eta);

}  // namespace zgsim

#endif
