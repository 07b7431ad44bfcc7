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

#ifndef ZGSIM_SYMPLECTIC_H
#define ZGSIM_SYMPLECTIC_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zgsim/code_params.h"
#include "zgsim/int_matrix.h"

namespace zgsim {

enum class GateKind {
    kSum,
    kSumInv,
    kFourier,
    kFourierInv,
    kPhase,
    kPhaseInv,
    kCz,
    kCzInv,
};

/// A Clifford generator acting on mode i (and j for two-mode gates).
///
/// The associated matrix S is the action on displacement labels,
/// U^dagger T_a U = T_{S a}. SUM(i,j) adds the i position onto j; Phase(i) is
/// exp(i q^2 / 2); Fourier(i) maps position to momentum; CZ(i,j) is exp(i q_i q_j).
struct GateTag {
    GateKind kind;
    int i = 0;
    int j = -1;

    bool two_mode() const {
        return kind == GateKind::kSum || kind == GateKind::kSumInv || kind == GateKind::kCz ||
               kind == GateKind::kCzInv;
    }
    bool operator==(const GateTag &) const = default;
};

const char *gate_kind_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(const std::string &name);
std::string gate_to_string(const GateTag &tag);
GateTag inverse_gate(const GateTag &tag);

/// Validated element of Sp(2n, Z) in (X; Z) block order.
class IntSymplectic {
   public:
    /// Exact check of S^T Omega S = Omega. Throws NotSymplectic with the first bad entry.
    static IntSymplectic validate(const IntMatrix &m);
    /// Rejects non-integer entries before validating.
    static IntSymplectic validate_real(const std::vector<std::vector<double>> &rows);
    static IntSymplectic identity(int n);

    int n() const {
        return m_.rows() / 2;
    }
    const IntMatrix &matrix() const {
        return m_;
    }
    int64_t a(int r, int c) const {
        return m_(r, c);
    }
    int64_t b(int r, int c) const {
        return m_(r, n() + c);
    }
    int64_t c(int r, int c) const {
        return m_(n() + r, c);
    }
    int64_t d(int r, int c) const {
        return m_(n() + r, n() + c);
    }

    /// Omega^{-1} S^T Omega, exact.
    IntSymplectic inverse() const;
    IntSymplectic operator*(const IntSymplectic &other) const;
    std::vector<int64_t> operator*(const std::vector<int64_t> &v) const {
        return m_ * v;
    }
    bool operator==(const IntSymplectic &other) const = default;

   private:
    explicit IntSymplectic(IntMatrix m) : m_(std::move(m)) {
    }
    IntMatrix m_;
};

/// Applies the generator to `m` from the left (m <- G m) by row operations.
void apply_gate_left(const GateTag &tag, IntMatrix &m);

/// Matrix of a generator on n modes. Throws on out-of-range or repeated modes.
IntSymplectic gate_matrix(const GateTag &tag, int n);

/// Product S_{w_0} S_{w_1} ... of a word listed in circuit order.
IntSymplectic recompose(const std::vector<GateTag> &word, int n);

/// (diag(A^T C); diag(B^T D)).
std::vector<int64_t> t_bar(const IntSymplectic &s);

/// Covariance correction t = (pi/ell) S Omega^{-1} t_bar as integers h with
/// t = h * ell / 2, reduced into [0, 2d) so that t lies in [0, d*ell).
std::vector<int64_t> covariance_shift(const IntSymplectic &s, const CodeParams &params);

/// Converts half-ell integers to phase-space units.
std::vector<double> half_ell_to_real(const std::vector<int64_t> &h, const CodeParams &params);

/// (Sa)_X.(Sa)_Z == a_X.a_Z + t_bar.a (mod 2).
bool parity_identity_check(const IntSymplectic &s, const std::vector<int64_t> &a);

struct DecomposeOptions {
    size_t max_word_length = 1000000;
    /// Euclid steps allowed per (2n)^2 * (bit length of the largest entry); the
    /// default gives 10 (2n)^2 for matrices with entries in {-1, 0, 1}.
    size_t iterations_per_unit = 10;
};

/// Word over the generator set whose recomposition equals S exactly.
std::vector<GateTag> decompose(const IntSymplectic &s, const DecomposeOptions &options = {});

}  // namespace zgsim

#endif
