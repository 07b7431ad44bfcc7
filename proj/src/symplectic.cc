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

#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include "zgsim/errors.h"

namespace zgsim {

namespace {

struct KindName {
    GateKind kind;
    const char *name;
};

constexpr KindName kKindNames[] = {
    {GateKind::kSum, "SUM"},
    {GateKind::kSumInv, "SUM_inv"},
    {GateKind::kFourier, "Fourier"},
    {GateKind::kFourierInv, "Fourier_inv"},
    {GateKind::kPhase, "Phase"},
    {GateKind::kPhaseInv, "Phase_inv"},
    {GateKind::kCz, "CZ"},
    {GateKind::kCzInv, "CZ_inv"},
};

void check_modes(const GateTag &tag, int n) {
    if (tag.i < 0 || tag.i >= n) {
        throw Error(ErrorKind::kInvalidArgument, "mode index out of range in " + gate_to_string(tag));
    }
    if (tag.two_mode() && (tag.j < 0 || tag.j >= n || tag.j == tag.i)) {
        throw Error(ErrorKind::kInvalidArgument, "bad second mode index in " + gate_to_string(tag));
    }
}

// Row op: row[dst] += k * row[src].
void add_row(IntMatrix &m, int dst, int src, int64_t k) {
    for (int c = 0; c < m.cols(); c++) {
        m(dst, c) = checked_add(m(dst, c), checked_mul(k, m(src, c)));
    }
}

// (row_x, row_z) <- (row_z, -row_x).
void rotate_rows(IntMatrix &m, int x, int z) {
    for (int c = 0; c < m.cols(); c++) {
        int64_t tx = m(x, c);
        m(x, c) = m(z, c);
        m(z, c) = -tx;
    }
}

}  // namespace

const char *gate_kind_name(GateKind kind) {
    for (const auto &kn : kKindNames) {
        if (kn.kind == kind) {
            return kn.name;
        }
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(const std::string &name) {
    for (const auto &kn : kKindNames) {
        if (name == kn.name) {
            return kn.kind;
        }
    }
    return std::nullopt;
}

std::string gate_to_string(const GateTag &tag) {
    std::string s = std::string(gate_kind_name(tag.kind)) + "(" + std::to_string(tag.i);
    if (tag.two_mode()) {
        s += "," + std::to_string(tag.j);
    }
    return s + ")";
}

GateTag inverse_gate(const GateTag &tag) {
    GateTag out = tag;
    switch (tag.kind) {
        case GateKind::kSum:
            out.kind = GateKind::kSumInv;
            break;
        case GateKind::kSumInv:
            out.kind = GateKind::kSum;
            break;
        case GateKind::kFourier:
            out.kind = GateKind::kFourierInv;
            break;
        case GateKind::kFourierInv:
            out.kind = GateKind::kFourier;
            break;
        case GateKind::kPhase:
            out.kind = GateKind::kPhaseInv;
            break;
        case GateKind::kPhaseInv:
            out.kind = GateKind::kPhase;
            break;
        case GateKind::kCz:
            out.kind = GateKind::kCzInv;
            break;
        case GateKind::kCzInv:
            out.kind = GateKind::kCz;
            break;
    }
    return out;
}

IntSymplectic IntSymplectic::validate(const IntMatrix &m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
        throw Error(ErrorKind::kNotSymplectic, "matrix must be square with even, non-zero dimension");
    }
    int n = m.rows() / 2;
    // (S^T Omega S)_{ij} = sum_k S_{k,i} S_{n+k,j} - S_{n+k,i} S_{k,j}.
    for (int i = 0; i < 2 * n; i++) {
        for (int j = 0; j < 2 * n; j++) {
            int64_t v = 0;
            for (int k = 0; k < n; k++) {
                v = checked_add(v, checked_mul(m(k, i), m(n + k, j)));
                v = checked_add(v, -checked_mul(m(n + k, i), m(k, j)));
            }
            int64_t want = 0;
            if (j == i + n) {
                want = 1;
            } else if (i == j + n) {
                want = -1;
            }
            if (v != want) {
                throw Error(
                    ErrorKind::kNotSymplectic,
                    "S^T Omega S differs from Omega at (" + std::to_string(i) + "," + std::to_string(j) +
                        "): " + std::to_string(v) + " != " + std::to_string(want));
            }
        }
    }
    return IntSymplectic(m);
}

IntSymplectic IntSymplectic::validate_real(const std::vector<std::vector<double>> &rows) {
    std::vector<std::vector<int64_t>> ints(rows.size());
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t c = 0; c < rows[r].size(); c++) {
            double v = rows[r][c];
            if (!std::isfinite(v) || v != std::round(v) || std::abs(v) > 9e15) {
                throw Error(
                    ErrorKind::kNotSymplectic,
                    "NotInteger: entry (" + std::to_string(r) + "," + std::to_string(c) + ") is not an integer");
            }
            ints[r].push_back((int64_t)v);
        }
        if (rows[r].size() != rows.size()) {
            throw Error(ErrorKind::kNotSymplectic, "matrix must be square");
        }
    }
    return validate(IntMatrix::from_rows(ints));
}

IntSymplectic IntSymplectic::identity(int n) {
    return IntSymplectic(IntMatrix::identity(2 * n));
}

IntSymplectic IntSymplectic::inverse() const {
    // Omega^{-1} S^T Omega = ((D^T, -B^T), (-C^T, A^T)).
    int k = n();
    IntMatrix out(2 * k, 2 * k);
    for (int r = 0; r < k; r++) {
        for (int c = 0; c < k; c++) {
            out(r, c) = d(c, r);
            out(r, k + c) = -b(c, r);
            out(k + r, c) = -this->c(c, r);
            out(k + r, k + c) = a(c, r);
        }
    }
    return IntSymplectic(out);
}

IntSymplectic IntSymplectic::operator*(const IntSymplectic &other) const {
    return IntSymplectic(m_ * other.m_);
}

void apply_gate_left(const GateTag &tag, IntMatrix &m) {
    int n = m.rows() / 2;
    check_modes(tag, n);
    int xi = tag.i, zi = n + tag.i;
    int xj = tag.j, zj = n + tag.j;
    switch (tag.kind) {
        case GateKind::kFourier:
            rotate_rows(m, xi, zi);
            break;
        case GateKind::kFourierInv:
            rotate_rows(m, zi, xi);
            break;
        case GateKind::kPhase:
            add_row(m, zi, xi, -1);
            break;
        case GateKind::kPhaseInv:
            add_row(m, zi, xi, 1);
            break;
        case GateKind::kSum:
            add_row(m, xj, xi, -1);
            add_row(m, zi, zj, 1);
            break;
        case GateKind::kSumInv:
            add_row(m, xj, xi, 1);
            add_row(m, zi, zj, -1);
            break;
        case GateKind::kCz:
            add_row(m, zi, xj, -1);
            add_row(m, zj, xi, -1);
            break;
        case GateKind::kCzInv:
            add_row(m, zi, xj, 1);
            add_row(m, zj, xi, 1);
            break;
    }
}

IntSymplectic gate_matrix(const GateTag &tag, int n) {
    IntMatrix m = IntMatrix::identity(2 * n);
    apply_gate_left(tag, m);
    return IntSymplectic::validate(m);
}

IntSymplectic recompose(const std::vector<GateTag> &word, int n) {
    IntSymplectic s = IntSymplectic::identity(n);
    for (const auto &g : word) {
        s = s * gate_matrix(g, n);
    }
    return s;
}

std::vector<int64_t> t_bar(const IntSymplectic &s) {
    int n = s.n();
    std::vector<int64_t> t(2 * n, 0);
    for (int i = 0; i < n; i++) {
        for (int k = 0; k < n; k++) {
            t[i] = checked_add(t[i], checked_mul(s.a(k, i), s.c(k, i)));
            t[n + i] = checked_add(t[n + i], checked_mul(s.b(k, i), s.d(k, i)));
        }
    }
    return t;
}

std::vector<int64_t> covariance_shift(const IntSymplectic &s, const CodeParams &params) {
    int n = s.n();
    std::vector<int64_t> tb = t_bar(s);
    // Omega^{-1} (x; z) = (-z; x).
    std::vector<int64_t> w(2 * n);
    for (int i = 0; i < n; i++) {
        w[i] = -tb[n + i];
        w[n + i] = tb[i];
    }
    // (pi/ell) = (d/2) ell, so t = (d S w) * ell / 2.
    std::vector<int64_t> h = s * w;
    for (auto &v : h) {
        v = floor_mod(checked_mul(floor_mod(v, 2 * params.d), params.d), 2 * params.d);
    }
    return h;
}

std::vector<double> half_ell_to_real(const std::vector<int64_t> &h, const CodeParams &params) {
    std::vector<double> out(h.size());
    for (size_t i = 0; i < h.size(); i++) {
        out[i] = (double)h[i] * params.ell / 2;
    }
    return out;
}

bool parity_identity_check(const IntSymplectic &s, const std::vector<int64_t> &a) {
    int n = s.n();
    if ((int)a.size() != 2 * n) {
        throw Error(ErrorKind::kInvalidArgument, "vector length does not match S");
    }
    std::vector<int64_t> b = s * a;
    std::vector<int64_t> tb = t_bar(s);
    int64_t lhs = 0, rhs = 0;
    for (int k = 0; k < n; k++) {
        lhs += floor_mod(b[k], 2) * floor_mod(b[n + k], 2);
        rhs += floor_mod(a[k], 2) * floor_mod(a[n + k], 2);
    }
    for (int k = 0; k < 2 * n; k++) {
        rhs += floor_mod(tb[k], 2) * floor_mod(a[k], 2);
    }
    return floor_mod(lhs - rhs, 2) == 0;
}

namespace {

class Reducer {
   public:
    Reducer(const IntSymplectic &s, const DecomposeOptions &opt) : m_(s.matrix()), n_(s.n()), opt_(opt) {
        int64_t bits = std::max<int64_t>(1, std::bit_width((uint64_t)m_.max_abs()));
        iteration_cap_ = opt.iterations_per_unit * (size_t)(4 * n_ * n_) * (size_t)bits;
    }

    std::vector<GateTag> run() {
        for (int p = 0; p < n_; p++) {
            reduce_x_column(p);
            reduce_z_column(p);
        }
        if (!(m_ == IntMatrix::identity(2 * n_))) {
            throw Error(ErrorKind::kDecompositionFailed, "reduction did not reach the identity");
        }
        // G_k ... G_1 S = I, so S = G_1^{-1} ... G_k^{-1}.
        std::vector<GateTag> word;
        word.reserve(applied_.size());
        for (const auto &g : applied_) {
            word.push_back(inverse_gate(g));
        }
        return word;
    }

   private:
    int64_t x(int col, int mode) const {
        return m_(mode, col);
    }
    int64_t z(int col, int mode) const {
        return m_(n_ + mode, col);
    }

    void apply(GateKind kind, int i, int j = -1, int64_t times = 1) {
        for (int64_t r = 0; r < times; r++) {
            GateTag g{kind, i, j};
            apply_gate_left(g, m_);
            applied_.push_back(g);
            if (applied_.size() > opt_.max_word_length) {
                throw Error(
                    ErrorKind::kDecompositionFailed,
                    "word length exceeded " + std::to_string(opt_.max_word_length));
            }
        }
    }

    // Applies kind^k for k >= 0 and inverse^|k| otherwise.
    void apply_power(GateKind kind, GateKind inv, int i, int j, int64_t k) {
        if (k >= 0) {
            apply(kind, i, j, k);
        } else {
            apply(inv, i, j, -k);
        }
    }

    void tick() {
        if (++iterations_ > iteration_cap_) {
            throw Error(
                ErrorKind::kDecompositionFailed, "iteration cap " + std::to_string(iteration_cap_) + " reached");
        }
    }

    // Brings column X_p to e_{X_p} using gates on modes >= p.
    void reduce_x_column(int p) {
        int col = p;
        for (int q = p; q < n_; q++) {
            while (z(col, q) != 0) {
                tick();
                if (x(col, q) == 0) {
                    apply(GateKind::kFourier, q);
                    continue;
                }
                // Phase(q) maps z <- z - x.
                apply_power(GateKind::kPhase, GateKind::kPhaseInv, q, -1, z(col, q) / x(col, q));
                if (z(col, q) != 0) {
                    apply(GateKind::kFourier, q);
                }
            }
        }
        // Euclid across the X entries; SUM(q,r) maps x_r <- x_r - x_q.
        while (true) {
            tick();
            int pivot = -1;
            int nonzero = 0;
            for (int q = p; q < n_; q++) {
                if (x(col, q) != 0) {
                    nonzero++;
                    if (pivot < 0 || std::llabs(x(col, q)) < std::llabs(x(col, pivot))) {
                        pivot = q;
                    }
                }
            }
            if (pivot < 0) {
                throw Error(ErrorKind::kDecompositionFailed, "column vanished during reduction");
            }
            if (nonzero == 1) {
                if (pivot != p) {
                    apply(GateKind::kSumInv, pivot, p);
                    apply_power(GateKind::kSum, GateKind::kSumInv, p, pivot, x(col, pivot) / x(col, p));
                }
                break;
            }
            for (int r = p; r < n_; r++) {
                if (r != pivot && x(col, r) != 0) {
                    apply_power(GateKind::kSum, GateKind::kSumInv, pivot, r, x(col, r) / x(col, pivot));
                }
            }
        }
        if (x(col, p) == -1) {
            apply(GateKind::kFourier, p, -1, 2);
        }
        if (x(col, p) != 1) {
            throw Error(ErrorKind::kDecompositionFailed, "column is not primitive");
        }
    }

    // With column X_p = e_{X_p}, brings column Z_p to e_{Z_p} while fixing X_p.
    void reduce_z_column(int p) {
        int col = n_ + p;
        if (z(col, p) != 1) {
            throw Error(ErrorKind::kDecompositionFailed, "symplectic pairing broken");
        }
        for (int q = p + 1; q < n_; q++) {
            if (x(col, q) == 0 && z(col, q) == 0) {
                continue;
            }
            tick();
            // SUM(q,p) adds the unit Z_p entry onto Z_q and leaves X_p alone.
            apply(GateKind::kFourier, q);
            apply_power(GateKind::kSumInv, GateKind::kSum, q, p, z(col, q));
            apply(GateKind::kFourier, q);
            apply_power(GateKind::kSumInv, GateKind::kSum, q, p, z(col, q));
        }
        // Fourier^{-1} Phase^k Fourier is the shear x <- x + k z on mode p.
        int64_t k = -x(col, p);
        if (k != 0) {
            tick();
            apply(GateKind::kFourier, p);
            apply_power(GateKind::kPhase, GateKind::kPhaseInv, p, -1, k);
            apply(GateKind::kFourierInv, p);
        }
    }

    IntMatrix m_;
    int n_;
    DecomposeOptions opt_;
    size_t iteration_cap_ = 0;
    size_t iterations_ = 0;
    std::vector<GateTag> applied_;
};

}  // namespace

std::vector<GateTag> decompose(const IntSymplectic &s, const DecomposeOptions &options) {
    int n = s.n();
    if (s == IntSymplectic::identity(n)) {
        return {};
    }
    for (const auto &kn : kKindNames) {
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                GateTag g{kn.kind, i, j};
                if (g.two_mode() == (i == j)) {
                    continue;
                }
                if (!g.two_mode()) {
                    g.j = -1;
                }
                if (gate_matrix(g, n) == s) {
                    return {g};
                }
            }
        }
    }
    return Reducer(s, options).run();
}

}  // namespace zgsim
