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

#include "zgsim/int_matrix.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "zgsim/errors.h"

namespace zgsim {

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorKind::kInvalidArgument, "integer overflow in matrix arithmetic");
    }
    return r;
}

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorKind::kInvalidArgument, "integer overflow in matrix arithmetic");
    }
    return r;
}

IntMatrix IntMatrix::identity(int size) {
    IntMatrix m(size, size);
    for (int i = 0; i < size; i++) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int64_t>> &rows) {
    int r = (int)rows.size();
    int c = r ? (int)rows[0].size() : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; i++) {
        if ((int)rows[i].size() != c) {
            throw Error(ErrorKind::kInvalidArgument, "ragged matrix rows");
        }
        for (int j = 0; j < c; j++) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix &other) const {
    if (cols_ != other.rows_) {
        throw Error(ErrorKind::kInvalidArgument, "matrix shape mismatch");
    }
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; i++) {
        for (int k = 0; k < cols_; k++) {
            int64_t a = (*this)(i, k);
            if (a == 0) {
                continue;
            }
            for (int j = 0; j < other.cols_; j++) {
                out(i, j) = checked_add(out(i, j), checked_mul(a, other(k, j)));
            }
        }
    }
    return out;
}

std::vector<int64_t> IntMatrix::operator*(const std::vector<int64_t> &v) const {
    if ((int)v.size() != cols_) {
        throw Error(ErrorKind::kInvalidArgument, "matrix-vector shape mismatch");
    }
    std::vector<int64_t> out(rows_, 0);
    for (int i = 0; i < rows_; i++) {
        for (int k = 0; k < cols_; k++) {
            out[i] = checked_add(out[i], checked_mul((*this)(i, k), v[k]));
        }
    }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; i++) {
        for (int j = 0; j < cols_; j++) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

int64_t IntMatrix::max_abs() const {
    int64_t m = 0;
    for (int64_t v : data_) {
        m = std::max<int64_t>(m, std::llabs(v));
    }
    return m;
}

std::vector<std::vector<int64_t>> IntMatrix::to_rows() const {
    std::vector<std::vector<int64_t>> out(rows_, std::vector<int64_t>(cols_));
    for (int i = 0; i < rows_; i++) {
        for (int j = 0; j < cols_; j++) {
            out[i][j] = (*this)(i, j);
        }
    }
    return out;
}

std::string IntMatrix::str() const {
    std::ostringstream s;
    s << "[";
    for (int i = 0; i < rows_; i++) {
        s << (i ? ", [" : "[");
        for (int j = 0; j < cols_; j++) {
            s << (j ? ", " : "") << (*this)(i, j);
        }
        s << "]";
    }
    s << "]";
    return s.str();
}

}  // namespace zgsim
