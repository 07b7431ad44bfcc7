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

#ifndef ZGSIM_INT_MATRIX_H
#define ZGSIM_INT_MATRIX_H

#include <cstdint>
#include <string>
#include <vector>

namespace zgsim {

/// Dense row-major int64 matrix with overflow-checked products.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_((size_t)rows * cols, 0) {
    }
    static IntMatrix identity(int size);
    static IntMatrix from_rows(const std::vector<std::vector<int64_t>> &rows);

    int rows() const {
        return rows_;
    }
    int cols() const {
        return cols_;
    }
    int64_t &operator()(int r, int c) {
        return data_[(size_t)r * cols_ + c];
    }
    int64_t operator()(int r, int c) const {
        return data_[(size_t)r * cols_ + c];
    }

    IntMatrix operator*(const IntMatrix &other) const;
    std::vector<int64_t> operator*(const std::vector<int64_t> &v) const;
    IntMatrix transposed() const;
    bool operator==(const IntMatrix &other) const = default;

    int64_t max_abs() const;
    std::vector<std::vector<int64_t>> to_rows() const;
    std::string str() const;

   private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int64_t> data_;
};

int64_t checked_mul(int64_t a, int64_t b);
int64_t checked_add(int64_t a, int64_t b);

}  // namespace zgsim

#endif
