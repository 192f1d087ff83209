// Copyright 2026 The clusterlab Authors.
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

#ifndef CLUSTERLAB_ALGEBRA_INT_MATRIX_H_
#define CLUSTERLAB_ALGEBRA_INT_MATRIX_H_

#include <cstddef>
#include <string>
#include <vector>

namespace clusterlab::algebra {

// Dense row-major integer matrix. Indices are 0-based.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix FromRows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  int operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_square() const { return rows_ == cols_; }
  bool is_skew_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::vector<std::vector<int>> ToRows() const;
  std::string ToString() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<int> data_;
};

}  // namespace clusterlab::algebra

#endif  // CLUSTERLAB_ALGEBRA_INT_MATRIX_H_
