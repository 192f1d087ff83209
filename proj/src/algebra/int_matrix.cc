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

#include "clusterlab/algebra/int_matrix.h"

#include <stdexcept>

namespace clusterlab::algebra {

IntMatrix IntMatrix::FromRows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("IntMatrix: ragged rows");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> IntMatrix::ToRows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

std::string IntMatrix::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::string cell = std::to_string((*this)(i, j));
      out.append(cell.size() < 3 ? 3 - cell.size() : 0, ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

}  // namespace clusterlab::algebra
