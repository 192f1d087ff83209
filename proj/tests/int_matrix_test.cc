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

#include "doctest.h"

using clusterlab::algebra::IntMatrix;

TEST_CASE("int matrix") {
  const auto m = IntMatrix::FromRows({{0, 1, -2}, {-1, 0, 3}, {2, -3, 0}});
  CHECK(m.is_square());
  CHECK(m.is_skew_symmetric());
  CHECK(m(1, 2) == 3);
  CHECK(IntMatrix::FromRows(m.ToRows()) == m);
  auto n = m;
  n(0, 1) = 2;
  CHECK_FALSE(n.is_skew_symmetric());
  CHECK_FALSE(IntMatrix(2, 3).is_skew_symmetric());
  CHECK(IntMatrix(2, 2).is_skew_symmetric());
  CHECK_THROWS(IntMatrix::FromRows({{1, 2}, {3}}));
  CHECK_FALSE(m.ToString().empty());
}
