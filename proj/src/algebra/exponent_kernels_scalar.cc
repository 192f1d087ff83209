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

#include <algorithm>
#include <cstdlib>

#include "clusterlab/algebra/exponent_kernels.h"

namespace clusterlab::algebra {
namespace {

void AddScalar(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<Exp>(static_cast<std::uint16_t>(a[i]) +
                              static_cast<std::uint16_t>(b[i]));
  }
}

void SubScalar(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<Exp>(static_cast<std::uint16_t>(a[i]) -
                              static_cast<std::uint16_t>(b[i]));
  }
}

void MinScalar(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::min(a[i], b[i]);
}

int CompareScalar(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool AllNonnegScalar(const Exp* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < 0) return false;
  }
  return true;
}

int MaxAbsScalar(const Exp* a, std::size_t n) {
  int m = 0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(int{a[i]}));
  return m;
}

}  // namespace

const ExponentKernels& ScalarKernels() {
  static const ExponentKernels kTable = {
      "scalar",      AddScalar,       SubScalar,    MinScalar,
      CompareScalar, AllNonnegScalar, MaxAbsScalar,
  };
  return kTable;
}

}  // namespace clusterlab::algebra
