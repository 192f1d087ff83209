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

// AVX2 row kernels. This file is compiled with -mavx2 and only reached after
// a runtime CPU check, so nothing here may run at static-init time.

#include <immintrin.h>

#include "clusterlab/algebra/exponent_kernels.h"

namespace clusterlab::algebra {
namespace {

static_assert(kRowLanes == 16, "one __m256i per 16 int16 lanes");

inline __m256i Load(const Exp* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void Store(Exp* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void AddAvx2(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; i += kRowLanes) {
    Store(out + i, _mm256_add_epi16(Load(a + i), Load(b + i)));
  }
}

void SubAvx2(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; i += kRowLanes) {
    Store(out + i, _mm256_sub_epi16(Load(a + i), Load(b + i)));
  }
}

void MinAvx2(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; i += kRowLanes) {
    Store(out + i, _mm256_min_epi16(Load(a + i), Load(b + i)));
  }
}

int CompareAvx2(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; i += kRowLanes) {
    const __m256i eq = _mm256_cmpeq_epi16(Load(a + i), Load(b + i));
    const unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(eq));
    if (mask != 0xffffffffu) {
      // Two mask bits per lane.
      const std::size_t lane = __builtin_ctz(~mask) / 2;
      return a[i + lane] < b[i + lane] ? -1 : 1;
    }
  }
  return 0;
}

bool AllNonnegAvx2(const Exp* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t i = 0; i < n; i += kRowLanes) {
    acc = _mm256_or_si256(acc, Load(a + i));
  }
  // Sign bits survive the OR.
  return (_mm256_movemask_epi8(_mm256_srai_epi16(acc, 15)) == 0);
}

int MaxAbsAvx2(const Exp* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t i = 0; i < n; i += kRowLanes) {
    acc = _mm256_max_epu16(acc, _mm256_abs_epi16(Load(a + i)));
  }
  __m128i m = _mm_max_epu16(_mm256_castsi256_si128(acc),
                            _mm256_extracti128_si256(acc, 1));
  // minpos on the complement yields the unsigned maximum.
  m = _mm_minpos_epu16(_mm_xor_si128(m, _mm_set1_epi16(-1)));
  return 0xffff ^ (_mm_cvtsi128_si32(m) & 0xffff);
}

}  // namespace

const ExponentKernels* Avx2Kernels() {
  static const ExponentKernels kTable = {
      "avx2", AddAvx2, SubAvx2, MinAvx2, CompareAvx2, AllNonnegAvx2, MaxAbsAvx2,
  };
  static const bool kSupported = __builtin_cpu_supports("avx2");
  return kSupported ? &kTable : nullptr;
}

}  // namespace clusterlab::algebra
