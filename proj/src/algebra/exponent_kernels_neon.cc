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

// NEON row kernels (AArch64, where Advanced SIMD is mandatory).

#include <arm_neon.h>

#include "clusterlab/algebra/exponent_kernels.h"

namespace clusterlab::algebra {
namespace {

void AddNeon(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; i += 8) {
    vst1q_s16(out + i, vaddq_s16(vld1q_s16(a + i), vld1q_s16(b + i)));
  }
}

void SubNeon(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; i += 8) {
    vst1q_s16(out + i, vsubq_s16(vld1q_s16(a + i), vld1q_s16(b + i)));
  }
}

void MinNeon(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; i += 8) {
    vst1q_s16(out + i, vminq_s16(vld1q_s16(a + i), vld1q_s16(b + i)));
  }
}

int CompareNeon(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; i += 8) {
    const uint16x8_t eq = vceqq_s16(vld1q_s16(a + i), vld1q_s16(b + i));
    if (vminvq_u16(eq) != 0xffff) {
      for (std::size_t j = i; j < i + 8; ++j) {
        if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
      }
    }
  }
  return 0;
}

bool AllNonnegNeon(const Exp* a, std::size_t n) {
  int16x8_t acc = vdupq_n_s16(0);
  for (std::size_t i = 0; i < n; i += 8) acc = vminq_s16(acc, vld1q_s16(a + i));
  return vminvq_s16(acc) >= 0;
}

int MaxAbsNeon(const Exp* a, std::size_t n) {
  uint16x8_t acc = vdupq_n_u16(0);
  for (std::size_t i = 0; i < n; i += 8) {
    acc = vmaxq_u16(acc, vreinterpretq_u16_s16(vabsq_s16(vld1q_s16(a + i))));
  }
  return vmaxvq_u16(acc);
}

}  // namespace

const ExponentKernels* NeonKernels() {
  static const ExponentKernels kTable = {
      "neon", AddNeon, SubNeon, MinNeon, CompareNeon, AllNonnegNeon, MaxAbsNeon,
  };
  return &kTable;
}

}  // namespace clusterlab::algebra
