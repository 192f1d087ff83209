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

#ifndef CLUSTERLAB_ALGEBRA_EXPONENT_KERNELS_H_
#define CLUSTERLAB_ALGEBRA_EXPONENT_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace clusterlab::algebra {

using Exp = std::int16_t;

// Exponent rows are stored padded to a multiple of kRowLanes entries. The
// padding lanes are always zero, which every kernel below leaves invariant.
inline constexpr std::size_t kRowLanes = 16;

inline constexpr std::size_t PaddedWidth(std::size_t width) {
  return (width + kRowLanes - 1) / kRowLanes * kRowLanes;
}

// Row kernels over padded exponent rows of length `n` (a multiple of
// kRowLanes). Arithmetic wraps; callers check ranges with max_abs first.
struct ExponentKernels {
  const char* name;
  void (*add)(const Exp* a, const Exp* b, Exp* out, std::size_t n);
  void (*sub)(const Exp* a, const Exp* b, Exp* out, std::size_t n);
  void (*min)(const Exp* a, const Exp* b, Exp* out, std::size_t n);
  // Lexicographic comparison: negative, zero or positive.
  int (*compare)(const Exp* a, const Exp* b, std::size_t n);
  bool (*all_nonneg)(const Exp* a, std::size_t n);
  int (*max_abs)(const Exp* a, std::size_t n);
};

const ExponentKernels& ScalarKernels();

// Returns nullptr when the variant was not compiled in or the running CPU
// lacks the instructions.
const ExponentKernels* Avx2Kernels();
const ExponentKernels* NeonKernels();

// The table used by the polynomial code. Picks the widest supported variant
// on first use; CLUSTERLAB_KERNELS=scalar in the environment forces scalar.
const ExponentKernels& ActiveKernels();

// Overrides the active table. Intended for tests and benchmarks.
void SetActiveKernels(const ExponentKernels& kernels);

}  // namespace clusterlab::algebra

#endif  // CLUSTERLAB_ALGEBRA_EXPONENT_KERNELS_H_
