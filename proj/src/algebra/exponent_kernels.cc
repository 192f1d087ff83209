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

#include "clusterlab/algebra/exponent_kernels.h"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace clusterlab::algebra {

#ifndef CLUSTERLAB_HAVE_AVX2
const ExponentKernels* Avx2Kernels() { return nullptr; }
#endif
#ifndef CLUSTERLAB_HAVE_NEON
const ExponentKernels* NeonKernels() { return nullptr; }
#endif

namespace {

const ExponentKernels* Detect() {
  const char* env = std::getenv("CLUSTERLAB_KERNELS");
  if (env != nullptr && std::string_view(env) == "scalar") {
    return &ScalarKernels();
  }
  if (const ExponentKernels* k = Avx2Kernels()) return k;
  if (const ExponentKernels* k = NeonKernels()) return k;
  return &ScalarKernels();
}

std::atomic<const ExponentKernels*>& Slot() {
  static std::atomic<const ExponentKernels*> slot{Detect()};
  return slot;
}

}  // namespace

const ExponentKernels& ActiveKernels() {
  return *Slot().load(std::memory_order_acquire);
}

void SetActiveKernels(const ExponentKernels& kernels) {
  Slot().store(&kernels, std::memory_order_release);
}

}  // namespace clusterlab::algebra
