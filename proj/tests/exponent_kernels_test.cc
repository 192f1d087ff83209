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

#include <random>
#include <vector>

#include "clusterlab/algebra/laurent.h"
#include "doctest.h"
#include "test_util.h"

namespace {

using namespace clusterlab::algebra;

std::vector<const ExponentKernels*> Variants() {
  std::vector<const ExponentKernels*> v;
  if (const auto* k = Avx2Kernels()) v.push_back(k);
  if (const auto* k = NeonKernels()) v.push_back(k);
  return v;
}

std::vector<Exp> RandomRow(std::mt19937_64& rng, std::size_t width,
                           std::size_t n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<Exp> row(n, 0);
  for (std::size_t i = 0; i < width; ++i) row[i] = static_cast<Exp>(d(rng));
  return row;
}

}  // namespace

TEST_CASE("padded width") {
  CHECK(PaddedWidth(0) == 0);
  CHECK(PaddedWidth(1) == 16);
  CHECK(PaddedWidth(16) == 16);
  CHECK(PaddedWidth(17) == 32);
}

TEST_CASE("scalar kernels") {
  const ExponentKernels& k = ScalarKernels();
  std::vector<Exp> a(16, 0), b(16, 0), out(16, 0);
  a[0] = 3;
  a[1] = -2;
  b[0] = 1;
  b[1] = 5;
  k.add(a.data(), b.data(), out.data(), 16);
  CHECK(out[0] == 4);
  CHECK(out[1] == 3);
  k.sub(a.data(), b.data(), out.data(), 16);
  CHECK(out[0] == 2);
  CHECK(out[1] == -7);
  k.min(a.data(), b.data(), out.data(), 16);
  CHECK(out[0] == 1);
  CHECK(out[1] == -2);
  CHECK(k.compare(a.data(), b.data(), 16) > 0);
  CHECK(k.compare(a.data(), a.data(), 16) == 0);
  CHECK_FALSE(k.all_nonneg(a.data(), 16));
  CHECK(k.all_nonneg(b.data(), 16));
  CHECK(k.max_abs(a.data(), 16) == 3);
  a[15] = -32768;
  CHECK(k.max_abs(a.data(), 16) == 32768);
}

TEST_CASE("vector kernels agree with scalar on random rows") {
  const auto variants = Variants();
  if (variants.empty()) {
    MESSAGE("no vector kernels on this machine");
    return;
  }
  const ExponentKernels& s = ScalarKernels();
  std::mt19937_64 rng(7);
  for (const ExponentKernels* v : variants) {
    CAPTURE(v->name);
    for (int trial = 0; trial < 2000; ++trial) {
      const std::size_t width = 1 + rng() % 70;
      const std::size_t n = PaddedWidth(width);
      const int range = trial % 3 == 0 ? 2 : 16000;
      std::vector<Exp> a = RandomRow(rng, width, n, range);
      std::vector<Exp> b = RandomRow(rng, width, n, range);
      // Force common prefixes so compare sees late differences.
      if (trial % 4 == 0) {
        b = a;
        b[rng() % width] += 1;
      }
      std::vector<Exp> o1(n), o2(n);
      s.add(a.data(), b.data(), o1.data(), n);
      v->add(a.data(), b.data(), o2.data(), n);
      REQUIRE(o1 == o2);
      s.sub(a.data(), b.data(), o1.data(), n);
      v->sub(a.data(), b.data(), o2.data(), n);
      REQUIRE(o1 == o2);
      s.min(a.data(), b.data(), o1.data(), n);
      v->min(a.data(), b.data(), o2.data(), n);
      REQUIRE(o1 == o2);
      const int c1 = s.compare(a.data(), b.data(), n);
      const int c2 = v->compare(a.data(), b.data(), n);
      REQUIRE((c1 > 0) == (c2 > 0));
      REQUIRE((c1 < 0) == (c2 < 0));
      REQUIRE(s.all_nonneg(a.data(), n) == v->all_nonneg(a.data(), n));
      REQUIRE(s.max_abs(a.data(), n) == v->max_abs(a.data(), n));
    }
  }
}

TEST_CASE("polynomial arithmetic is identical under every kernel table") {
  std::mt19937_64 rng(11);
  const ExponentKernels& saved = ActiveKernels();
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = clusterlab::testing::RandomLaurent(rng, 5, 5, 20);
    const auto q = clusterlab::testing::RandomLaurent(rng, 5, 5, 20);
    SetActiveKernels(ScalarKernels());
    const auto sum = p + q, prod = p * q;
    for (const ExponentKernels* v : Variants()) {
      SetActiveKernels(*v);
      CHECK(p + q == sum);
      CHECK(p * q == prod);
      CHECK(ToString(p * q) == ToString(prod));
    }
  }
  SetActiveKernels(saved);
}
