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

#ifndef CLUSTERLAB_TESTS_TEST_UTIL_H_
#define CLUSTERLAB_TESTS_TEST_UTIL_H_

#include <random>
#include <vector>

#include "clusterlab/algebra/laurent.h"

namespace clusterlab::testing {

// Up to `max_terms` terms with exponents in [-lo, hi] and coefficients in
// [-9, 9].
inline algebra::LaurentPolynomial RandomLaurent(std::mt19937_64& rng,
                                                std::size_t nx, std::size_t ny,
                                                int max_terms, int lo = 3,
                                                int hi = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> exp(-lo, hi);
  std::uniform_int_distribution<int> coeff(-9, 9);
  algebra::LaurentPolynomial p(nx, ny);
  const int k = terms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<int> x(nx), y(ny);
    for (auto& e : x) e = exp(rng);
    for (auto& e : y) e = exp(rng);
    p += algebra::LaurentPolynomial::Monomial(nx, ny, x, y, coeff(rng));
  }
  return p;
}

}  // namespace clusterlab::testing

#endif  // CLUSTERLAB_TESTS_TEST_UTIL_H_
