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

#ifndef CLUSTERLAB_MUTATION_SEED_H_
#define CLUSTERLAB_MUTATION_SEED_H_

#include <span>
#include <stdexcept>
#include <vector>

#include "clusterlab/algebra/int_matrix.h"
#include "clusterlab/algebra/laurent.h"
#include "clusterlab/algebra/semifield.h"

namespace clusterlab::mutation {

using algebra::IntMatrix;
using algebra::LaurentPolynomial;
using algebra::TropicalMonomial;

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A seed with principal coefficients. Cluster entries are Laurent
// polynomials in the initial x_i and y_i; coeffs[j] is the tropical
// coefficient yhat_j in Trop(y_1..y_n).
struct Seed {
  IntMatrix B;
  std::vector<LaurentPolynomial> cluster;
  std::vector<TropicalMonomial> coeffs;

  std::size_t rank() const { return cluster.size(); }
  friend bool operator==(const Seed&, const Seed&) = default;
};

// Throws std::invalid_argument if B is not skew-symmetric.
Seed InitialSeed(const IntMatrix& B);

IntMatrix MutateMatrix(const IntMatrix& B, int k);

// Mutation at k (1-based). Throws std::out_of_range for a bad index and
// std::logic_error if the exchange relation does not divide exactly.
Seed Mutate(const Seed& s, int k);
Seed MutateSeq(const Seed& s, std::span<const int> ks);

// Rank over the rationals.
int MatrixRank(const IntMatrix& B);

// Shortest mutation sequence whose last mutated variable equals `target`,
// lexicographically smallest among those; empty if `target` is already in
// the cluster. Seeds are deduplicated by the multiset of their cluster
// variables. Throws NotFound past `depth` and std::invalid_argument for
// depth > 10.
std::vector<int> FindMutationSequence(const Seed& s0,
                                      const LaurentPolynomial& target,
                                      int depth);

}  // namespace clusterlab::mutation

#endif  // CLUSTERLAB_MUTATION_SEED_H_
