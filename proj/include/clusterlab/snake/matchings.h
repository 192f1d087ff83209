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

#ifndef CLUSTERLAB_SNAKE_MATCHINGS_H_
#define CLUSTERLAB_SNAKE_MATCHINGS_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "clusterlab/algebra/laurent.h"
#include "clusterlab/snake/graph.h"

namespace clusterlab::snake {

enum class Coefficients { kPrincipal, kTrivial };

// Sorted edge ids of a TileGraph.
struct PerfectMatching {
  std::vector<int> edges;
  friend auto operator<=>(const PerfectMatching&,
                          const PerfectMatching&) = default;
};

// Exponent vectors indexed by arc (0-based). x counts matched edges per arc
// label; y counts tiles enclosed with the minimal matching per diagonal.
struct MatchingWeight {
  std::vector<int> x;
  std::vector<int> y;
};

struct WeightedMatching {
  PerfectMatching matching;
  std::vector<std::uint8_t> heights;  // per tile, 0 or 1
  MatchingWeight weight;
};

// Raised when two flip paths assign different heights to one matching.
class HeightConflict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool IsPerfectMatching(const TileGraph& g, const PerfectMatching& m);

PerfectMatching MinimalMatching(const SnakeGraph& s);
PerfectMatching MinimalMatching(const BandGraph& b);

// Breadth-first closure of the minimal matching under tile flips. For snake
// graphs this is every perfect matching; for band graphs it is the set of
// good matchings. The minimal matching comes first, then BFS order with
// tiles tried in order.
std::vector<WeightedMatching> EnumerateMatchings(const SnakeGraph& s);
std::vector<WeightedMatching> EnumerateMatchings(const BandGraph& b);

// (sum over matchings of x(P) y(P)) / (x_{i_1} ... x_{i_d}).
algebra::LaurentPolynomial Expand(const SnakeGraph& s,
                                  Coefficients c = Coefficients::kPrincipal);
algebra::LaurentPolynomial ExpandBand(
    const BandGraph& b, Coefficients c = Coefficients::kPrincipal);

}  // namespace clusterlab::snake

#endif  // CLUSTERLAB_SNAKE_MATCHINGS_H_
