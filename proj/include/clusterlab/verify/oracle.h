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

#ifndef CLUSTERLAB_VERIFY_ORACLE_H_
#define CLUSTERLAB_VERIFY_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "clusterlab/snake/matchings.h"

namespace clusterlab::verify {

// Every perfect matching of `g`, by backtracking on the lowest uncovered
// vertex. Sorted.
std::vector<snake::PerfectMatching> BruteForceMatchings(
    const snake::TileGraph& g);

// Finds tile heights h in {0,1} such that m xor minimal is the mod-2
// boundary of the tiles with h = 1. Returns nullopt when no such region
// exists. Exhaustive; at most 24 tiles.
std::optional<std::vector<std::uint8_t>> RegionHeights(
    const snake::TileGraph& g, const snake::PerfectMatching& minimal,
    const snake::PerfectMatching& m);

// The expansion formula evaluated over brute-force matchings that admit
// region heights, with x- and y-weights recomputed from the edge labels.
// Independent of the flip closure; exhaustive, so keep graphs small.
algebra::LaurentPolynomial OracleExpansion(
    const snake::TileGraph& g, const snake::PerfectMatching& minimal,
    int n_arcs, snake::Coefficients c);

}  // namespace clusterlab::verify

#endif  // CLUSTERLAB_VERIFY_ORACLE_H_
