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

#include <memory>
#include <set>
#include <vector>

#include "clusterlab/snake/graph.h"
#include "clusterlab/snake/matchings.h"
#include "clusterlab/surface/builtin.h"
#include "clusterlab/verify/oracle.h"
#include "clusterlab/verify/search.h"
#include "doctest.h"

namespace {

using namespace clusterlab;
using namespace clusterlab::snake;

std::set<PerfectMatching> AsSet(const std::vector<WeightedMatching>& ms) {
  std::set<PerfectMatching> out;
  for (const auto& m : ms) out.insert(m.matching);
  return out;
}

}  // namespace

TEST_CASE("brute force on a bare square") {
  TileGraph g;
  g.num_vertices = 4;
  g.edges = {{0, 1, {}}, {2, 3, {}}, {0, 2, {}}, {1, 3, {}}};
  g.tile_edges = {{0, 1, 2, 3}};
  g.diagonals = {1};
  const auto all = verify::BruteForceMatchings(g);
  CHECK(all.size() == 2);
  const PerfectMatching horizontal{{0, 1}}, vertical{{2, 3}};
  CHECK(verify::RegionHeights(g, horizontal, vertical) ==
        std::vector<std::uint8_t>{1});
  CHECK(verify::RegionHeights(g, horizontal, horizontal) ==
        std::vector<std::uint8_t>{0});
}

TEST_CASE("flip closure equals brute force on surface snakes") {
  for (int genus : {1, 2}) {
    const auto t = std::make_shared<const surface::Triangulation>(
        surface::BuiltinGenus(genus));
    const int max_len = t->genus() == 1 ? 8 : 6;
    for (const auto& arcs : verify::EnumerateArcCrossings(*t, max_len)) {
      const SnakeGraph s = BuildSnake(t, arcs);
      const auto flips = EnumerateMatchings(s);
      const auto all = verify::BruteForceMatchings(s.graph());
      REQUIRE(AsSet(flips) ==
              std::set<PerfectMatching>(all.begin(), all.end()));
      const auto min = MinimalMatching(s);
      for (const auto& m : flips) {
        REQUIRE(verify::RegionHeights(s.graph(), min, m.matching) == m.heights);
      }
      REQUIRE(verify::OracleExpansion(s.graph(), min, t->n_arcs(),
                                      Coefficients::kPrincipal) == Expand(s));
    }
  }
}

TEST_CASE("good band matchings are the ones with region heights") {
  const auto g1 =
      std::make_shared<const surface::Triangulation>(surface::BuiltinGenus1());
  const auto annulus =
      std::make_shared<const surface::Triangulation>(surface::BuiltinAnnulus());
  std::vector<BandGraph> bands = {
      BuildBand(g1, surface::BoundaryLoop(*g1)),
      BuildBand(annulus, surface::LoopCrossing{{1, 2}, std::nullopt}),
      BuildBand(annulus, surface::LoopCrossing{{1, 2, 1, 2}, std::nullopt}),
      TrimToBand(
          BuildSnake(g1, surface::ArcCrossing{{4, 2, 1, 4}, std::nullopt})),
      TrimToBand(
          BuildSnake(g1, surface::ArcCrossing{{3, 1, 2, 3}, std::nullopt}))};
  // Closed crossings of genus 1 that trace back to their start.
  for (const auto& arcs : verify::EnumerateArcCrossings(*g1, 7)) {
    surface::LoopCrossing l{arcs.arcs, arcs.start};
    if (arcs.arcs.size() >= 2 && surface::IsValid(*g1, l)) {
      bands.push_back(BuildBand(g1, l));
    }
  }
  CHECK(bands.size() > 5);
  for (const BandGraph& b : bands) {
    CAPTURE(surface::SequenceToString(b.crossing()));
    const auto min = MinimalMatching(b);
    std::set<PerfectMatching> expected;
    for (const auto& m : verify::BruteForceMatchings(b.graph())) {
      if (verify::RegionHeights(b.graph(), min, m)) expected.insert(m);
    }
    const auto flips = EnumerateMatchings(b);
    CHECK(AsSet(flips) == expected);
    CHECK(verify::OracleExpansion(b.graph(), min,
                                  b.base().triangulation().n_arcs(),
                                  Coefficients::kPrincipal) == ExpandBand(b));
  }
}
