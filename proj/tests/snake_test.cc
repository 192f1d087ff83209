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

#include <algorithm>
#include <memory>
#include <set>
#include <vector>

#include "clusterlab/algebra/laurent.h"
#include "clusterlab/mutation/seed.h"
#include "clusterlab/snake/graph.h"
#include "clusterlab/snake/graph_json.h"
#include "clusterlab/snake/matchings.h"
#include "clusterlab/surface/builtin.h"
#include "clusterlab/verify/search.h"
#include "doctest.h"

namespace {

using namespace clusterlab;
using namespace clusterlab::snake;
using surface::ArcCrossing;
using surface::LoopCrossing;

std::shared_ptr<const surface::Triangulation> G1() {
  static const auto t =
      std::make_shared<const surface::Triangulation>(surface::BuiltinGenus1());
  return t;
}

std::shared_ptr<const surface::Triangulation> G2() {
  static const auto t =
      std::make_shared<const surface::Triangulation>(surface::BuiltinGenus2());
  return t;
}

ArcCrossing Arc(std::vector<int> a) { return {std::move(a), std::nullopt}; }

bool IsZero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int e) { return e == 0; });
}

}  // namespace

TEST_CASE("single tile") {
  const SnakeGraph s = BuildSnake(G1(), Arc({1}));
  CHECK(s.size() == 1);
  CHECK(s.glue_dirs().empty());
  const auto ms = EnumerateMatchings(s);
  REQUIRE(ms.size() == 2);
  CHECK(IsZero(ms[0].weight.y));
  CHECK(ms[1].weight.y == std::vector<int>{1, 0, 0, 0});
  const PerfectMatching min = MinimalMatching(s);
  const auto& te = s.graph().tile_edges[0];
  CHECK(min.edges == std::vector<int>{std::min(te[kSouth], te[kNorth]),
                                      std::max(te[kSouth], te[kNorth])});
  // (y1 x2^2 + x3 x4) / x1, the exchange relation at arc 1.
  const auto expected =
      algebra::ParseLaurent("x1^-1 * x2^2 * y1 + x1^-1 * x3 * x4", 4, 4);
  CHECK(Expand(s) == expected);
  const auto seed = mutation::InitialSeed(surface::ExchangeMatrix(*G1()));
  CHECK(mutation::Mutate(seed, 1).cluster[0] == expected);
  CHECK(Expand(s, Coefficients::kTrivial) ==
        algebra::ParseLaurent("x1^-1 * x2^2 + x1^-1 * x3 * x4", 4, 4));
}

TEST_CASE("tile labels come from the adjacent triangles") {
  for (const auto& arcs : verify::EnumerateArcCrossings(*G2(), 6)) {
    const SnakeGraph s = BuildSnake(G2(), arcs);
    REQUIRE(s.size() == arcs.arcs.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
      const Tile& tile = s.tiles()[j];
      CHECK(tile.diagonal == arcs.arcs[j]);
      CHECK(tile.sign == (j % 2 == 0 ? 1 : -1));
      std::multiset<surface::SideRef> from_tile(tile.labels.begin(),
                                                tile.labels.end());
      std::multiset<surface::SideRef> from_triangles;
      for (const surface::Slot& sl : {tile.lower, tile.upper}) {
        const auto& tri = s.triangulation().triangles()[sl.triangle];
        for (int k = 0; k < 3; ++k) {
          if (k != sl.side) from_triangles.insert(tri[k]);
        }
      }
      CHECK(from_tile == from_triangles);
      if (j + 1 < s.size()) {
        // The shared edge carries the third side of the common triangle.
        const surface::Slot up = tile.upper;
        const surface::Slot next = s.tiles()[j + 1].lower;
        REQUIRE(up.triangle == next.triangle);
        const auto third =
            s.triangulation().triangles()[up.triangle][3 - up.side - next.side];
        const TileEdge glue =
            s.glue_dirs()[j] == GlueDir::kNorth ? kNorth : kEast;
        CHECK(tile.label(glue) == third);
      }
    }
  }
}

TEST_CASE("snake sizes") {
  CHECK(BuildSnake(G1(), Arc({1, 3})).size() == 2);
  const SnakeGraph v1 = BuildSnake(G1(), Arc({4, 2, 1, 4}));
  CHECK(v1.size() == 4);
  CHECK(v1.tiles().front().diagonal == 4);
  CHECK(v1.tiles().back().diagonal == 4);
  CHECK_THROWS_AS(BuildSnake(G1(), Arc({3, 3})), surface::InvalidCrossing);
  // Perfect matchings of a 2-tile snake: 3, with the minimal one avoiding
  // the shared edge.
  const SnakeGraph u1 = BuildSnake(G1(), Arc({1, 3}));
  const auto ms = EnumerateMatchings(u1);
  CHECK(ms.size() == 3);
  const int shared =
      u1.graph()
          .tile_edges[0][u1.glue_dirs()[0] == GlueDir::kNorth ? kNorth : kEast];
  const auto min = MinimalMatching(u1);
  CHECK(std::find(min.edges.begin(), min.edges.end(), shared) ==
        min.edges.end());
}

TEST_CASE("trim to band") {
  const SnakeGraph v1 = BuildSnake(G1(), Arc({4, 2, 1, 4}));
  const BandGraph x1 = TrimToBand(v1);
  CHECK(x1.size() == 2);
  CHECK(x1.crossing() == std::vector<int>{2, 1});
  const SnakeGraph g2v1 =
      BuildSnake(G2(), Arc({8, 9, 10, 2, 1, 10, 4, 6, 3, 8}));
  CHECK(TrimToBand(g2v1).size() == 8);
  CHECK_THROWS_AS(TrimToBand(BuildSnake(G1(), Arc({1, 3}))),
                  std::invalid_argument);
  CHECK_THROWS_AS(TrimToBand(BuildSnake(G1(), Arc({4, 2, 1}))),
                  std::invalid_argument);
}

TEST_CASE("band graphs") {
  const BandGraph l1 = BuildBand(G1(), surface::BoundaryLoop(*G1()));
  CHECK(l1.size() == 8);
  CHECK(BuildBand(G2(), surface::BoundaryLoop(*G2())).size() == 20);
  const auto annulus =
      std::make_shared<const surface::Triangulation>(surface::BuiltinAnnulus());
  const BandGraph a = BuildBand(annulus, LoopCrossing{{1, 2}, std::nullopt});
  CHECK(a.size() == 2);
  CHECK(EnumerateMatchings(a).size() == 3);
  CHECK(ExpandBand(a, Coefficients::kTrivial) ==
        algebra::ParseLaurent("x1 * x2^-1 + x1^-1 * x2 + x1^-1 * x2^-1", 2, 2));
  CHECK_THROWS_AS(BuildBand(annulus, LoopCrossing{{1}, std::nullopt}),
                  surface::InvalidCrossing);
  // Quotient graph: one vertex and one edge fewer per glue.
  const TileGraph& g = l1.graph();
  CHECK(g.num_vertices == 2 * 8);
  CHECK(g.edges.size() == 3 * 8);
  CHECK(IsPerfectMatching(g, MinimalMatching(l1)));
}

TEST_CASE("matching weights") {
  for (const auto& arcs : verify::EnumerateArcCrossings(*G2(), 7)) {
    const SnakeGraph s = BuildSnake(G2(), arcs);
    const auto ms = EnumerateMatchings(s);
    int minimal = 0, maximal = 0;
    for (const auto& m : ms) {
      REQUIRE(IsPerfectMatching(s.graph(), m.matching));
      if (IsZero(m.weight.y)) ++minimal;
      // Maximal: every flippable tile is already up.
      bool top = true;
      for (std::size_t j = 0; j < s.size(); ++j) {
        const auto& te = s.graph().tile_edges[j];
        auto in = [&](int e) {
          return std::binary_search(m.matching.edges.begin(),
                                    m.matching.edges.end(), e);
        };
        const bool flippable = (in(te[kSouth]) && in(te[kNorth])) ||
                               (in(te[kWest]) && in(te[kEast]));
        if (flippable && m.heights[j] == 0) top = false;
      }
      if (top) ++maximal;
    }
    CHECK(minimal == 1);
    CHECK(maximal == 1);
    const auto p = Expand(s);
    CHECK(p.has_positive_coefficients());
    algebra::Coeff total = 0;
    for (std::size_t t = 0; t < p.num_terms(); ++t) total += p.coeff(t);
    CHECK(total == ms.size());
  }
}

TEST_CASE("snake expansions agree with mutation on short sequences") {
  const auto seed = mutation::InitialSeed(surface::ExchangeMatrix(*G1()));
  // x4 after mutating at 3 then 4 is the arc crossing 3 and 4.
  CHECK(mutation::MutateSeq(seed, std::vector<int>{3, 4}).cluster[3] ==
        Expand(BuildSnake(G1(), Arc({3, 4}))));
}

TEST_CASE("graph json") {
  const SnakeGraph s = BuildSnake(G1(), Arc({4, 2, 1, 4}));
  const auto j = ToJson(s);
  CHECK(j["tiles"].size() == 4);
  CHECK(j["glue_dirs"].size() == 3);
  CHECK(j["tiles"][0]["diagonal"] == 4);
  const auto b = ToJson(TrimToBand(s));
  CHECK(b.contains("glue"));
  CHECK(b["tiles"].size() == 2);
}
