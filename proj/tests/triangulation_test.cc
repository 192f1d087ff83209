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

#include "clusterlab/surface/triangulation.h"

#include <algorithm>
#include <set>
#include <vector>

#include "clusterlab/mutation/seed.h"
#include "clusterlab/surface/builtin.h"
#include "clusterlab/surface/crossing.h"
#include "clusterlab/surface/surface_json.h"
#include "doctest.h"

namespace {

using namespace clusterlab::surface;
using clusterlab::algebra::IntMatrix;

Triangle Tri(int a, int b, int c) {
  auto side = [](int i) {
    return i > 0 ? SideRef::Arc(i) : SideRef::Boundary(-i);
  };
  return {side(a), side(b), side(c)};
}

}  // namespace

TEST_CASE("side tags") {
  CHECK(SideRef::Parse("A3") == SideRef::Arc(3));
  CHECK(SideRef::Parse("B1") == SideRef::Boundary(1));
  CHECK(SideRef::Arc(12).Tag() == "A12");
  CHECK_THROWS(SideRef::Parse("C1"));
  CHECK_THROWS(SideRef::Parse("A"));
}

TEST_CASE("builtin surfaces validate") {
  for (int g = 1; g <= 5; ++g) {
    const Triangulation t = BuiltinGenus(g);
    CAPTURE(g);
    CHECK(Validate(t).empty());
    CHECK(t.n_arcs() == 6 * g - 2);
    CHECK(3 * t.triangles().size() == 2u * t.n_arcs() + t.n_boundary());
  }
  CHECK(Validate(BuiltinAnnulus()).empty());
  CHECK(BuiltinGenus(1) == BuiltinGenus1());
  CHECK(BuiltinGenus(2) == BuiltinGenus2());
  CHECK(BuiltinByName("genus3") == BuiltinGenus(3));
  CHECK_THROWS(BuiltinByName("sphere"));
  CHECK_THROWS(BuiltinGenus(0));
}

TEST_CASE("validation catches malformed data") {
  CHECK_FALSE(Validate(Triangulation(1, 4, 1, 1, {})).empty());
  // Arc 3 used three times.
  CHECK_FALSE(
      Validate(Triangulation(1, 4, 1, 1,
                             {Tri(2, 1, 3), Tri(2, 1, 3), Tri(4, 3, -1)}))
          .empty());
  // Wrong arc count for the genus.
  CHECK_FALSE(
      Validate(Triangulation(2, 4, 1, 1, BuiltinGenus1().triangles())).empty());
}

TEST_CASE("genus-1 exchange matrix") {
  const Triangulation t = BuiltinGenus1();
  const IntMatrix B = ExchangeMatrix(t);
  // Hand computation from the triangle list.
  CHECK(B ==
        IntMatrix::FromRows(
            {{0, -2, 1, 1}, {2, 0, -1, -1}, {-1, 1, 0, -1}, {-1, 1, 1, 0}}));
  CHECK(std::abs(B(0, 1)) == 2);
  CHECK(clusterlab::mutation::MatrixRank(B) == 4);
  // The boundary triangle has arcs 3 and 4.
  std::set<int> boundary_arcs;
  for (const Triangle& tri : t.triangles()) {
    if (std::none_of(tri.begin(), tri.end(),
                     [](const SideRef& s) { return s.is_boundary(); })) {
      continue;
    }
    for (const SideRef& s : tri) {
      if (s.is_arc()) boundary_arcs.insert(s.index);
    }
  }
  CHECK(boundary_arcs == std::set<int>{3, 4});
}

TEST_CASE("exchange matrices are skew-symmetric of full rank") {
  for (int g = 1; g <= 4; ++g) {
    const IntMatrix B = ExchangeMatrix(BuiltinGenus(g));
    CHECK(B.is_skew_symmetric());
    CHECK(clusterlab::mutation::MatrixRank(B) == 6 * g - 2);
  }
}

TEST_CASE("genus-2 fixture triangles") {
  const Triangulation t = BuiltinGenus2();
  auto has = [&](std::set<SideRef> sides) {
    return std::any_of(
        t.triangles().begin(), t.triangles().end(), [&](const Triangle& tri) {
          return std::set<SideRef>(tri.begin(), tri.end()) == sides;
        });
  };
  CHECK(has({SideRef::Arc(3), SideRef::Arc(9), SideRef::Arc(8)}));
  CHECK(has({SideRef::Boundary(1), SideRef::Arc(8), SideRef::Arc(7)}));
  CHECK(has({SideRef::Arc(1), SideRef::Arc(2), SideRef::Arc(5)}));
  for (const auto& seq : {std::vector<int>{8, 9, 10, 2, 1, 10, 4, 6, 3, 8},
                          std::vector<int>{7, 4, 9, 3, 5, 2, 1, 5, 6, 7},
                          std::vector<int>{3, 6, 4, 10, 1, 5, 6, 7},
                          std::vector<int>{8, 9, 10, 2}}) {
    CHECK(IsValid(t, ArcCrossing{seq, std::nullopt}));
  }
}

TEST_CASE("crossing traces") {
  const Triangulation t = BuiltinGenus1();
  CHECK(IsValid(t, ArcCrossing{{4, 2, 1, 4}, std::nullopt}));
  CHECK(IsValid(t, ArcCrossing{{1}, std::nullopt}));
  CHECK_FALSE(IsValid(t, ArcCrossing{{}, std::nullopt}));
  CHECK_FALSE(IsValid(t, ArcCrossing{{5}, std::nullopt}));
  CHECK_FALSE(IsValid(t, ArcCrossing{{3, 3}, std::nullopt}));
  const CrossingPath p = Trace(t, ArcCrossing{{4, 2, 1, 4}, std::nullopt});
  REQUIRE(p.lower.size() == 4);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(t.Partner(p.lower[j]) == p.upper[j]);
    if (j + 1 < 4) CHECK(p.upper[j].triangle == p.lower[j + 1].triangle);
  }
  CHECK_THROWS_AS(Trace(t, ArcCrossing{{3, 3}, std::nullopt}), InvalidCrossing);
  CHECK(ParseSequence("4, 2,1,4") == std::vector<int>{4, 2, 1, 4});
  CHECK(SequenceToString(std::vector<int>{4, 2}) == "4,2");
  CHECK_THROWS(ParseSequence("4,,2"));
}

TEST_CASE("boundary loops") {
  const Triangulation g1 = BuiltinGenus1();
  const LoopCrossing l1 = BoundaryLoop(g1);
  CHECK(l1.arcs == std::vector<int>{3, 1, 2, 3, 4, 1, 2, 4});
  CHECK(IsValid(g1, l1));
  const LoopCrossing l2 = BoundaryLoop(BuiltinGenus2());
  CHECK(l2.arcs.size() == 20);
  CHECK(IsValid(BuiltinGenus2(), l2));
  for (int g = 1; g <= 4; ++g) {
    const Triangulation t = BuiltinGenus(g);
    const LoopCrossing l = BoundaryLoop(t);
    // Each arc has both ends at the single marked point.
    std::vector<int> count(t.n_arcs() + 1, 0);
    for (int a : l.arcs) ++count[a];
    CHECK(std::all_of(count.begin() + 1, count.end(),
                      [](int c) { return c == 2; }));
    CHECK(IsValid(t, l));
  }
  CHECK_THROWS_AS(BoundaryLoop(BuiltinAnnulus()), std::invalid_argument);
  CHECK(IsValid(BuiltinAnnulus(), LoopCrossing{{1, 2}, std::nullopt}));
  CHECK_FALSE(IsValid(BuiltinAnnulus(), LoopCrossing{{1}, std::nullopt}));
}

TEST_CASE("canonical rotation") {
  const LoopCrossing l{{3, 1, 2, 3, 4, 1, 2, 4}, std::nullopt};
  CHECK(l.CanonicalRotation().arcs == std::vector<int>{1, 2, 3, 4, 1, 2, 4, 3});
  CHECK(LoopCrossing{{2, 1}, std::nullopt}.CanonicalRotation().arcs ==
        std::vector<int>{1, 2});
}

TEST_CASE("surface json round trip") {
  for (int g = 1; g <= 4; ++g) {
    const Triangulation t = BuiltinGenus(g);
    CHECK(TriangulationFromJson(ToJson(t)) == t);
  }
  const auto j = ToJson(BuiltinGenus1());
  CHECK(j["triangles"][2][2] == "B1");
  auto bad = j;
  bad["triangles"][0][0] = "X1";
  CHECK_THROWS(TriangulationFromJson(bad));
}
