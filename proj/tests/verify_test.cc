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

#include <stdexcept>
#include <string>

#include "clusterlab/algebra/laurent.h"
#include "clusterlab/snake/graph.h"
#include "clusterlab/snake/matchings.h"
#include "clusterlab/verify/cases.h"
#include "clusterlab/verify/fixtures.h"
#include "clusterlab/verify/search.h"
#include "doctest.h"
#include "json.hpp"

namespace {

using namespace clusterlab;
using namespace clusterlab::verify;
using surface::ArcCrossing;

ArcCrossing Arc(const std::vector<int>& a) { return {a, std::nullopt}; }

}  // namespace

TEST_CASE("every registered case passes") {
  for (const Case& c : Registry()) {
    const CaseReport r = c.run(CaseOptions{});
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.status == Status::kPass);
    CHECK(r.name == c.name);
  }
}

TEST_CASE("negative controls fail with a nonzero difference") {
  for (const CaseReport& r :
       {CheckTorusV(Coefficients::kPrincipal, Control::kPerturbX1),
        CheckTorusV(Coefficients::kTrivial, Control::kPerturbX1),
        CheckTorusU(Coefficients::kPrincipal, Control::kDropX3),
        CheckTorusU(Coefficients::kTrivial, Control::kDropX3)}) {
    CAPTURE(r.name);
    CHECK(r.status == Status::kFail);
    CHECK(r.detail.find("lhs - rhs = ") == 0);
    CHECK(r.detail != "lhs - rhs = 0");
  }
  const CaseReport drop =
      CheckTorusU(Coefficients::kPrincipal, Control::kDropX3);
  CHECK(drop.detail == "lhs - rhs = x3");
}

TEST_CASE("fuzz reports are deterministic per seed") {
  const CaseReport a = CheckFuzz(42, 20, 6, 50);
  const CaseReport b = CheckFuzz(42, 20, 6, 50);
  const CaseReport c = CheckFuzz(43, 20, 6, 50);
  CHECK(a.status == Status::kPass);
  CHECK(a.detail == b.detail);
  CHECK(a.detail != c.detail);
}

TEST_CASE("genus-g identities") {
  const GenusGIdentity g2 = SolveGenusG(2);
  CHECK(g2.y == genus2::kY);
  const GenusGIdentity g3 = SolveGenusG(3);
  CHECK(g3.v1.size() + g3.v2.size() == 2 * 16);
  for (int e : g3.y) CHECK(e >= 0);
}

TEST_CASE("genus-2 W arcs are the unique completion") {
  const auto found = DeriveGenus2WArcs(12);
  REQUIRE(found.size() == 1);
  const auto t = Genus2();
  CHECK(ExpandArc(t, found[0].w1) == ExpandArc(t, Arc(genus2::kW1)));
  CHECK(ExpandArc(t, found[0].w2) == ExpandArc(t, Arc(genus2::kW2)));
  CHECK(ExpandArc(t, found[0].w3) == ExpandArc(t, Arc(genus2::kW3)));
}

TEST_CASE("bangle products") {
  const auto t = Genus1();
  CHECK_THROWS_AS(BangleProduct(t, BangleSpec{}), std::invalid_argument);
  CHECK(BangleProduct(t, {{Arc(genus1::kU1)}}) ==
        ExpandArc(t, Arc(genus1::kU1)));
  CHECK(BangleProduct(t, {{Arc(genus1::kU1), Arc(genus1::kU2)}},
                      Coefficients::kTrivial) ==
        ExpandArc(t, Arc(genus1::kU1), Coefficients::kTrivial) *
            ExpandArc(t, Arc(genus1::kU2), Coefficients::kTrivial));
}

TEST_CASE("report plumbing") {
  CHECK_THROWS_AS(RunCases("no-such-case", {}), std::invalid_argument);
  CHECK(FindCase("torus-v") != nullptr);
  CHECK(FindCase("nope") == nullptr);
  const auto reports = RunCases("torus-u", {});
  REQUIRE(reports.size() == 1);
  const auto j = nlohmann::json::parse(ReportsToJson(reports));
  REQUIRE(j.is_array());
  CHECK(j[0]["name"] == "torus-u");
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0].contains("elapsed_ms"));
  CHECK(j[0].contains("detail"));
  CHECK(std::string(StatusName(Status::kSkipped)) == "skipped");
}
