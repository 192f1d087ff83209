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

// Acceptance checks, one line per criterion:
//   1  torus V-identity            6  genus-3 V-identity with solved Y
//   2  torus U-identity            7  annulus closed form vs brute force
//   3  trivial specializations     8  Chebyshev double wraps
//   4  genus-2 V- and U-identity   9  flip closure vs brute force
//   5  genus-2 mutation oracle    10  fuzz, involution and rank

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "clusterlab/snake/graph.h"
#include "clusterlab/surface/crossing.h"
#include "clusterlab/verify/cases.h"
#include "clusterlab/verify/fixtures.h"

namespace {

using namespace clusterlab::verify;

// Tile counts of the graphs an identity is built from.
CaseReport Shapes(const char* name,
                  std::shared_ptr<const clusterlab::surface::Triangulation> t,
                  const std::vector<int>& v1, const std::vector<int>& v2,
                  std::size_t snake_tiles, std::size_t loop_tiles,
                  std::size_t band_tiles) {
  namespace sn = clusterlab::snake;
  CaseReport r{name, Status::kPass, "", 0};
  const sn::SnakeGraph s1 = sn::BuildSnake(t, {v1, std::nullopt});
  const sn::SnakeGraph s2 = sn::BuildSnake(t, {v2, std::nullopt});
  const std::size_t loop =
      sn::BuildBand(t, clusterlab::surface::BoundaryLoop(*t)).size();
  const std::size_t b1 = sn::TrimToBand(s1).size(),
                    b2 = sn::TrimToBand(s2).size();
  if (s1.size() != snake_tiles || s2.size() != snake_tiles ||
      loop != loop_tiles || b1 != band_tiles || b2 != band_tiles) {
    r.status = Status::kFail;
    r.detail = "tiles " + std::to_string(s1.size()) + "/" +
               std::to_string(s2.size()) + ", loop " + std::to_string(loop) +
               ", bands " + std::to_string(b1) + "/" + std::to_string(b2);
  }
  return r;
}

struct Criterion {
  int id;
  const char* title;
  double budget_ms;
  std::function<std::vector<CaseReport>()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "torus V-identity, principal coefficients", 5e3,
       [] {
         return std::vector{CheckTorusV(),
                            Shapes("torus graphs", Genus1(), genus1::kV1,
                                   genus1::kV2, 4, 8, 2)};
       }},
      {2, "torus U-identity, principal coefficients", 5e3,
       [] { return std::vector{CheckTorusU()}; }},
      {3, "trivial specializations and tropical F-polynomials", 5e3,
       [] {
         return std::vector{CheckTorusV(Coefficients::kTrivial),
                            CheckTorusU(Coefficients::kTrivial),
                            CheckFPolynomials()};
       }},
      {4, "genus-2 V- and U-identities", 60e3,
       [] {
         return std::vector{CheckGenus2V(), CheckGenus2U(),
                            Shapes("genus-2 graphs", Genus2(), genus2::kV1,
                                   genus2::kV2, 10, 20, 8)};
       }},
      {5, "genus-2 mutation sequences match snake expansions", 60e3,
       [] { return std::vector{CheckGenus2Oracle()}; }},
      {6, "genus-3 V-identity with nonnegative Y", 300e3,
       [] { return std::vector{CheckGenusG(3)}; }},
      {7, "annulus band closed form by brute force", 5e3,
       [] { return std::vector{CheckAnnulus()}; }},
      {8, "double-wrap bands equal L^2 - 2", 60e3,
       [] {
         return std::vector{
             CheckChebyshev(Annulus(), {{1, 2}, std::nullopt}, 2),
             CheckChebyshev(Genus1(),
                            clusterlab::surface::BoundaryLoop(*Genus1()), 2)};
       }},
      {9, "flip closure equals brute force on fixture snakes", 60e3,
       [] { return std::vector{CheckMatchingOracle()}; }},
      {10, "fuzzed Laurentness, positivity, involution, rank", 120e3,
       [] { return std::vector{CheckFuzz(1, 100, 8, 1000)}; }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<CaseReport> reports = c.run();
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    bool ok = ms <= c.budget_ms;
    std::string notes;
    for (const CaseReport& r : reports) {
      if (r.status != Status::kPass) ok = false;
      if (r.status != Status::kPass || !r.detail.empty()) {
        notes += " [" + r.name + ": " + StatusName(r.status) +
                 (r.detail.empty() ? "" : ", " + r.detail) + "]";
      }
    }
    if (ms > c.budget_ms) notes += " [over time budget]";
    std::printf("%s criterion %2d: %s (%.1f ms)%s\n", ok ? "PASS" : "FAIL",
                c.id, c.title, ms, notes.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
