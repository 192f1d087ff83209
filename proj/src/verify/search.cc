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

#include "clusterlab/verify/search.h"

#include <map>
#include <string>

#include "clusterlab/algebra/laurent.h"
#include "clusterlab/verify/cases.h"
#include "clusterlab/verify/fixtures.h"

namespace clusterlab::verify {
namespace {

using surface::ArcCrossing;
using surface::SideRef;
using surface::Slot;

void Walk(const surface::Triangulation& t, int max_len, Slot start,
          std::vector<int>& seq, std::vector<Slot>& lower,
          std::vector<ArcCrossing>& out) {
  const Slot cur = lower.back();
  const auto traced = surface::TraceFrom(t, seq, start);
  // Keep only walks that the tracer reproduces from the pinned start.
  if (traced && traced->lower == lower) out.push_back({seq, start});
  if (static_cast<int>(seq.size()) >= max_len) return;
  const Slot up = t.Partner(cur);
  for (int k = 0; k < 3; ++k) {
    const Slot next{up.triangle, k};
    if (k == up.side || !t.side(next).is_arc()) continue;
    seq.push_back(t.side(next).index);
    lower.push_back(next);
    Walk(t, max_len, start, seq, lower, out);
    seq.pop_back();
    lower.pop_back();
  }
}

}  // namespace

std::vector<ArcCrossing> EnumerateArcCrossings(const surface::Triangulation& t,
                                               int max_len) {
  std::vector<ArcCrossing> out;
  for (int a = 1; a <= t.n_arcs(); ++a) {
    for (const Slot& s : t.slots(SideRef::Arc(a))) {
      std::vector<int> seq{a};
      std::vector<Slot> lower{s};
      Walk(t, max_len, s, seq, lower, out);
    }
  }
  return out;
}

std::vector<WArcs> DeriveGenus2WArcs(int max_len) {
  const auto t = Genus2();
  const std::size_t n = 10;
  auto x = [&](std::size_t i) { return LaurentPolynomial::X(n, i); };
  auto y = [&](std::size_t i) { return LaurentPolynomial::Y(n, i); };

  const ArcCrossing u1{genus2::kU1, std::nullopt};
  const ArcCrossing u2{genus2::kU2, std::nullopt};
  const LaurentPolynomial X1 =
      ExpandTrimmed(t, ArcCrossing{genus2::kV1, std::nullopt});
  const LaurentPolynomial q = algebra::DivExact(
      ExpandArc(t, u1) * ExpandArc(t, u2) - x(7) - y(8) * X1, y(1));

  // One representative crossing per distinct expansion.
  std::map<std::string, std::pair<LaurentPolynomial, ArcCrossing>> by_poly;
  for (const ArcCrossing& a : EnumerateArcCrossings(*t, max_len)) {
    LaurentPolynomial p = ExpandArc(t, a);
    by_poly.try_emplace(algebra::ToString(p), std::move(p), a);
  }

  auto positive_or_zero = [](const LaurentPolynomial& p) {
    return p.is_zero() || p.has_positive_coefficients();
  };
  const LaurentPolynomial w3_factor = y(5) * y(6) * y(7) * x(1);
  std::vector<WArcs> found;
  for (const auto& [k1, e1] : by_poly) {
    const LaurentPolynomial r1 = q - e1.first;
    if (!positive_or_zero(r1)) continue;
    for (const auto& [k2, e2] : by_poly) {
      const LaurentPolynomial r2 = r1 - y(8) * e2.first;
      if (!positive_or_zero(r2)) continue;
      LaurentPolynomial w3;
      try {
        w3 = algebra::DivExact(r2, w3_factor);
      } catch (const algebra::NotDivisible&) {
        continue;
      }
      const auto it = by_poly.find(algebra::ToString(w3));
      if (it != by_poly.end()) {
        found.push_back({e1.second, e2.second, it->second.second});
      }
    }
  }
  return found;
}

}  // namespace clusterlab::verify
