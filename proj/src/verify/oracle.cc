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

#include "clusterlab/verify/oracle.h"

#include <algorithm>
#include <stdexcept>

namespace clusterlab::verify {
namespace {

void Extend(const snake::TileGraph& g,
            const std::vector<std::vector<int>>& incident,
            std::vector<char>& covered, std::vector<int>& chosen,
            std::vector<snake::PerfectMatching>& out) {
  const auto it = std::find(covered.begin(), covered.end(), 0);
  if (it == covered.end()) {
    snake::PerfectMatching m{chosen};
    std::sort(m.edges.begin(), m.edges.end());
    out.push_back(std::move(m));
    return;
  }
  const int v = static_cast<int>(it - covered.begin());
  for (int e : incident[v]) {
    const int w = g.edges[e].u == v ? g.edges[e].v : g.edges[e].u;
    if (covered[w]) continue;
    covered[v] = covered[w] = 1;
    chosen.push_back(e);
    Extend(g, incident, covered, chosen, out);
    chosen.pop_back();
    covered[v] = covered[w] = 0;
  }
}

}  // namespace

std::vector<snake::PerfectMatching> BruteForceMatchings(
    const snake::TileGraph& g) {
  std::vector<std::vector<int>> incident(g.num_vertices);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].u == g.edges[e].v) continue;
    incident[g.edges[e].u].push_back(static_cast<int>(e));
    incident[g.edges[e].v].push_back(static_cast<int>(e));
  }
  std::vector<char> covered(g.num_vertices, 0);
  std::vector<int> chosen;
  std::vector<snake::PerfectMatching> out;
  Extend(g, incident, covered, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::uint8_t>> RegionHeights(
    const snake::TileGraph& g, const snake::PerfectMatching& minimal,
    const snake::PerfectMatching& m) {
  const std::size_t d = g.tile_edges.size();
  if (d > 24) throw std::invalid_argument("RegionHeights: too many tiles");
  std::vector<char> target(g.edges.size(), 0);
  for (int e : minimal.edges) target[e] ^= 1;
  for (int e : m.edges) target[e] ^= 1;
  std::vector<char> parity(g.edges.size());
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::fill(parity.begin(), parity.end(), 0);
    for (std::size_t j = 0; j < d; ++j) {
      if (!((mask >> j) & 1u)) continue;
      for (int e : g.tile_edges[j]) parity[e] ^= 1;
    }
    if (parity == target) {
      std::vector<std::uint8_t> h(d);
      for (std::size_t j = 0; j < d; ++j) h[j] = (mask >> j) & 1u;
      return h;
    }
  }
  return std::nullopt;
}

algebra::LaurentPolynomial OracleExpansion(
    const snake::TileGraph& g, const snake::PerfectMatching& minimal,
    int n_arcs, snake::Coefficients c) {
  const std::size_t n = static_cast<std::size_t>(n_arcs);
  algebra::TermAccumulator acc(n, n);
  for (const auto& m : BruteForceMatchings(g)) {
    const auto h = RegionHeights(g, minimal, m);
    if (!h) continue;
    std::vector<int> x(n, 0), y(n, 0);
    for (int d : g.diagonals) --x[d - 1];
    for (int e : m.edges) {
      if (g.edges[e].label.is_arc()) ++x[g.edges[e].label.index - 1];
    }
    for (std::size_t j = 0; j < h->size(); ++j)
      y[g.diagonals[j] - 1] += (*h)[j];
    algebra::Exp* row = acc.scratch();
    std::fill(row, row + acc.stride(), algebra::Exp{0});
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = static_cast<algebra::Exp>(x[i]);
      if (c == snake::Coefficients::kPrincipal) {
        row[n + i] = static_cast<algebra::Exp>(y[i]);
      }
    }
    acc.Commit(1);
  }
  return std::move(acc).Finish();
}

}  // namespace clusterlab::verify
