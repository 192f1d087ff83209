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

#include "clusterlab/snake/matchings.h"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace clusterlab::snake {
namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : b) {
      h = (h ^ w) * 0x100000001b3ull;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }
};

bool Test(const Bits& b, int e) { return (b[e >> 6] >> (e & 63)) & 1u; }
void Set(Bits& b, int e) { b[e >> 6] |= std::uint64_t{1} << (e & 63); }
void Clear(Bits& b, int e) { b[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

MatchingWeight Weigh(const TileGraph& g, const std::vector<int>& edges,
                     const std::vector<std::uint8_t>& heights, int n_arcs) {
  MatchingWeight w{std::vector<int>(n_arcs, 0), std::vector<int>(n_arcs, 0)};
  for (int e : edges) {
    const SideRef& l = g.edges[e].label;
    if (l.is_arc()) ++w.x[l.index - 1];
  }
  for (std::size_t j = 0; j < heights.size(); ++j) {
    if (heights[j]) w.y[g.diagonals[j] - 1] += heights[j];
  }
  return w;
}

std::vector<int> ToIds(const Bits& b) {
  std::vector<int> out;
  for (std::size_t w = 0; w < b.size(); ++w) {
    for (std::uint64_t x = b[w]; x != 0; x &= x - 1) {
      out.push_back(static_cast<int>(w * 64 + __builtin_ctzll(x)));
    }
  }
  return out;
}

std::vector<WeightedMatching> FlipClosure(const TileGraph& g,
                                          const std::vector<int>& minimal,
                                          int n_arcs) {
  const std::size_t words = (g.edges.size() + 63) / 64;
  const std::size_t d = g.tile_edges.size();
  Bits start(words, 0);
  for (int e : minimal) Set(start, e);

  std::vector<Bits> states{start};
  std::vector<std::vector<std::uint8_t>> heights{
      std::vector<std::uint8_t>(d, 0)};
  std::unordered_map<Bits, std::size_t, BitsHash> index{{start, 0}};
  for (std::size_t head = 0; head < states.size(); ++head) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto& te = g.tile_edges[j];
      // A tile flips when both horizontal or both vertical edges are matched.
      for (int pair = 0; pair < 2; ++pair) {
        const int a0 = te[pair == 0 ? kSouth : kWest];
        const int a1 = te[pair == 0 ? kNorth : kEast];
        const int b0 = te[pair == 0 ? kWest : kSouth];
        const int b1 = te[pair == 0 ? kEast : kNorth];
        const Bits& cur = states[head];
        if (!Test(cur, a0) || !Test(cur, a1)) continue;
        Bits next = cur;
        Clear(next, a0);
        Clear(next, a1);
        Set(next, b0);
        Set(next, b1);
        std::vector<std::uint8_t> h = heights[head];
        h[j] ^= 1;
        auto it = index.find(next);
        if (it != index.end()) {
          if (heights[it->second] != h) {
            throw HeightConflict(
                "flip closure reaches a matching with two "
                "different heights");
          }
          continue;
        }
        index.emplace(next, states.size());
        states.push_back(std::move(next));
        heights.push_back(std::move(h));
      }
    }
  }

  std::vector<WeightedMatching> out;
  out.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    WeightedMatching m;
    m.matching.edges = ToIds(states[i]);
    m.heights = std::move(heights[i]);
    m.weight = Weigh(g, m.matching.edges, m.heights, n_arcs);
    out.push_back(std::move(m));
  }
  return out;
}

algebra::LaurentPolynomial Sum(const std::vector<WeightedMatching>& ms,
                               const std::vector<int>& crossing, int n,
                               Coefficients c) {
  std::vector<int> denom(n, 0);
  for (int a : crossing) ++denom[a - 1];
  algebra::TermAccumulator acc(n, n, ms.size());
  for (const auto& m : ms) {
    algebra::Exp* row = acc.scratch();
    std::fill(row, row + acc.stride(), algebra::Exp{0});
    for (int i = 0; i < n; ++i) {
      row[i] = static_cast<algebra::Exp>(m.weight.x[i] - denom[i]);
      if (c == Coefficients::kPrincipal) {
        row[n + i] = static_cast<algebra::Exp>(m.weight.y[i]);
      }
    }
    acc.Commit(1);
  }
  return std::move(acc).Finish();
}

}  // namespace

bool IsPerfectMatching(const TileGraph& g, const PerfectMatching& m) {
  std::vector<int> cover(g.num_vertices, 0);
  for (int e : m.edges) {
    if (e < 0 || e >= static_cast<int>(g.edges.size())) return false;
    ++cover[g.edges[e].u];
    ++cover[g.edges[e].v];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

PerfectMatching MinimalMatching(const SnakeGraph& s) {
  PerfectMatching m{SnakeMinimalEdges(s)};
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

PerfectMatching MinimalMatching(const BandGraph& b) {
  PerfectMatching m{b.minimal_edges()};
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

std::vector<WeightedMatching> EnumerateMatchings(const SnakeGraph& s) {
  return FlipClosure(s.graph(), SnakeMinimalEdges(s),
                     s.triangulation().n_arcs());
}

std::vector<WeightedMatching> EnumerateMatchings(const BandGraph& b) {
  return FlipClosure(b.graph(), b.minimal_edges(),
                     b.base().triangulation().n_arcs());
}

algebra::LaurentPolynomial Expand(const SnakeGraph& s, Coefficients c) {
  return Sum(EnumerateMatchings(s), s.crossing(), s.triangulation().n_arcs(),
             c);
}

algebra::LaurentPolynomial ExpandBand(const BandGraph& b, Coefficients c) {
  return Sum(EnumerateMatchings(b), b.crossing(),
             b.base().triangulation().n_arcs(), c);
}

}  // namespace clusterlab::snake
