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

#include "clusterlab/snake/graph.h"

#include <map>
#include <stdexcept>
#include <utility>

namespace clusterlab::snake {

using surface::CrossingPath;
using surface::Slot;
using surface::Triangle;
using surface::Triangulation;

const char* TileEdgeName(TileEdge e) {
  switch (e) {
    case kSouth:
      return "S";
    case kNorth:
      return "N";
    case kWest:
      return "W";
    case kEast:
      return "E";
  }
  return "?";
}

namespace {

struct Layout {
  std::vector<Tile> tiles;
  std::vector<GlueDir> dirs;
  std::vector<std::array<int, 2>> pos;
};

Tile MakeTile(const Triangulation& t, int diagonal, int sign, Slot lower,
              Slot upper) {
  const Triangle& lo = t.triangles()[lower.triangle];
  const Triangle& up = t.triangles()[upper.triangle];
  const SideRef& l1 = lo[(lower.side + 1) % 3];
  const SideRef& l2 = lo[(lower.side + 2) % 3];
  const SideRef& u1 = up[(upper.side + 1) % 3];
  const SideRef& u2 = up[(upper.side + 2) % 3];
  Tile tile;
  tile.diagonal = diagonal;
  tile.sign = sign;
  tile.lower = lower;
  tile.upper = upper;
  if (sign > 0) {
    tile.labels = {l1, u1, l2, u2};
  } else {
    tile.labels = {l2, u2, l1, u1};
  }
  return tile;
}

Layout Lay(const Triangulation& t, const std::vector<int>& arcs,
           const std::vector<Slot>& lower, const std::vector<Slot>& upper) {
  Layout out;
  const std::size_t d = arcs.size();
  for (std::size_t j = 0; j < d; ++j) {
    out.tiles.push_back(
        MakeTile(t, arcs[j], j % 2 == 0 ? 1 : -1, lower[j], upper[j]));
  }
  out.pos.push_back({0, 0});
  for (std::size_t j = 0; j + 1 < d; ++j) {
    const Slot up = upper[j];
    const Slot next = lower[j + 1];
    if (next.triangle != up.triangle || next.side == up.side) {
      throw std::logic_error("crossing path is not connected");
    }
    // The shared edge is the third side of the triangle between the two
    // diagonals.
    const int third = 3 - up.side - next.side;
    const int north_slot =
        out.tiles[j].sign > 0 ? (up.side + 1) % 3 : (up.side + 2) % 3;
    const GlueDir dir = third == north_slot ? GlueDir::kNorth : GlueDir::kEast;
    const TileEdge here = dir == GlueDir::kNorth ? kNorth : kEast;
    const TileEdge there = dir == GlueDir::kNorth ? kSouth : kWest;
    if (out.tiles[j].label(here) != out.tiles[j + 1].label(there)) {
      throw std::logic_error("glued tile edges carry different labels");
    }
    out.dirs.push_back(dir);
    auto [x, y] = out.pos.back();
    out.pos.push_back(dir == GlueDir::kNorth ? std::array<int, 2>{x, y + 1}
                                             : std::array<int, 2>{x + 1, y});
  }
  return out;
}

using Point = std::array<int, 2>;

std::array<Point, 4> Corners(const Point& p) {
  // SW, SE, NW, NE
  return {Point{p[0], p[1]}, Point{p[0] + 1, p[1]}, Point{p[0], p[1] + 1},
          Point{p[0] + 1, p[1] + 1}};
}

// Vertex and edge ids of the planar snake built from the first `d` tiles.
struct Grid {
  TileGraph graph;
  std::map<Point, int> vid;
};

Grid BuildGrid(const Layout& lay, std::size_t d) {
  Grid g;
  std::map<std::pair<int, int>, int> eid;
  auto vertex = [&](const Point& p) {
    auto [it, inserted] = g.vid.emplace(p, static_cast<int>(g.vid.size()));
    return it->second;
  };
  auto edge = [&](const Point& a, const Point& b, const SideRef& label) {
    const int u = vertex(a), v = vertex(b);
    const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    auto it = eid.find(key);
    if (it != eid.end()) return it->second;
    const int id = static_cast<int>(g.graph.edges.size());
    g.graph.edges.push_back({u, v, label});
    eid.emplace(key, id);
    return id;
  };
  for (std::size_t j = 0; j < d; ++j) {
    const Tile& tile = lay.tiles[j];
    const auto c = Corners(lay.pos[j]);
    std::array<int, 4> ids;
    ids[kSouth] = edge(c[0], c[1], tile.label(kSouth));
    ids[kNorth] = edge(c[2], c[3], tile.label(kNorth));
    ids[kWest] = edge(c[0], c[2], tile.label(kWest));
    ids[kEast] = edge(c[1], c[3], tile.label(kEast));
    g.graph.tile_edges.push_back(ids);
    g.graph.diagonals.push_back(tile.diagonal);
  }
  g.graph.num_vertices = static_cast<int>(g.vid.size());
  return g;
}

std::vector<int> MinimalFromGrid(const TileGraph& g) {
  std::vector<int> tiles_per_edge(g.edges.size(), 0);
  for (const auto& te : g.tile_edges) {
    for (int e : te) ++tiles_per_edge[e];
  }
  std::vector<std::vector<int>> at(g.num_vertices);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (tiles_per_edge[e] != 1) continue;
    at[g.edges[e].u].push_back(static_cast<int>(e));
    at[g.edges[e].v].push_back(static_cast<int>(e));
  }
  for (const auto& a : at) {
    if (a.size() != 2) throw std::logic_error("snake boundary is not a cycle");
  }
  const int start = g.tile_edges[0][kSouth];
  std::vector<int> cycle{start};
  int v = g.edges[start].v;
  int prev = start;
  while (true) {
    const int next = at[v][0] == prev ? at[v][1] : at[v][0];
    if (next == start) break;
    cycle.push_back(next);
    v = g.edges[next].u == v ? g.edges[next].v : g.edges[next].u;
    prev = next;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < cycle.size(); i += 2) out.push_back(cycle[i]);
  return out;
}

}  // namespace

class GraphBuilder {
 public:
  static SnakeGraph Snake(std::shared_ptr<const Triangulation> tri,
                          std::vector<int> arcs, CrossingPath path) {
    SnakeGraph s;
    const Layout lay = Lay(*tri, arcs, path.lower, path.upper);
    s.graph_ = BuildGrid(lay, arcs.size()).graph;
    s.tiles_ = lay.tiles;
    s.glue_dirs_ = lay.dirs;
    s.positions_ = lay.pos;
    s.tri_ = std::move(tri);
    s.crossing_ = std::move(arcs);
    s.path_ = std::move(path);
    return s;
  }

  static BandGraph Band(std::shared_ptr<const Triangulation> tri,
                        std::vector<int> arcs, CrossingPath path) {
    const std::size_t d = arcs.size();
    if (d < 2) {
      throw surface::InvalidCrossing("band graphs need at least two crossings");
    }
    // Lay out one extra tile: the first tile again, reached from the last.
    std::vector<int> ext_arcs = arcs;
    ext_arcs.push_back(arcs[0]);
    std::vector<Slot> lower = path.lower, upper = path.upper;
    lower.push_back(path.lower[0]);
    upper.push_back(path.upper[0]);
    const Layout lay = Lay(*tri, ext_arcs, lower, upper);
    Grid grid = BuildGrid(lay, d);

    BandGraph band;
    SnakeGraph& s = band.base_;
    s.graph_ = grid.graph;
    s.tiles_.assign(lay.tiles.begin(), lay.tiles.begin() + d);
    s.glue_dirs_.assign(lay.dirs.begin(), lay.dirs.begin() + (d - 1));
    s.positions_.assign(lay.pos.begin(), lay.pos.begin() + d);
    s.tri_ = std::move(tri);
    s.crossing_ = std::move(arcs);
    s.path_ = std::move(path);

    const bool same = lay.tiles[d].sign == lay.tiles[0].sign;
    const bool north = lay.dirs[d - 1] == GlueDir::kNorth;
    const TileEdge last_edge = north ? kNorth : kEast;
    TileEdge first_edge = north ? kSouth : kWest;
    if (!same) first_edge = first_edge == kSouth ? kWest : kSouth;
    const SideRef& label = s.tiles_[0].label(first_edge);
    if (label != s.tiles_[d - 1].label(last_edge)) {
      throw std::logic_error("band glue edges carry different labels");
    }
    band.glue_ = BandGlue{first_edge, last_edge, label, same};

    // Endpoints of the last tile's glue edge, as corners of the closing tile,
    // merge with the matching corners of tile 1. With opposite signs the
    // closing tile is the mirror of tile 1, which swaps NW and SE.
    enum Corner { SW = 0, SE = 1, NW = 2, NE = 3 };
    auto to_first = [&](Corner c) {
      if (!same && c == NW) return SE;
      if (!same && c == SE) return NW;
      return c;
    };
    const auto last = Corners(lay.pos[d - 1]);
    const auto first = Corners(lay.pos[0]);
    std::vector<int> qv(s.graph_.num_vertices);
    for (int v = 0; v < s.graph_.num_vertices; ++v) qv[v] = v;
    auto merge = [&](const Point& p, Corner as) {
      qv[grid.vid.at(p)] = grid.vid.at(first[to_first(as)]);
    };
    if (north) {
      merge(last[2], SW);
      merge(last[3], SE);
    } else {
      merge(last[1], SW);
      merge(last[3], NW);
    }
    std::vector<int> compact(s.graph_.num_vertices, -1);
    int nv = 0;
    for (int v = 0; v < s.graph_.num_vertices; ++v) {
      if (qv[v] == v) compact[v] = nv++;
    }

    const int e_first = s.graph_.tile_edges[0][first_edge];
    const int e_last = s.graph_.tile_edges[d - 1][last_edge];
    TileGraph& q = band.graph_;
    q.num_vertices = nv;
    std::vector<int> new_id(s.graph_.edges.size(), -1);
    for (std::size_t e = 0; e < s.graph_.edges.size(); ++e) {
      if (static_cast<int>(e) == e_last) continue;
      const auto& old = s.graph_.edges[e];
      new_id[e] = static_cast<int>(q.edges.size());
      q.edges.push_back({compact[qv[old.u]], compact[qv[old.v]], old.label});
    }
    new_id[e_last] = new_id[e_first];
    for (const auto& te : s.graph_.tile_edges) {
      q.tile_edges.push_back(
          {new_id[te[0]], new_id[te[1]], new_id[te[2]], new_id[te[3]]});
    }
    q.diagonals = s.graph_.diagonals;

    // The cut snake's minimal matching holds exactly one of the two glued
    // edges; dropping it leaves a perfect matching of the quotient.
    const std::vector<int> snake_min = MinimalFromGrid(s.graph_);
    int hits = 0;
    for (int e : snake_min) {
      if (e == e_first || e == e_last) {
        ++hits;
        continue;
      }
      band.minimal_edges_.push_back(new_id[e]);
    }
    if (hits != 1) {
      throw std::logic_error("minimal matching meets the band glue " +
                             std::to_string(hits) + " times");
    }
    std::vector<int> cover(nv, 0);
    for (int e : band.minimal_edges_) {
      ++cover[q.edges[e].u];
      ++cover[q.edges[e].v];
    }
    for (int c : cover) {
      if (c != 1) throw std::logic_error("transported matching is not perfect");
    }
    return band;
  }
};

SnakeGraph BuildSnake(std::shared_ptr<const Triangulation> t,
                      const surface::ArcCrossing& a) {
  CrossingPath path = surface::Trace(*t, a);
  return GraphBuilder::Snake(std::move(t), a.arcs, std::move(path));
}

SnakeGraph BuildSnake(const Triangulation& t, const surface::ArcCrossing& a) {
  return BuildSnake(std::make_shared<const Triangulation>(t), a);
}

BandGraph BuildBand(std::shared_ptr<const Triangulation> t,
                    const surface::LoopCrossing& l) {
  CrossingPath path = surface::TraceLoop(*t, l);
  return GraphBuilder::Band(std::move(t), l.arcs, std::move(path));
}

BandGraph BuildBand(const Triangulation& t, const surface::LoopCrossing& l) {
  return BuildBand(std::make_shared<const Triangulation>(t), l);
}

std::vector<int> SnakeMinimalEdges(const SnakeGraph& s) {
  return MinimalFromGrid(s.graph());
}

BandGraph TrimToBand(const SnakeGraph& s) {
  if (s.size() < 3) {
    throw std::invalid_argument("TrimToBand: need at least three tiles");
  }
  const auto& arcs = s.crossing();
  if (arcs.front() != arcs.back()) {
    throw std::invalid_argument(
        "TrimToBand: first and last diagonals differ, glue labels are "
        "inconsistent");
  }
  surface::LoopCrossing inner{
      std::vector<int>(arcs.begin() + 1, arcs.end() - 1), s.path().lower[1]};
  try {
    return BuildBand(s.shared_triangulation(), inner);
  } catch (const surface::InvalidCrossing& e) {
    throw std::invalid_argument(
        std::string("TrimToBand: trimmed ends do not glue consistently: ") +
        e.what());
  }
}

}  // namespace clusterlab::snake
