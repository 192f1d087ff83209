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

#ifndef CLUSTERLAB_SNAKE_GRAPH_H_
#define CLUSTERLAB_SNAKE_GRAPH_H_

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "clusterlab/surface/crossing.h"
#include "clusterlab/surface/triangulation.h"

namespace clusterlab::snake {

using surface::SideRef;

enum TileEdge : std::uint8_t { kSouth = 0, kNorth = 1, kWest = 2, kEast = 3 };
enum class GlueDir : std::uint8_t { kNorth, kEast };

const char* TileEdgeName(TileEdge e);

// One tile per crossing. The diagonal runs from the north-west to the
// south-east corner; the lower-left triangle is the one the curve leaves and
// the upper-right one the triangle it enters. Tile 1 has sign +1 and signs
// alternate along the snake.
struct Tile {
  int diagonal = 0;
  int sign = 1;
  std::array<SideRef, 4> labels;  // indexed by TileEdge
  surface::Slot lower, upper;

  const SideRef& label(TileEdge e) const { return labels[e]; }
};

// The planar (or, for bands, quotient) graph the matchings live on.
struct TileGraph {
  struct Edge {
    int u = 0, v = 0;
    SideRef label;
  };
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::array<int, 4>> tile_edges;  // edge ids, indexed by TileEdge
  std::vector<int> diagonals;
};

class SnakeGraph {
 public:
  const surface::Triangulation& triangulation() const { return *tri_; }
  const std::shared_ptr<const surface::Triangulation>& shared_triangulation()
      const {
    return tri_;
  }
  const std::vector<int>& crossing() const { return crossing_; }
  const surface::CrossingPath& path() const { return path_; }
  const std::vector<Tile>& tiles() const { return tiles_; }
  // glue_dirs()[j] is the edge of tile j along which tile j+1 is attached.
  const std::vector<GlueDir>& glue_dirs() const { return glue_dirs_; }
  const TileGraph& graph() const { return graph_; }
  std::size_t size() const { return tiles_.size(); }

 private:
  friend class GraphBuilder;

  std::shared_ptr<const surface::Triangulation> tri_;
  std::vector<int> crossing_;
  surface::CrossingPath path_;
  std::vector<Tile> tiles_;
  std::vector<GlueDir> glue_dirs_;
  std::vector<std::array<int, 2>> positions_;  // south-west corners
  TileGraph graph_;
};

// Which edges of the first and last tile are identified.
struct BandGlue {
  TileEdge first_edge;  // kSouth or kWest
  TileEdge last_edge;   // kNorth or kEast
  SideRef label;
  bool same_sign;  // whether the closing tile repeats tile 1's sign
};

class BandGraph {
 public:
  // The snake graph of one period, cut open between the last and first tile.
  const SnakeGraph& base() const { return base_; }
  const BandGlue& glue() const { return glue_; }
  const std::vector<int>& crossing() const { return base_.crossing(); }
  const std::vector<Tile>& tiles() const { return base_.tiles(); }
  const TileGraph& graph() const { return graph_; }
  std::size_t size() const { return base_.size(); }
  // Edge ids of the cut snake's minimal matching, transported to graph().
  const std::vector<int>& minimal_edges() const { return minimal_edges_; }

 private:
  friend class GraphBuilder;

  SnakeGraph base_;
  BandGlue glue_{};
  TileGraph graph_;
  // Edge ids, in graph_, of the transported minimal matching.
  std::vector<int> minimal_edges_;
};

// Throws surface::InvalidCrossing if the sequence cannot be traced.
SnakeGraph BuildSnake(std::shared_ptr<const surface::Triangulation> t,
                      const surface::ArcCrossing& a);
SnakeGraph BuildSnake(const surface::Triangulation& t,
                      const surface::ArcCrossing& a);

// Throws surface::InvalidCrossing for loops that do not close or cross
// fewer than two arcs.
BandGraph BuildBand(std::shared_ptr<const surface::Triangulation> t,
                    const surface::LoopCrossing& l);
BandGraph BuildBand(const surface::Triangulation& t,
                    const surface::LoopCrossing& l);

// Edge ids of the boundary-only matching of a snake graph that contains the
// south edge of tile 1.
std::vector<int> SnakeMinimalEdges(const SnakeGraph& s);

// Drops the first and last tile of `s` and glues the remaining ends. Needs at
// least three tiles and equal first and last diagonals; throws
// std::invalid_argument otherwise.
BandGraph TrimToBand(const SnakeGraph& s);

}  // namespace clusterlab::snake

#endif  // CLUSTERLAB_SNAKE_GRAPH_H_
