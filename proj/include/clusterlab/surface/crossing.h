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

#ifndef CLUSTERLAB_SURFACE_CROSSING_H_
#define CLUSTERLAB_SURFACE_CROSSING_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterlab/surface/triangulation.h"

namespace clusterlab::surface {

class InvalidCrossing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The ordered arcs crossed by a curve. When the same sequence can be traced
// from more than one starting side, `start` pins the slot of the first arc
// in the triangle the curve begins in; otherwise the first slot that works
// (in triangle order) is used.
struct ArcCrossing {
  std::vector<int> arcs;
  std::optional<Slot> start;
};

// A closed curve given by one period of its crossing sequence.
struct LoopCrossing {
  std::vector<int> arcs;
  std::optional<Slot> start;

  // The lexicographically smallest rotation of `arcs`, without a start slot.
  LoopCrossing CanonicalRotation() const;
};

// Where a curve crosses each arc: `lower[j]` is the slot of arcs[j] in the
// triangle the curve is leaving, `upper[j]` the slot it enters through.
struct CrossingPath {
  std::vector<Slot> lower;
  std::vector<Slot> upper;
};

// Traces `arcs` starting at `start`. Returns nullopt if some step has no
// admissible exit side.
std::optional<CrossingPath> TraceFrom(const Triangulation& t,
                                      std::span<const int> arcs, Slot start);

// Throws InvalidCrossing when the sequence cannot be traced.
CrossingPath Trace(const Triangulation& t, const ArcCrossing& a);

// Traces one period plus the first crossing again; the repeated crossing
// must land on the starting slot. Throws InvalidCrossing otherwise.
CrossingPath TraceLoop(const Triangulation& t, const LoopCrossing& l);

bool IsValid(const Triangulation& t, const ArcCrossing& a);
bool IsValid(const Triangulation& t, const LoopCrossing& l);

// The loop isotopic to the boundary, read off the fan of side slots around
// the unique marked point. Requires one marked point and one boundary
// segment; throws std::invalid_argument otherwise.
LoopCrossing BoundaryLoop(const Triangulation& t);

std::string SequenceToString(std::span<const int> arcs);
// Parses "1,2,3".
std::vector<int> ParseSequence(const std::string& text);

}  // namespace clusterlab::surface

#endif  // CLUSTERLAB_SURFACE_CROSSING_H_
