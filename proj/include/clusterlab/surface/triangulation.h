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

#ifndef CLUSTERLAB_SURFACE_TRIANGULATION_H_
#define CLUSTERLAB_SURFACE_TRIANGULATION_H_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "clusterlab/algebra/int_matrix.h"

namespace clusterlab::surface {

// A side of a triangle: an arc A1..An or a boundary segment B1..Bb.
struct SideRef {
  enum class Kind : std::uint8_t { kArc, kBoundary };

  Kind kind = Kind::kArc;
  int index = 0;

  static SideRef Arc(int i) { return {Kind::kArc, i}; }
  static SideRef Boundary(int i) { return {Kind::kBoundary, i}; }
  // Parses "A3" or "B1".
  static SideRef Parse(std::string_view tag);

  bool is_arc() const { return kind == Kind::kArc; }
  bool is_boundary() const { return kind == Kind::kBoundary; }
  std::string Tag() const;

  friend auto operator<=>(const SideRef&, const SideRef&) = default;
};

// Sides listed counterclockwise.
using Triangle = std::array<SideRef, 3>;

// A side position: triangle index and position 0..2 inside it.
struct Slot {
  int triangle = 0;
  int side = 0;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

// Combinatorial triangulation of an unpunctured oriented surface. Gluing is
// implicit: the two slots holding the same arc are identified, orientably.
class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(int genus, int n_arcs, int n_boundary, int n_marked,
                std::vector<Triangle> triangles);

  int genus() const { return genus_; }
  int n_arcs() const { return n_arcs_; }
  int n_boundary() const { return n_boundary_; }
  int n_marked() const { return n_marked_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  const SideRef& side(Slot s) const { return triangles_[s.triangle][s.side]; }
  // Slots holding `side`, in triangle order. Empty for out-of-range sides.
  const std::vector<Slot>& slots(SideRef side) const;
  // The other slot of the arc at `s`. Throws std::logic_error if `s` is a
  // boundary slot or the arc is not glued exactly twice.
  Slot Partner(Slot s) const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.genus_ == b.genus_ && a.n_arcs_ == b.n_arcs_ &&
           a.n_boundary_ == b.n_boundary_ && a.n_marked_ == b.n_marked_ &&
           a.triangles_ == b.triangles_;
  }

 private:
  int genus_ = 0, n_arcs_ = 0, n_boundary_ = 0, n_marked_ = 0;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<Slot>> arc_slots_, boundary_slots_;
};

// Returns the violated invariants; empty means valid.
std::vector<std::string> Validate(const Triangulation& t);

// b_ij = #(j directly follows i) - #(j directly precedes i), summed over
// triangles; boundary sides contribute nothing.
algebra::IntMatrix ExchangeMatrix(const Triangulation& t);

// Counterclockwise fan of side slots around the marked point that follows
// boundary segment `boundary` (1-based). The first entry is the side right
// before the boundary slot; the walk stops at the next boundary slot, which
// is not included.
std::vector<Slot> FanFromBoundary(const Triangulation& t, int boundary);

}  // namespace clusterlab::surface

#endif  // CLUSTERLAB_SURFACE_TRIANGULATION_H_
