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

#include <set>
#include <stdexcept>

namespace clusterlab::surface {
namespace {

const std::vector<Slot> kNoSlots;

int Prev(int side) { return (side + 2) % 3; }

struct FanWalk {
  std::vector<Slot> sides;
  std::vector<Slot> corners;  // corner (t, k) sits between sides k-1 and k
  int end_boundary = 0;
};

// Walks counterclockwise around the marked point after boundary slot `b`.
// Assumes every arc has exactly two slots.
FanWalk Walk(const Triangulation& t, Slot b) {
  FanWalk w;
  w.corners.push_back(b);
  Slot cur{b.triangle, Prev(b.side)};
  const std::size_t limit = 3 * t.triangles().size() + 1;
  while (t.side(cur).is_arc()) {
    if (w.sides.size() > limit) {
      throw std::logic_error("fan walk does not terminate");
    }
    w.sides.push_back(cur);
    const Slot nxt = t.Partner(cur);
    w.corners.push_back(nxt);
    cur = Slot{nxt.triangle, Prev(nxt.side)};
  }
  w.end_boundary = t.side(cur).index;
  return w;
}

}  // namespace

SideRef SideRef::Parse(std::string_view tag) {
  if (tag.size() < 2 || (tag[0] != 'A' && tag[0] != 'B')) {
    throw std::invalid_argument("bad side tag: " + std::string(tag));
  }
  int v = 0;
  for (char c : tag.substr(1)) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("bad side tag: " + std::string(tag));
    }
    v = v * 10 + (c - '0');
  }
  return tag[0] == 'A' ? Arc(v) : Boundary(v);
}

std::string SideRef::Tag() const {
  return (is_arc() ? "A" : "B") + std::to_string(index);
}

Triangulation::Triangulation(int genus, int n_arcs, int n_boundary,
                             int n_marked, std::vector<Triangle> triangles)
    : genus_(genus),
      n_arcs_(n_arcs),
      n_boundary_(n_boundary),
      n_marked_(n_marked),
      triangles_(std::move(triangles)),
      arc_slots_(std::max(n_arcs, 0)),
      boundary_slots_(std::max(n_boundary, 0)) {
  for (int ti = 0; ti < static_cast<int>(triangles_.size()); ++ti) {
    for (int si = 0; si < 3; ++si) {
      const SideRef& s = triangles_[ti][si];
      auto& table = s.is_arc() ? arc_slots_ : boundary_slots_;
      if (s.index >= 1 && s.index <= static_cast<int>(table.size())) {
        table[s.index - 1].push_back(Slot{ti, si});
      }
    }
  }
}

const std::vector<Slot>& Triangulation::slots(SideRef side) const {
  const auto& table = side.is_arc() ? arc_slots_ : boundary_slots_;
  if (side.index < 1 || side.index > static_cast<int>(table.size())) {
    return kNoSlots;
  }
  return table[side.index - 1];
}

Slot Triangulation::Partner(Slot s) const {
  const SideRef& a = side(s);
  const auto& sl = slots(a);
  if (!a.is_arc() || sl.size() != 2) {
    throw std::logic_error("Partner: " + a.Tag() + " is not a glued arc");
  }
  return sl[0] == s ? sl[1] : sl[0];
}

std::vector<std::string> Validate(const Triangulation& t) {
  std::vector<std::string> v;
  if (t.triangles().empty()) v.push_back("triangle list is empty");
  if (t.genus() < 0) v.push_back("genus is negative");
  if (t.n_arcs() < 0 || t.n_boundary() < 0 || t.n_marked() < 0) {
    v.push_back("negative count");
  }
  for (std::size_t i = 0; i < t.triangles().size(); ++i) {
    for (const SideRef& s : t.triangles()[i]) {
      const int limit = s.is_arc() ? t.n_arcs() : t.n_boundary();
      if (s.index < 1 || s.index > limit) {
        v.push_back("triangle " + std::to_string(i) +
                    " has out-of-range side " + s.Tag());
      }
    }
  }
  bool glued = true;
  for (int a = 1; a <= t.n_arcs(); ++a) {
    const std::size_t c = t.slots(SideRef::Arc(a)).size();
    if (c != 2) {
      glued = false;
      v.push_back("arc A" + std::to_string(a) + " appears in " +
                  std::to_string(c) + " slots, expected 2");
    }
  }
  for (int b = 1; b <= t.n_boundary(); ++b) {
    const std::size_t c = t.slots(SideRef::Boundary(b)).size();
    if (c != 1) {
      glued = false;
      v.push_back("boundary B" + std::to_string(b) + " appears in " +
                  std::to_string(c) + " slots, expected 1");
    }
  }
  const long faces = static_cast<long>(t.triangles().size());
  if (3 * faces != 2L * t.n_arcs() + t.n_boundary()) {
    v.push_back("3 * #triangles != 2 * n_arcs + n_boundary");
  }
  if (!v.empty() || !glued) return v;

  // Marked points are the fans between consecutive boundary slots; every
  // corner must lie in one of them, otherwise some vertex is interior.
  std::set<Slot> corners;
  std::vector<int> next_boundary(t.n_boundary() + 1, 0);
  for (int b = 1; b <= t.n_boundary(); ++b) {
    const FanWalk w = Walk(t, t.slots(SideRef::Boundary(b))[0]);
    for (const Slot& c : w.corners) {
      if (!corners.insert(c).second) {
        v.push_back("corner visited twice while walking around marked points");
        return v;
      }
    }
    next_boundary[b] = w.end_boundary;
  }
  if (corners.size() != static_cast<std::size_t>(3 * faces)) {
    v.push_back("triangulation has an interior vertex (punctures unsupported)");
    return v;
  }
  const int marked = t.n_boundary();
  if (marked != t.n_marked()) {
    v.push_back("n_marked is " + std::to_string(t.n_marked()) +
                " but the gluing has " + std::to_string(marked) +
                " marked points");
  }
  int components = 0;
  std::vector<bool> seen(t.n_boundary() + 1, false);
  for (int b = 1; b <= t.n_boundary(); ++b) {
    if (seen[b]) continue;
    ++components;
    for (int c = b; !seen[c]; c = next_boundary[c]) seen[c] = true;
  }
  const long euler = marked - (t.n_arcs() + t.n_boundary()) + faces;
  if (euler != 2 - 2L * t.genus() - components) {
    v.push_back("Euler characteristic " + std::to_string(euler) +
                " does not match genus " + std::to_string(t.genus()) +
                " with " + std::to_string(components) + " boundary components");
  }
  if (t.n_arcs() != 6 * t.genus() + 3 * components + marked - 6) {
    v.push_back(
        "n_arcs != 6 * genus + 3 * #boundary components + n_marked - 6");
  }
  return v;
}

algebra::IntMatrix ExchangeMatrix(const Triangulation& t) {
  algebra::IntMatrix b(t.n_arcs(), t.n_arcs());
  for (const Triangle& tri : t.triangles()) {
    for (int k = 0; k < 3; ++k) {
      const SideRef& i = tri[k];
      const SideRef& j = tri[(k + 1) % 3];
      if (!i.is_arc() || !j.is_arc()) continue;
      b(i.index - 1, j.index - 1) += 1;
      b(j.index - 1, i.index - 1) -= 1;
    }
  }
  return b;
}

std::vector<Slot> FanFromBoundary(const Triangulation& t, int boundary) {
  const auto& sl = t.slots(SideRef::Boundary(boundary));
  if (sl.size() != 1) {
    throw std::invalid_argument("FanFromBoundary: bad boundary segment");
  }
  return Walk(t, sl[0]).sides;
}

}  // namespace clusterlab::surface
