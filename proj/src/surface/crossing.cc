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

#include "clusterlab/surface/crossing.h"

#include <algorithm>
#include <sstream>

namespace clusterlab::surface {
namespace {

bool InRange(const Triangulation& t, std::span<const int> arcs) {
  return std::all_of(arcs.begin(), arcs.end(),
                     [&](int a) { return a >= 1 && a <= t.n_arcs(); });
}

}  // namespace

LoopCrossing LoopCrossing::CanonicalRotation() const {
  LoopCrossing best{arcs, std::nullopt};
  std::vector<int> r = arcs;
  for (std::size_t i = 1; i < arcs.size(); ++i) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    if (r < best.arcs) best.arcs = r;
  }
  return best;
}

std::optional<CrossingPath> TraceFrom(const Triangulation& t,
                                      std::span<const int> arcs, Slot start) {
  if (arcs.empty() || !InRange(t, arcs)) return std::nullopt;
  if (start.triangle < 0 ||
      start.triangle >= static_cast<int>(t.triangles().size()) ||
      start.side < 0 || start.side > 2) {
    return std::nullopt;
  }
  CrossingPath p;
  Slot cur = start;
  for (std::size_t j = 0; j < arcs.size(); ++j) {
    if (t.side(cur) != SideRef::Arc(arcs[j])) return std::nullopt;
    const Slot up = t.Partner(cur);
    p.lower.push_back(cur);
    p.upper.push_back(up);
    if (j + 1 == arcs.size()) break;
    std::optional<Slot> next;
    for (int k = 0; k < 3; ++k) {
      if (k != up.side &&
          t.triangles()[up.triangle][k] == SideRef::Arc(arcs[j + 1])) {
        next = Slot{up.triangle, k};
        break;
      }
    }
    if (!next) return std::nullopt;
    cur = *next;
  }
  return p;
}

CrossingPath Trace(const Triangulation& t, const ArcCrossing& a) {
  if (a.arcs.empty()) throw InvalidCrossing("empty crossing sequence");
  if (!InRange(t, a.arcs)) {
    throw InvalidCrossing("arc index out of range in " +
                          SequenceToString(a.arcs));
  }
  if (a.start) {
    if (auto p = TraceFrom(t, a.arcs, *a.start)) return *p;
  } else {
    for (const Slot& s : t.slots(SideRef::Arc(a.arcs[0]))) {
      if (auto p = TraceFrom(t, a.arcs, s)) return *p;
    }
  }
  throw InvalidCrossing("crossing sequence " + SequenceToString(a.arcs) +
                        " cannot be traced");
}

CrossingPath TraceLoop(const Triangulation& t, const LoopCrossing& l) {
  if (l.arcs.empty()) throw InvalidCrossing("empty loop");
  if (!InRange(t, l.arcs)) {
    throw InvalidCrossing("arc index out of range in loop " +
                          SequenceToString(l.arcs));
  }
  std::vector<int> ext = l.arcs;
  ext.push_back(l.arcs[0]);
  auto closes = [&](Slot s) -> std::optional<CrossingPath> {
    auto p = TraceFrom(t, ext, s);
    if (!p || p->lower.back() != s) return std::nullopt;
    p->lower.pop_back();
    p->upper.pop_back();
    return p;
  };
  if (l.start) {
    if (auto p = closes(*l.start)) return *p;
  } else {
    for (const Slot& s : t.slots(SideRef::Arc(l.arcs[0]))) {
      if (auto p = closes(s)) return *p;
    }
  }
  throw InvalidCrossing("loop " + SequenceToString(l.arcs) + " does not close");
}

bool IsValid(const Triangulation& t, const ArcCrossing& a) {
  try {
    Trace(t, a);
    return true;
  } catch (const InvalidCrossing&) {
    return false;
  }
}

bool IsValid(const Triangulation& t, const LoopCrossing& l) {
  try {
    TraceLoop(t, l);
    return true;
  } catch (const InvalidCrossing&) {
    return false;
  }
}

LoopCrossing BoundaryLoop(const Triangulation& t) {
  if (t.n_marked() != 1 || t.n_boundary() != 1) {
    throw std::invalid_argument(
        "BoundaryLoop: needs exactly one marked point and one boundary "
        "segment, got " +
        std::to_string(t.n_marked()) + " marked points");
  }
  const std::vector<Slot> fan = FanFromBoundary(t, 1);
  LoopCrossing l;
  for (const Slot& s : fan) l.arcs.push_back(t.side(s).index);
  if (!fan.empty()) l.start = fan[0];
  return l;
}

std::string SequenceToString(std::span<const int> arcs) {
  std::string out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(arcs[i]);
  }
  return out;
}

std::vector<int> ParseSequence(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) {
      throw std::invalid_argument("empty entry in sequence: " + text);
    }
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw std::invalid_argument("bad sequence entry: " + item);
    }
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') {
    throw std::invalid_argument("trailing comma in sequence: " + text);
  }
  return out;
}

}  // namespace clusterlab::surface
