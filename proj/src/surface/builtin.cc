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

#include "clusterlab/surface/builtin.h"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace clusterlab::surface {
namespace {

SideRef A(int i) { return SideRef::Arc(i); }
SideRef B(int i) { return SideRef::Boundary(i); }

class PolygonBuilder {
 public:
  explicit PolygonBuilder(int g)
      : g_(g), m_(4 * g + 1), next_label_(2 * g + 1) {
    for (int i = 0; i < g; ++i) {
      const int a = 2 * i + 1, b = 2 * i + 2;
      const int labels[4] = {a, b, a, b};
      for (int j = 0; j < 4; ++j) {
        sides_[{4 * i + j, 4 * i + j + 1}] = A(labels[j]);
      }
    }
  }

  Triangulation Build() {
    const int k = 2 * g_;
    AddTriangle(0, k, m_ - 1);
    Zigzag(0, k);
    Zigzag(k, m_ - 1);
    return Triangulation(g_, 6 * g_ - 2, 1, 1, std::move(triangles_));
  }

 private:
  SideRef Label(int u, int v) {
    if ((u == m_ - 1 && v == 0) || (u == 0 && v == m_ - 1)) return B(1);
    const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    auto it = sides_.find(key);
    if (it != sides_.end()) return it->second;
    return sides_[key] = A(next_label_++);
  }

  // Vertices in counterclockwise polygon order.
  void AddTriangle(int u, int v, int w) {
    triangles_.push_back({Label(u, v), Label(v, w), Label(w, u)});
  }

  // Triangulates the sub-polygon on vertices lo..hi, alternating ears.
  void Zigzag(int lo, int hi) {
    bool low_side = true;
    while (hi - lo >= 2) {
      if (low_side) {
        AddTriangle(lo, lo + 1, hi);
        ++lo;
      } else {
        AddTriangle(lo, hi - 1, hi);
        --hi;
      }
      low_side = !low_side;
    }
  }

  int g_, m_, next_label_;
  std::map<std::pair<int, int>, SideRef> sides_;
  std::vector<Triangle> triangles_;
};

}  // namespace

Triangulation BuiltinGenus1() {
  return Triangulation(
      1, 4, 1, 1, {{A(2), A(1), A(3)}, {A(2), A(1), A(4)}, {A(4), A(3), B(1)}});
}

Triangulation BuiltinGenus2() {
  return Triangulation(2, 10, 1, 1,
                       {{A(8), A(7), B(1)},
                        {A(3), A(8), A(9)},
                        {A(4), A(9), A(10)},
                        {A(1), A(10), A(2)},
                        {A(5), A(2), A(1)},
                        {A(7), A(4), A(6)},
                        {A(5), A(6), A(3)}});
}

Triangulation BuiltinGenus(int g) {
  if (g < 1) throw std::invalid_argument("BuiltinGenus: genus must be >= 1");
  if (g == 1) return BuiltinGenus1();
  if (g == 2) return BuiltinGenus2();
  return PolygonBuilder(g).Build();
}

Triangulation BuiltinAnnulus() {
  return Triangulation(0, 2, 2, 2, {{A(2), A(1), B(1)}, {A(2), A(1), B(2)}});
}

Triangulation BuiltinByName(std::string_view name) {
  if (name == "annulus") return BuiltinAnnulus();
  if (name.starts_with("genus") && name.size() > 5) {
    const std::string digits(name.substr(5));
    std::size_t used = 0;
    const int g = std::stoi(digits, &used);
    if (used == digits.size()) return BuiltinGenus(g);
  }
  throw std::invalid_argument("unknown builtin surface: " + std::string(name));
}

}  // namespace clusterlab::surface
