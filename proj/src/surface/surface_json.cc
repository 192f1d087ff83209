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

#include "clusterlab/surface/surface_json.h"

#include <fstream>
#include <stdexcept>

namespace clusterlab::surface {

nlohmann::json ToJson(const Triangulation& t) {
  nlohmann::json tris = nlohmann::json::array();
  for (const Triangle& tri : t.triangles()) {
    tris.push_back({tri[0].Tag(), tri[1].Tag(), tri[2].Tag()});
  }
  return {{"genus", t.genus()},
          {"n_arcs", t.n_arcs()},
          {"n_boundary", t.n_boundary()},
          {"n_marked", t.n_marked()},
          {"triangles", tris}};
}

Triangulation TriangulationFromJson(const nlohmann::json& j) {
  std::vector<Triangle> tris;
  for (const auto& row : j.at("triangles")) {
    if (!row.is_array() || row.size() != 3) {
      throw std::invalid_argument("triangle entries must have three sides");
    }
    tris.push_back({SideRef::Parse(row[0].get<std::string>()),
                    SideRef::Parse(row[1].get<std::string>()),
                    SideRef::Parse(row[2].get<std::string>())});
  }
  return Triangulation(j.at("genus").get<int>(), j.at("n_arcs").get<int>(),
                       j.at("n_boundary").get<int>(),
                       j.at("n_marked").get<int>(), std::move(tris));
}

Triangulation LoadTriangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return TriangulationFromJson(nlohmann::json::parse(in));
}

}  // namespace clusterlab::surface
