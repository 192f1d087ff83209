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

#ifndef CLUSTERLAB_SURFACE_SURFACE_JSON_H_
#define CLUSTERLAB_SURFACE_SURFACE_JSON_H_

#include <string>

#include "clusterlab/surface/triangulation.h"
#include "json.hpp"

namespace clusterlab::surface {

// {genus, n_arcs, n_boundary, n_marked, triangles: [["A1","A2","A3"], ...]}
nlohmann::json ToJson(const Triangulation& t);
Triangulation TriangulationFromJson(const nlohmann::json& j);
Triangulation LoadTriangulation(const std::string& path);

}  // namespace clusterlab::surface

#endif  // CLUSTERLAB_SURFACE_SURFACE_JSON_H_
