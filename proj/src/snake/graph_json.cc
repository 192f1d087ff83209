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

#include "clusterlab/snake/graph_json.h"

namespace clusterlab::snake {

nlohmann::json ToJson(const SnakeGraph& s) {
  nlohmann::json tiles = nlohmann::json::array();
  for (const Tile& t : s.tiles()) {
    tiles.push_back({{"diagonal", t.diagonal},
                     {"sign", t.sign},
                     {"N", t.label(kNorth).Tag()},
                     {"E", t.label(kEast).Tag()},
                     {"S", t.label(kSouth).Tag()},
                     {"W", t.label(kWest).Tag()}});
  }
  nlohmann::json dirs = nlohmann::json::array();
  for (GlueDir d : s.glue_dirs())
    dirs.push_back(d == GlueDir::kNorth ? "N" : "E");
  return {{"crossing", s.crossing()}, {"tiles", tiles}, {"glue_dirs", dirs}};
}

nlohmann::json ToJson(const BandGraph& b) {
  nlohmann::json j = ToJson(b.base());
  j["glue"] = {{"first_tile_edge", TileEdgeName(b.glue().first_edge)},
               {"last_tile_edge", TileEdgeName(b.glue().last_edge)},
               {"label", b.glue().label.Tag()},
               {"same_sign", b.glue().same_sign}};
  return j;
}

}  // namespace clusterlab::snake
