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

#ifndef CLUSTERLAB_SNAKE_GRAPH_JSON_H_
#define CLUSTERLAB_SNAKE_GRAPH_JSON_H_

#include "clusterlab/snake/graph.h"
#include "json.hpp"

namespace clusterlab::snake {

// Debug dumps: tiles with labels and signs, glue directions and, for bands,
// the glued edge pair.
nlohmann::json ToJson(const SnakeGraph& s);
nlohmann::json ToJson(const BandGraph& b);

}  // namespace clusterlab::snake

#endif  // CLUSTERLAB_SNAKE_GRAPH_JSON_H_
