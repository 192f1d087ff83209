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

#ifndef CLUSTERLAB_VERIFY_SEARCH_H_
#define CLUSTERLAB_VERIFY_SEARCH_H_

#include <vector>

#include "clusterlab/surface/crossing.h"
#include "clusterlab/surface/triangulation.h"

namespace clusterlab::verify {

// Every traceable crossing sequence of length 1..max_len, each with its
// start slot pinned. Sequences that never repeat a side slot are not
// required; the walk only forbids leaving through the side it entered by.
std::vector<surface::ArcCrossing> EnumerateArcCrossings(
    const surface::Triangulation& t, int max_len);

struct WArcs {
  surface::ArcCrossing w1, w2, w3;
};

// Arcs of crossing length <= max_len on the genus-2 fixture with
//   U1 U2 = y1 W1 + x7 + y8 X1 + y1 y8 W2 + y1 y5 y6 y7 W3 x1.
// Candidates are grouped by expansion; one representative per triple.
std::vector<WArcs> DeriveGenus2WArcs(int max_len);

}  // namespace clusterlab::verify

#endif  // CLUSTERLAB_VERIFY_SEARCH_H_
