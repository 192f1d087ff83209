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

#ifndef CLUSTERLAB_SURFACE_BUILTIN_H_
#define CLUSTERLAB_SURFACE_BUILTIN_H_

#include <string_view>

#include "clusterlab/surface/triangulation.h"

namespace clusterlab::surface {

// Torus with one boundary component and one marked point: 4 arcs.
Triangulation BuiltinGenus1();

// Genus 2, one boundary component, one marked point: 10 arcs. Contains the
// triangles with sides {3,8,9}, {B,8,7} and {1,2,5}.
Triangulation BuiltinGenus2();

// Genus g with one boundary component and one marked point, 6g-2 arcs.
// g = 1 and g = 2 return the fixtures above. For g >= 3 the surface is cut
// from a (4g+1)-gon with sides a_1 b_1 a_1 b_1 ... a_g b_g a_g b_g B, where
// a_i = 2i-1 and b_i = 2i. The boundary triangle joins polygon vertices 0,
// 2g and 4g; the two remaining sub-polygons are triangulated zigzag, and the
// diagonals are numbered 2g+1, 2g+2, ... in creation order.
Triangulation BuiltinGenus(int g);

// Annulus with one marked point on each boundary component: arcs 1 and 2,
// triangles (2,1,B1) and (2,1,B2).
Triangulation BuiltinAnnulus();

// "genus1", "genus2", "genus<g>" or "annulus".
Triangulation BuiltinByName(std::string_view name);

}  // namespace clusterlab::surface

#endif  // CLUSTERLAB_SURFACE_BUILTIN_H_
