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

#ifndef CLUSTERLAB_VERIFY_FIXTURES_H_
#define CLUSTERLAB_VERIFY_FIXTURES_H_

#include <memory>
#include <vector>

#include "clusterlab/surface/crossing.h"
#include "clusterlab/surface/triangulation.h"

namespace clusterlab::verify {

// Shared immutable builtin surfaces.
std::shared_ptr<const surface::Triangulation> Genus1();
std::shared_ptr<const surface::Triangulation> Genus2();
std::shared_ptr<const surface::Triangulation> Annulus();

namespace genus1 {
// Arcs of the torus identities.
inline const std::vector<int> kV1 = {4, 2, 1, 4};
inline const std::vector<int> kV2 = {3, 1, 2, 3};
inline const std::vector<int> kU1 = {1, 3};
inline const std::vector<int> kU2 = {4, 2};
inline const std::vector<int> kW1 = {3, 4};
// Shortest mutation sequences producing the arcs above, found by
// FindMutationSequence from the initial seed.
inline const std::vector<int> kV1Mutations = {4, 1, 2};
inline const std::vector<int> kV2Mutations = {3, 1, 2};
inline const std::vector<int> kU1Mutations = {1, 3};
inline const std::vector<int> kU2Mutations = {2, 4};
inline const std::vector<int> kW1Mutations = {3, 4};
}  // namespace genus1

namespace genus2 {
inline const std::vector<int> kV1 = {8, 9, 10, 2, 1, 10, 4, 6, 3, 8};
inline const std::vector<int> kV2 = {7, 4, 9, 3, 5, 2, 1, 5, 6, 7};
inline const std::vector<int> kU1 = {3, 6, 4, 10, 1, 5, 6, 7};
inline const std::vector<int> kU2 = {8, 9, 10, 2};
inline const std::vector<int> kV1Mutations = {8, 9, 10, 2, 1, 9, 4, 6, 3};
inline const std::vector<int> kV2Mutations = {7, 6, 5, 1, 2, 6, 3, 9, 4};
// Derived with DeriveGenus2WArcs: the unique arcs of crossing length <= 12
// completing the U-identity.
inline const std::vector<int> kW1 = {5, 6, 7, 8, 3, 6, 4, 10};
inline const std::vector<int> kW2 = {7, 6, 5, 2, 10, 9, 3, 6, 4, 10};
inline const std::vector<int> kW3 = {3, 6, 4, 10};
// The y-monomial Y of the V-identity, as exponents of y1..y10.
inline const std::vector<int> kY = {1, 1, 1, 1, 2, 1, 1, 0, 1, 0};
}  // namespace genus2

}  // namespace clusterlab::verify

#endif  // CLUSTERLAB_VERIFY_FIXTURES_H_
