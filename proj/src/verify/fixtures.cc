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

#include "clusterlab/verify/fixtures.h"

#include "clusterlab/surface/builtin.h"

namespace clusterlab::verify {

std::shared_ptr<const surface::Triangulation> Genus1() {
  static const auto t =
      std::make_shared<const surface::Triangulation>(surface::BuiltinGenus1());
  return t;
}

std::shared_ptr<const surface::Triangulation> Genus2() {
  static const auto t =
      std::make_shared<const surface::Triangulation>(surface::BuiltinGenus2());
  return t;
}

std::shared_ptr<const surface::Triangulation> Annulus() {
  static const auto t =
      std::make_shared<const surface::Triangulation>(surface::BuiltinAnnulus());
  return t;
}

}  // namespace clusterlab::verify
