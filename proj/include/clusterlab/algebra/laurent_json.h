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

#ifndef CLUSTERLAB_ALGEBRA_LAURENT_JSON_H_
#define CLUSTERLAB_ALGEBRA_LAURENT_JSON_H_

#include "clusterlab/algebra/laurent.h"
#include "json.hpp"

namespace clusterlab::algebra {

// {"x_rank": n, "y_rank": m, "terms": [{"coeff": c, "x": [..], "y": [..]}]}
// Coefficients that do not fit in 64 bits are written as decimal strings.
nlohmann::json ToJson(const LaurentPolynomial& p);
LaurentPolynomial LaurentFromJson(const nlohmann::json& j);

}  // namespace clusterlab::algebra

#endif  // CLUSTERLAB_ALGEBRA_LAURENT_JSON_H_
