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

#include "clusterlab/algebra/semifield.h"

#include <stdexcept>
#include <vector>

#include "clusterlab/algebra/laurent.h"
#include "doctest.h"

namespace {

using namespace clusterlab::algebra;

LaurentPolynomial P(const char* text, std::size_t n = 3) {
  return ParseLaurent(text, n, n);
}

}  // namespace

TEST_CASE("tropical monomials") {
  const TropicalMonomial a({1, -2, 0}), b({0, 3, -1});
  CHECK((a * b) == TropicalMonomial({1, 1, -1}));
  CHECK((a / b) == TropicalMonomial({1, -5, 1}));
  CHECK(a.Plus(b) == TropicalMonomial({0, -2, -1}));
  CHECK(a.Pow(-2) == TropicalMonomial({-2, 4, 0}));
  CHECK(a.PositivePart() == TropicalMonomial({1, 0, 0}));
  CHECK(a.NegativePart() == TropicalMonomial({0, 2, 0}));
  CHECK((a * a.Pow(-1)).is_one());
  CHECK(TropicalMonomial::Generator(3, 2) == TropicalMonomial({0, 1, 0}));
  CHECK(TropicalMonomial::One(2).ToString() == "1");
}

TEST_CASE("F-polynomial and tropical evaluation") {
  const auto u = P("x1^2 * x3^-1 * y3 + x2 * x3^-1 + x3^-1 * y1 * y3");
  const auto f = FPolynomial(u);
  CHECK(f == P("y3 + 1 + y1 * y3"));
  CHECK(TropicalEval(f, SemifieldSpec::Principal(3)).is_one());
  CHECK(TropicalEval(P("y1 + y2"), SemifieldSpec::Principal(3)) ==
        TropicalMonomial({0, 0, 0}));
  CHECK(TropicalEval(P("y1 * y2 + y1"), SemifieldSpec::Principal(3)) ==
        TropicalMonomial({1, 0, 0}));
  CHECK(TropicalEval(f, SemifieldSpec::Trivial(3)).rank() == 0);
  CHECK_THROWS_AS(TropicalEval(P("y1 - 1"), SemifieldSpec::Principal(3)),
                  std::domain_error);
  CHECK_THROWS_AS(TropicalEval(P("x1"), SemifieldSpec::Principal(3)),
                  std::domain_error);
}

TEST_CASE("specialization") {
  for (const auto& s :
       {SemifieldSpec::Principal(3), SemifieldSpec::Trivial(3)}) {
    CHECK(Specialize(P("x1"), s) == P("x1"));
  }
  const auto u = P("x1 * y1 * y2 + x2 * y2 + 1");
  CHECK(Specialize(u, SemifieldSpec::Principal(3)) == u);
  const auto t = Specialize(u, SemifieldSpec::Trivial(3));
  CHECK(t == P("x1 + x2 + 1"));
  CHECK(t.has_positive_coefficients());

  // y1 -> z1, y2 -> z1^-1 z2, y3 -> 1 in Trop(z1, z2).
  const auto spec = SemifieldSpec::Tropical(
      2, {TropicalMonomial({1, 0}), TropicalMonomial({-1, 1}),
          TropicalMonomial({0, 0})});
  const auto v = P("x1 * y1 + x2 * y2");
  // F = y1 + y2 evaluates to min((1,0), (-1,1)) = (-1, 0).
  CHECK(Specialize(v, spec) == ParseLaurent("x1 * y1^2 + x2 * y2", 3, 2));
  CHECK_THROWS_AS(Specialize(P("x1", 4), SemifieldSpec::Trivial(3)),
                  RankMismatch);
}

TEST_CASE("Chebyshev recurrence") {
  const auto L = P("x1 + x1^-1");
  CHECK(Chebyshev(1, L) == L);
  CHECK(Chebyshev(2, L) == L * L - P("2"));
  CHECK(Chebyshev(2, L) == P("x1^2 + x1^-2"));
  CHECK(Chebyshev(3, L) == P("x1^3 + x1^-3"));
  CHECK(Chebyshev(5, L) == P("x1^5 + x1^-5"));
  CHECK_THROWS_AS(Chebyshev(0, L), std::invalid_argument);
}
