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

#ifndef CLUSTERLAB_VERIFY_CASES_H_
#define CLUSTERLAB_VERIFY_CASES_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clusterlab/algebra/laurent.h"
#include "clusterlab/snake/matchings.h"
#include "clusterlab/surface/crossing.h"
#include "clusterlab/surface/triangulation.h"

namespace clusterlab::verify {

using algebra::LaurentPolynomial;
using snake::Coefficients;

enum class Status { kPass, kFail, kSkipped };
const char* StatusName(Status s);

struct CaseReport {
  std::string name;
  Status status = Status::kSkipped;
  // The nonzero difference for failing identities, otherwise a short note.
  std::string detail;
  double elapsed_ms = 0;
};

struct CaseOptions {
  std::uint64_t seed = 1;
};

struct Case {
  std::string name;
  std::string summary;
  std::function<CaseReport(const CaseOptions&)> run;
};

// All cases, in report order.
const std::vector<Case>& Registry();
// nullptr if unknown.
const Case* FindCase(std::string_view name);
// Runs `name`, or every case for "all". Throws std::invalid_argument for an
// unknown name.
std::vector<CaseReport> RunCases(std::string_view name,
                                 const CaseOptions& options);
// [{name, status, elapsed_ms, detail}]
std::string ReportsToJson(const std::vector<CaseReport>& reports);

// Expansion helpers. Arcs are traced from their default start slot unless
// pinned.
LaurentPolynomial ExpandArc(std::shared_ptr<const surface::Triangulation> t,
                            const surface::ArcCrossing& a,
                            Coefficients c = Coefficients::kPrincipal);
LaurentPolynomial ExpandLoop(std::shared_ptr<const surface::Triangulation> t,
                             const surface::LoopCrossing& l,
                             Coefficients c = Coefficients::kPrincipal);
// The band obtained by trimming the snake of `a`.
LaurentPolynomial ExpandTrimmed(std::shared_ptr<const surface::Triangulation> t,
                                const surface::ArcCrossing& a,
                                Coefficients c = Coefficients::kPrincipal);

// Negative controls perturb one side of an identity and must fail.
enum class Control { kNone, kPerturbX1, kDropX3 };

// V1 V2 = L + y3 (y4 X1 + x3)(X1 + y1 y2 y3 x4) on the torus.
CaseReport CheckTorusV(Coefficients c = Coefficients::kPrincipal,
                       Control control = Control::kNone);
// U1 U2 = y1 W1 + x3 + y4 X1 + y1 y2 y3 y4 x4 + y1 y3 x1 x2 on the torus.
CaseReport CheckTorusU(Coefficients c = Coefficients::kPrincipal,
                       Control control = Control::kNone);
// F-polynomials of the fixture cluster variables evaluate to 1 in the
// principal tropical semifield, and trivial specialization agrees with
// expanding at y = 1.
CaseReport CheckFPolynomials();
// Genus-1 cluster variables reached by the recorded mutation sequences.
CaseReport CheckGenus1Oracle();
// V1 V2 = L + y7 (y8 X1 + x7)(X2 + Y x8) with the fixture Y.
CaseReport CheckGenus2V();
// U1 U2 = y1 W1 + x7 + y8 X1 + y1 y8 W2 + y1 y5 y6 y7 W3 x1, plus
// divisibility of U1 U2 - x7 - y8 X1 by y1.
CaseReport CheckGenus2U();
CaseReport CheckGenus2Oracle();

// The genus-g V-identity for BuiltinGenus(g). The arcs come from the
// boundary fan: a is its first arc, V2 runs from the start of the fan to the
// next end of a, V1 is the rest and begins and ends at a' (the last arc of
// the fan). X_i trims V_i. Y is solved for and must be a y-monomial with
// nonnegative exponents.
struct GenusGIdentity {
  int a = 0, a_prime = 0;
  std::vector<int> v1, v2;
  std::vector<int> y;  // exponents of Y
};
// Throws std::runtime_error if Y is not a monomial.
GenusGIdentity SolveGenusG(int g);
CaseReport CheckGenusG(int g);

// Good matchings of the annulus band and its closed form, against brute
// force on the quotient graph.
CaseReport CheckAnnulus();
// The k-fold loop's band polynomial equals Chebyshev(k, L), trivial
// coefficients.
CaseReport CheckChebyshev(std::shared_ptr<const surface::Triangulation> t,
                          const surface::LoopCrossing& loop, int k);
// Flip closure against brute force on every fixture snake of <= 10 tiles.
CaseReport CheckMatchingOracle();
// Random mutation sequences: Laurentness, positivity, involution, rank.
CaseReport CheckFuzz(std::uint64_t seed, int trials = 100, int max_len = 8,
                     int involution_trials = 1000);

// A multiset of arcs and loops whose expansions are multiplied together.
// Compatibility of the components is not checked.
struct BangleSpec {
  std::vector<std::variant<surface::ArcCrossing, surface::LoopCrossing>>
      components;
};
// Throws std::invalid_argument for an empty spec.
LaurentPolynomial BangleProduct(std::shared_ptr<const surface::Triangulation> t,
                                const BangleSpec& spec,
                                Coefficients c = Coefficients::kPrincipal);
CaseReport CheckBangles();

}  // namespace clusterlab::verify

#endif  // CLUSTERLAB_VERIFY_CASES_H_
