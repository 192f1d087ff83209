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

#include "clusterlab/verify/cases.h"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "clusterlab/algebra/semifield.h"
#include "clusterlab/mutation/seed.h"
#include "clusterlab/snake/graph.h"
#include "clusterlab/surface/builtin.h"
#include "clusterlab/verify/fixtures.h"
#include "clusterlab/verify/oracle.h"
#include "json.hpp"

namespace clusterlab::verify {
namespace {

using surface::ArcCrossing;
using surface::LoopCrossing;
using surface::Triangulation;
using TriPtr = std::shared_ptr<const Triangulation>;
using Outcome = std::pair<Status, std::string>;

template <class Body>
CaseReport Run(std::string name, Body&& body) {
  CaseReport r;
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::tie(r.status, r.detail) = body();
  } catch (const surface::InvalidCrossing& e) {
    r.status = Status::kSkipped;
    r.detail = std::string("fixture: ") + e.what();
  } catch (const std::exception& e) {
    r.status = Status::kFail;
    r.detail = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

Outcome Compare(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs,
                std::string note = {}) {
  const LaurentPolynomial diff = lhs - rhs;
  if (diff.is_zero()) return {Status::kPass, std::move(note)};
  return {Status::kFail, "lhs - rhs = " + algebra::ToString(diff)};
}

// Ring elements of a fixed surface; y-monomials collapse to 1 under trivial
// coefficients.
class Vars {
 public:
  Vars(std::size_t n, Coefficients c) : n_(n), c_(c) {}

  LaurentPolynomial x(std::size_t i) const {
    return LaurentPolynomial::X(n_, i);
  }
  LaurentPolynomial one() const { return LaurentPolynomial::Constant(n_, 1); }
  // Product of y_i over `idx`, with repetition.
  LaurentPolynomial y(std::initializer_list<int> idx) const {
    std::vector<int> e(n_, 0);
    for (int i : idx) ++e[i - 1];
    return y_exp(e);
  }
  LaurentPolynomial y_exp(const std::vector<int>& e) const {
    if (c_ == Coefficients::kTrivial) return one();
    const std::vector<int> zero(n_, 0);
    return LaurentPolynomial::Monomial(n_, n_, zero, e);
  }

 private:
  std::size_t n_;
  Coefficients c_;
};

ArcCrossing Arc(const std::vector<int>& arcs) { return {arcs, std::nullopt}; }

LaurentPolynomial Trivialize(const LaurentPolynomial& p) {
  return algebra::Specialize(p, algebra::SemifieldSpec::Trivial(p.y_rank()));
}

struct TorusTerms {
  LaurentPolynomial V1, V2, L, X1, U1, U2, W1;
};

TorusTerms ComputeTorus(Coefficients c) {
  const TriPtr t = Genus1();
  TorusTerms r;
  r.V1 = ExpandArc(t, Arc(genus1::kV1), c);
  r.V2 = ExpandArc(t, Arc(genus1::kV2), c);
  r.L = ExpandLoop(t, surface::BoundaryLoop(*t), c);
  r.X1 = ExpandTrimmed(t, Arc(genus1::kV1), c);
  r.U1 = ExpandArc(t, Arc(genus1::kU1), c);
  r.U2 = ExpandArc(t, Arc(genus1::kU2), c);
  r.W1 = ExpandArc(t, Arc(genus1::kW1), c);
  return r;
}

// Trivial-coefficient terms obtained by specializing the principal ones.
// Each must agree with expanding at y = 1 directly.
TorusTerms TrivialTorus() {
  const TorusTerms p = ComputeTorus(Coefficients::kPrincipal);
  const TorusTerms direct = ComputeTorus(Coefficients::kTrivial);
  TorusTerms r{Trivialize(p.V1), Trivialize(p.V2), Trivialize(p.L),
               Trivialize(p.X1), Trivialize(p.U1), Trivialize(p.U2),
               Trivialize(p.W1)};
  const std::pair<const LaurentPolynomial*, const LaurentPolynomial*> pairs[] =
      {{&r.V1, &direct.V1}, {&r.V2, &direct.V2}, {&r.L, &direct.L},
       {&r.X1, &direct.X1}, {&r.U1, &direct.U1}, {&r.U2, &direct.U2},
       {&r.W1, &direct.W1}};
  for (const auto& [a, b] : pairs) {
    if (!(*a == *b)) {
      throw std::logic_error("trivial specialization disagrees with y = 1: " +
                             algebra::ToString(*a - *b));
    }
  }
  return r;
}

std::string CaseName(std::string base, Coefficients c, Control control) {
  if (c == Coefficients::kTrivial) base += "-trivial";
  if (control != Control::kNone) base += "-control";
  return base;
}

struct Genus2Terms {
  LaurentPolynomial V1, V2, L, X1, X2;
};

Genus2Terms ComputeGenus2V() {
  const TriPtr t = Genus2();
  return {ExpandArc(t, Arc(genus2::kV1)), ExpandArc(t, Arc(genus2::kV2)),
          ExpandLoop(t, surface::BoundaryLoop(*t)),
          ExpandTrimmed(t, Arc(genus2::kV1)),
          ExpandTrimmed(t, Arc(genus2::kV2))};
}

// The variable produced by the last mutation of `seq`.
LaurentPolynomial Mutated(const Triangulation& t, const std::vector<int>& seq) {
  const mutation::Seed s = mutation::MutateSeq(
      mutation::InitialSeed(surface::ExchangeMatrix(t)), seq);
  return s.cluster[seq.back() - 1];
}

Outcome CheckOracles(
    const Triangulation& t,
    const std::vector<std::pair<const std::vector<int>*,
                                const std::vector<int>*>>& arcs_and_seqs,
    const TriPtr& tp) {
  std::ostringstream note;
  for (const auto& [arcs, seq] : arcs_and_seqs) {
    if (seq->empty()) {
      return {Status::kSkipped, "no mutation sequence recorded for arc " +
                                    surface::SequenceToString(*arcs)};
    }
    const LaurentPolynomial via_mutation = Mutated(t, *seq);
    const LaurentPolynomial via_snake = ExpandArc(tp, Arc(*arcs));
    if (!(via_mutation == via_snake)) {
      return {Status::kFail, "arc " + surface::SequenceToString(*arcs) +
                                 ": lhs - rhs = " +
                                 algebra::ToString(via_mutation - via_snake)};
    }
    note << surface::SequenceToString(*arcs) << " <- "
         << surface::SequenceToString(*seq) << "; ";
  }
  return {Status::kPass, note.str()};
}

std::uint64_t Fnv(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<int> RandomSequence(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> seq;
  while (static_cast<int>(seq.size()) < len) {
    const int k = pick(rng);
    if (!seq.empty() && seq.back() == k) continue;
    seq.push_back(k);
  }
  return seq;
}

std::string PositivityViolation(const mutation::Seed& s) {
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (!s.cluster[i].has_positive_coefficients()) {
      return "x" + std::to_string(i + 1) + " = " +
             algebra::ToString(s.cluster[i]);
    }
  }
  return {};
}

}  // namespace

const char* StatusName(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kSkipped:
      return "skipped";
  }
  return "?";
}

LaurentPolynomial ExpandArc(TriPtr t, const ArcCrossing& a, Coefficients c) {
  return snake::Expand(snake::BuildSnake(std::move(t), a), c);
}

LaurentPolynomial ExpandLoop(TriPtr t, const LoopCrossing& l, Coefficients c) {
  return snake::ExpandBand(snake::BuildBand(std::move(t), l), c);
}

LaurentPolynomial ExpandTrimmed(TriPtr t, const ArcCrossing& a,
                                Coefficients c) {
  return snake::ExpandBand(
      snake::TrimToBand(snake::BuildSnake(std::move(t), a)), c);
}

CaseReport CheckTorusV(Coefficients c, Control control) {
  return Run(CaseName("torus-v", c, control), [&]() -> Outcome {
    TorusTerms r = c == Coefficients::kTrivial
                       ? TrivialTorus()
                       : ComputeTorus(Coefficients::kPrincipal);
    const Vars v(4, c);
    if (control == Control::kPerturbX1) r.X1 += v.one();
    return Compare(r.V1 * r.V2, r.L + v.y({3}) * (v.y({4}) * r.X1 + v.x(3)) *
                                          (r.X1 + v.y({1, 2, 3}) * v.x(4)));
  });
}

CaseReport CheckTorusU(Coefficients c, Control control) {
  return Run(CaseName("torus-u", c, control), [&]() -> Outcome {
    const TorusTerms r = c == Coefficients::kTrivial
                             ? TrivialTorus()
                             : ComputeTorus(Coefficients::kPrincipal);
    const Vars v(4, c);
    LaurentPolynomial rhs = v.y({1}) * r.W1 + v.y({4}) * r.X1 +
                            v.y({1, 2, 3, 4}) * v.x(4) +
                            v.y({1, 3}) * v.x(1) * v.x(2);
    if (control != Control::kDropX3) rhs += v.x(3);
    return Compare(r.U1 * r.U2, rhs);
  });
}

CaseReport CheckFPolynomials() {
  return Run("fpoly-tropical", []() -> Outcome {
    std::vector<std::pair<std::string, LaurentPolynomial>> vars;
    const TriPtr g1 = Genus1();
    for (const auto* arcs : {&genus1::kV1, &genus1::kV2, &genus1::kU1,
                             &genus1::kU2, &genus1::kW1}) {
      vars.emplace_back("genus1 " + surface::SequenceToString(*arcs),
                        ExpandArc(g1, Arc(*arcs)));
    }
    const TriPtr g2 = Genus2();
    for (const auto* arcs : {&genus2::kV1, &genus2::kV2, &genus2::kU1,
                             &genus2::kU2, &genus2::kW3}) {
      vars.emplace_back("genus2 " + surface::SequenceToString(*arcs),
                        ExpandArc(g2, Arc(*arcs)));
    }
    for (const auto& [name, p] : vars) {
      const LaurentPolynomial f = algebra::FPolynomial(p);
      if (f.constant_term() != 1) {
        return {Status::kFail, name + ": F-polynomial has constant term " +
                                   f.constant_term().str()};
      }
      const auto trop = algebra::TropicalEval(
          f, algebra::SemifieldSpec::Principal(p.y_rank()));
      if (!trop.is_one()) {
        return {Status::kFail, name + ": F evaluates to " + trop.ToString()};
      }
      if (!(algebra::Specialize(
                p, algebra::SemifieldSpec::Principal(p.y_rank())) == p)) {
        return {Status::kFail, name + ": principal specialization moved it"};
      }
    }
    return {Status::kPass, std::to_string(vars.size()) + " cluster variables"};
  });
}

CaseReport CheckGenus1Oracle() {
  return Run("genus1-oracle", []() -> Outcome {
    const TriPtr t = Genus1();
    return CheckOracles(*t,
                        {{&genus1::kV1, &genus1::kV1Mutations},
                         {&genus1::kV2, &genus1::kV2Mutations},
                         {&genus1::kU1, &genus1::kU1Mutations},
                         {&genus1::kU2, &genus1::kU2Mutations},
                         {&genus1::kW1, &genus1::kW1Mutations}},
                        t);
  });
}

CaseReport CheckGenus2V() {
  return Run("genus2-v", []() -> Outcome {
    const Genus2Terms r = ComputeGenus2V();
    const Vars v(10, Coefficients::kPrincipal);
    return Compare(r.V1 * r.V2,
                   r.L + v.y({7}) * (v.y({8}) * r.X1 + v.x(7)) *
                             (r.X2 + v.y_exp(genus2::kY) * v.x(8)));
  });
}

CaseReport CheckGenus2U() {
  return Run("genus2-u", []() -> Outcome {
    const TriPtr t = Genus2();
    const Vars v(10, Coefficients::kPrincipal);
    const LaurentPolynomial U1 = ExpandArc(t, Arc(genus2::kU1));
    const LaurentPolynomial U2 = ExpandArc(t, Arc(genus2::kU2));
    const LaurentPolynomial X1 = ExpandTrimmed(t, Arc(genus2::kV1));
    const LaurentPolynomial residual = U1 * U2 - v.x(7) - v.y({8}) * X1;
    try {
      algebra::DivExact(residual, v.y({1}));
    } catch (const algebra::NotDivisible&) {
      return {Status::kFail, "U1 U2 - x7 - y8 X1 is not divisible by y1"};
    }
    const LaurentPolynomial W1 = ExpandArc(t, Arc(genus2::kW1));
    const LaurentPolynomial W2 = ExpandArc(t, Arc(genus2::kW2));
    const LaurentPolynomial W3 = ExpandArc(t, Arc(genus2::kW3));
    return Compare(U1 * U2,
                   v.y({1}) * W1 + v.x(7) + v.y({8}) * X1 + v.y({1, 8}) * W2 +
                       v.y({1, 5, 6, 7}) * W3 * v.x(1),
                   "residual divisible by y1");
  });
}

CaseReport CheckGenus2Oracle() {
  return Run("genus2-oracle", []() -> Outcome {
    const TriPtr t = Genus2();
    return CheckOracles(*t,
                        {{&genus2::kV1, &genus2::kV1Mutations},
                         {&genus2::kV2, &genus2::kV2Mutations}},
                        t);
  });
}

GenusGIdentity SolveGenusG(int g) {
  const TriPtr t =
      g == 2 ? Genus2()
             : std::make_shared<const Triangulation>(surface::BuiltinGenus(g));
  const std::size_t n = static_cast<std::size_t>(t->n_arcs());
  const LoopCrossing loop = surface::BoundaryLoop(*t);
  const std::vector<int>& fan = loop.arcs;
  GenusGIdentity id;
  id.a = fan.front();
  id.a_prime = fan.back();
  const auto p = std::find(fan.begin() + 1, fan.end(), id.a);
  if (p == fan.end() || p + 1 == fan.end() || *(p + 1) != id.a_prime) {
    throw std::runtime_error("boundary fan does not split into V1, V2");
  }
  id.v2.assign(fan.begin(), p + 1);
  id.v1.assign(p + 1, fan.end());

  const Vars v(n, Coefficients::kPrincipal);
  const LaurentPolynomial V1 = ExpandArc(t, Arc(id.v1));
  const LaurentPolynomial V2 = ExpandArc(t, Arc(id.v2));
  const LaurentPolynomial L = ExpandLoop(t, loop);
  const LaurentPolynomial X1 = ExpandTrimmed(t, Arc(id.v1));
  const LaurentPolynomial X2 = ExpandTrimmed(t, Arc(id.v2));
  LaurentPolynomial Y;
  try {
    const LaurentPolynomial q = algebra::DivExact(
        V1 * V2 - L, v.y({id.a}) * (v.y({id.a_prime}) * X1 + v.x(id.a)));
    Y = algebra::DivExact(q - X2, v.x(id.a_prime));
  } catch (const algebra::NotDivisible& e) {
    throw std::runtime_error(std::string("no Y solves the identity: ") +
                             e.what());
  }
  const auto x0 =
      Y.is_monomial() ? Y.x_exponents(0) : std::span<const algebra::Exp>{};
  if (!Y.is_monomial() || Y.coeff(0) != 1 ||
      std::any_of(x0.begin(), x0.end(), [](auto e) { return e != 0; })) {
    throw std::runtime_error("Y is not a y-monomial: " + algebra::ToString(Y));
  }
  for (auto e : Y.y_exponents(0)) {
    if (e < 0) {
      throw std::runtime_error("Y has a negative exponent: " +
                               algebra::ToString(Y));
    }
    id.y.push_back(e);
  }
  // Re-check the identity with the solved Y.
  if (!(V1 * V2 == L + v.y({id.a}) * (v.y({id.a_prime}) * X1 + v.x(id.a)) *
                           (X2 + v.y_exp(id.y) * v.x(id.a_prime)))) {
    throw std::logic_error("solved Y does not satisfy the identity");
  }
  return id;
}

CaseReport CheckGenusG(int g) {
  return Run(
      g == 2 ? "genus2-builder" : "genus" + std::to_string(g) + "-v",
      [g]() -> Outcome {
        const GenusGIdentity id = SolveGenusG(g);
        const std::size_t n = id.y.size();
        const std::vector<int> zero(n, 0);
        std::string note =
            "a=" + std::to_string(id.a) + " a'=" + std::to_string(id.a_prime) +
            " V1=" + surface::SequenceToString(id.v1) +
            " V2=" + surface::SequenceToString(id.v2) + " Y=" +
            algebra::ToString(LaurentPolynomial::Monomial(n, n, zero, id.y));
        // The fan reads the genus-2 arcs from their other ends.
        const std::vector<int> r1(id.v1.rbegin(), id.v1.rend());
        const std::vector<int> r2(id.v2.rbegin(), id.v2.rend());
        if (g == 2 && (id.y != genus2::kY || id.a != 7 || id.a_prime != 8 ||
                       r1 != genus2::kV1 || r2 != genus2::kV2)) {
          return {Status::kFail, "differs from the genus-2 case: " + note};
        }
        return {Status::kPass, note};
      });
}

CaseReport CheckAnnulus() {
  return Run("annulus", []() -> Outcome {
    const TriPtr t = Annulus();
    const snake::BandGraph band =
        snake::BuildBand(t, LoopCrossing{{1, 2}, std::nullopt});
    const auto flips = snake::EnumerateMatchings(band);
    const auto all = BruteForceMatchings(band.graph());
    const snake::PerfectMatching minimal = snake::MinimalMatching(band);
    std::set<snake::PerfectMatching> good, reached;
    for (const auto& m : all) {
      if (RegionHeights(band.graph(), minimal, m)) good.insert(m);
    }
    for (const auto& m : flips) reached.insert(m.matching);
    if (good != reached) {
      return {Status::kFail, "flip closure differs from region oracle"};
    }
    const LaurentPolynomial closed =
        algebra::ParseLaurent("x1 * x2^-1 + x1^-1 * x2 + x1^-1 * x2^-1", 2, 2);
    const LaurentPolynomial oracle =
        OracleExpansion(band.graph(), minimal, 2, Coefficients::kTrivial);
    if (!(oracle == closed)) {
      return {Status::kFail, "brute force - closed form = " +
                                 algebra::ToString(oracle - closed)};
    }
    auto out = Compare(snake::ExpandBand(band, Coefficients::kTrivial), closed);
    if (out.first == Status::kPass) {
      out.second = std::to_string(good.size()) + " good of " +
                   std::to_string(all.size()) + " matchings";
    }
    return out;
  });
}

CaseReport CheckChebyshev(TriPtr t, const LoopCrossing& loop, int k) {
  const std::string name =
      "chebyshev-" +
      std::string(t->genus() == 0 ? "annulus"
                                  : "genus" + std::to_string(t->genus())) +
      "-k" + std::to_string(k);
  return Run(name, [&]() -> Outcome {
    LoopCrossing wrapped{{}, loop.start};
    for (int i = 0; i < k; ++i) {
      wrapped.arcs.insert(wrapped.arcs.end(), loop.arcs.begin(),
                          loop.arcs.end());
    }
    const LaurentPolynomial L = ExpandLoop(t, loop, Coefficients::kTrivial);
    return Compare(ExpandLoop(t, wrapped, Coefficients::kTrivial),
                   algebra::Chebyshev(k, L),
                   std::to_string(wrapped.arcs.size()) + " tiles");
  });
}

CaseReport CheckMatchingOracle() {
  return Run("matching-oracle", []() -> Outcome {
    int snakes = 0, bands = 0;
    auto check = [](const snake::TileGraph& g,
                    const snake::PerfectMatching& minimal,
                    const std::vector<snake::WeightedMatching>& flips,
                    bool band) -> std::string {
      std::set<snake::PerfectMatching> expected, reached;
      for (const auto& m : BruteForceMatchings(g)) {
        const auto h = RegionHeights(g, minimal, m);
        if (!band && !h) return "matching without region heights";
        if (h) expected.insert(m);
      }
      int weight_one = 0;
      for (const auto& m : flips) {
        reached.insert(m.matching);
        if (RegionHeights(g, minimal, m.matching) != m.heights) {
          return "heights differ from the region oracle";
        }
        if (std::all_of(m.weight.y.begin(), m.weight.y.end(),
                        [](int e) { return e == 0; })) {
          ++weight_one;
        }
      }
      if (reached != expected) {
        return "flip closure found " + std::to_string(reached.size()) +
               ", oracle " + std::to_string(expected.size());
      }
      if (weight_one != 1) {
        return std::to_string(weight_one) + " matchings of y-weight 1";
      }
      return {};
    };

    std::vector<std::pair<TriPtr, std::vector<int>>> arcs;
    for (const auto* a : {&genus1::kV1, &genus1::kV2, &genus1::kU1,
                          &genus1::kU2, &genus1::kW1}) {
      arcs.emplace_back(Genus1(), *a);
    }
    for (const auto* a :
         {&genus2::kV1, &genus2::kV2, &genus2::kU1, &genus2::kU2, &genus2::kW1,
          &genus2::kW2, &genus2::kW3}) {
      arcs.emplace_back(Genus2(), *a);
    }
    for (const auto& [t, a] : arcs) {
      const snake::SnakeGraph whole = snake::BuildSnake(t, Arc(a));
      // Every contiguous piece of a fixture arc, traced along the arc.
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j <= a.size() && j - i <= 10; ++j) {
          const snake::SnakeGraph s = snake::BuildSnake(
              t, ArcCrossing{std::vector<int>(a.begin() + i, a.begin() + j),
                             whole.path().lower[i]});
          const std::string err = check(s.graph(), snake::MinimalMatching(s),
                                        snake::EnumerateMatchings(s), false);
          if (!err.empty()) {
            return {Status::kFail, "snake " +
                                       surface::SequenceToString(s.crossing()) +
                                       ": " + err};
          }
          ++snakes;
        }
      }
      if (a.size() >= 3 && a.front() == a.back()) {
        const snake::BandGraph b = snake::TrimToBand(whole);
        const std::string err = check(b.graph(), snake::MinimalMatching(b),
                                      snake::EnumerateMatchings(b), true);
        if (!err.empty()) {
          return {
              Status::kFail,
              "band " + surface::SequenceToString(b.crossing()) + ": " + err};
        }
        ++bands;
      }
    }
    const snake::BandGraph annulus =
        snake::BuildBand(Annulus(), LoopCrossing{{1, 2}, std::nullopt});
    const snake::BandGraph torus_loop =
        snake::BuildBand(Genus1(), surface::BoundaryLoop(*Genus1()));
    for (const auto* b : {&annulus, &torus_loop}) {
      const std::string err = check(b->graph(), snake::MinimalMatching(*b),
                                    snake::EnumerateMatchings(*b), true);
      if (!err.empty()) {
        return {
            Status::kFail,
            "band " + surface::SequenceToString(b->crossing()) + ": " + err};
      }
      ++bands;
    }
    return {Status::kPass, std::to_string(snakes) + " snakes, " +
                               std::to_string(bands) + " bands"};
  });
}

CaseReport CheckFuzz(std::uint64_t seed, int trials, int max_len,
                     int involution_trials) {
  return Run("fuzz", [=]() -> Outcome {
    std::mt19937_64 rng(seed);
    std::uint64_t digest = 0xcbf29ce484222325ULL;
    const mutation::Seed seeds[] = {
        mutation::InitialSeed(surface::ExchangeMatrix(*Genus1())),
        mutation::InitialSeed(surface::ExchangeMatrix(*Genus2()))};

    for (const auto& s0 : seeds) {
      if (!(mutation::MutateSeq(s0, std::vector<int>{}) == s0)) {
        return {Status::kFail, "empty sequence changed the seed"};
      }
    }
    std::uniform_int_distribution<int> len_dist(1, max_len);
    for (const auto& s0 : seeds) {
      const int n = static_cast<int>(s0.rank());
      for (int trial = 0; trial < trials; ++trial) {
        const std::vector<int> seq = RandomSequence(rng, n, len_dist(rng));
        mutation::Seed s = s0;
        for (int k : seq) {
          digest = Fnv(digest, static_cast<std::uint64_t>(k));
          s = mutation::Mutate(s, k);
          const std::string bad = PositivityViolation(s);
          if (!bad.empty()) {
            return {Status::kFail,
                    "after " + surface::SequenceToString(seq) + ": " + bad};
          }
        }
        for (const auto& c : s.coeffs) {
          for (int e : c.exponents()) digest = Fnv(digest, e);
        }
      }
    }

    std::uniform_int_distribution<int> which(0, 1), prefix(0, 3);
    for (int trial = 0; trial < involution_trials; ++trial) {
      const mutation::Seed& s0 = seeds[which(rng)];
      const int n = static_cast<int>(s0.rank());
      const mutation::Seed s =
          mutation::MutateSeq(s0, RandomSequence(rng, n, prefix(rng)));
      const int k = std::uniform_int_distribution<int>(1, n)(rng);
      digest = Fnv(digest, static_cast<std::uint64_t>(k));
      if (!(mutation::Mutate(mutation::Mutate(s, k), k) == s)) {
        return {Status::kFail,
                "mutation at " + std::to_string(k) + " is not an involution"};
      }
    }

    std::string ranks;
    for (int g = 1; g <= 4; ++g) {
      const Triangulation t = surface::BuiltinGenus(g);
      const int r = mutation::MatrixRank(surface::ExchangeMatrix(t));
      if (r != t.n_arcs()) {
        return {Status::kFail, "rank of genus-" + std::to_string(g) +
                                   " exchange matrix is " + std::to_string(r)};
      }
      ranks += (g > 1 ? "," : "") + std::to_string(r);
    }
    std::ostringstream note;
    note << 2 * trials << " sequences, " << involution_trials
         << " involutions, ranks " << ranks << ", digest " << std::hex
         << digest;
    return {Status::kPass, note.str()};
  });
}

LaurentPolynomial BangleProduct(TriPtr t, const BangleSpec& spec,
                                Coefficients c) {
  if (spec.components.empty()) {
    throw std::invalid_argument("BangleProduct: empty spec");
  }
  LaurentPolynomial out = LaurentPolynomial::Constant(t->n_arcs(), 1);
  for (const auto& comp : spec.components) {
    if (const auto* a = std::get_if<ArcCrossing>(&comp)) {
      out *= ExpandArc(t, *a, c);
    } else {
      out *= ExpandLoop(t, std::get<LoopCrossing>(comp), c);
    }
  }
  return out;
}

CaseReport CheckBangles() {
  return Run("bangle", []() -> Outcome {
    const TriPtr t = Genus1();
    const TorusTerms r = ComputeTorus(Coefficients::kPrincipal);
    const LoopCrossing loop = surface::BoundaryLoop(*t);
    if (!(BangleProduct(t, {{Arc(genus1::kW1)}}) == r.W1)) {
      return {Status::kFail, "singleton arc differs from its expansion"};
    }
    if (!(BangleProduct(t, {{loop}}) == r.L)) {
      return {Status::kFail, "boundary loop bangle differs from L"};
    }
    if (!(BangleProduct(t, {{loop, loop}}) == r.L * r.L)) {
      return {Status::kFail, "bangle of two loops differs from L^2"};
    }
    const Vars v(4, Coefficients::kPrincipal);
    return Compare(BangleProduct(t, {{Arc(genus1::kU1), Arc(genus1::kU2)}}),
                   v.y({1}) * r.W1 + v.x(3) + v.y({4}) * r.X1 +
                       v.y({1, 2, 3, 4}) * v.x(4) +
                       v.y({1, 3}) * v.x(1) * v.x(2));
  });
}

const std::vector<Case>& Registry() {
  static const std::vector<Case> kCases = [] {
    using C = Coefficients;
    std::vector<Case> v = {
        {"torus-v", "torus V-identity, principal coefficients",
         [](const CaseOptions&) { return CheckTorusV(); }},
        {"torus-v-trivial", "torus V-identity at y = 1",
         [](const CaseOptions&) { return CheckTorusV(C::kTrivial); }},
        {"torus-u", "torus U-identity, principal coefficients",
         [](const CaseOptions&) { return CheckTorusU(); }},
        {"torus-u-trivial", "torus U-identity at y = 1",
         [](const CaseOptions&) { return CheckTorusU(C::kTrivial); }},
        {"fpoly-tropical", "F-polynomials evaluate to 1 tropically",
         [](const CaseOptions&) { return CheckFPolynomials(); }},
        {"genus1-oracle", "torus mutation sequences against snake expansions",
         [](const CaseOptions&) { return CheckGenus1Oracle(); }},
        {"genus2-v", "genus-2 V-identity",
         [](const CaseOptions&) { return CheckGenus2V(); }},
        {"genus2-u", "genus-2 U-identity",
         [](const CaseOptions&) { return CheckGenus2U(); }},
        {"genus2-oracle", "genus-2 mutation sequences against snake expansions",
         [](const CaseOptions&) { return CheckGenus2Oracle(); }},
        {"genus2-builder", "fan-derived V-identity reproduces genus 2",
         [](const CaseOptions&) { return CheckGenusG(2); }},
        {"genus3-v", "genus-3 V-identity with solved Y",
         [](const CaseOptions&) { return CheckGenusG(3); }},
        {"genus4-v", "genus-4 V-identity with solved Y",
         [](const CaseOptions&) { return CheckGenusG(4); }},
        {"annulus", "annulus band closed form against brute force",
         [](const CaseOptions&) { return CheckAnnulus(); }},
        {"chebyshev-annulus", "double and triple annulus loops",
         [](const CaseOptions&) {
           CaseReport r = CheckChebyshev(Annulus(), {{1, 2}, std::nullopt}, 2);
           if (r.status != Status::kPass) return r;
           CaseReport r3 = CheckChebyshev(Annulus(), {{1, 2}, std::nullopt}, 3);
           r3.elapsed_ms += r.elapsed_ms;
           r3.name = "chebyshev-annulus";
           return r3;
         }},
        {"chebyshev-genus1", "doubled torus boundary loop",
         [](const CaseOptions&) {
           CaseReport r =
               CheckChebyshev(Genus1(), surface::BoundaryLoop(*Genus1()), 2);
           r.name = "chebyshev-genus1";
           return r;
         }},
        {"matching-oracle", "flip closure against brute force",
         [](const CaseOptions&) { return CheckMatchingOracle(); }},
        {"fuzz", "random mutation sequences",
         [](const CaseOptions& o) { return CheckFuzz(o.seed); }},
        {"bangle", "products of arcs and loops",
         [](const CaseOptions&) { return CheckBangles(); }},
    };
    return v;
  }();
  return kCases;
}

const Case* FindCase(std::string_view name) {
  for (const Case& c : Registry()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<CaseReport> RunCases(std::string_view name,
                                 const CaseOptions& options) {
  std::vector<CaseReport> out;
  if (name == "all") {
    for (const Case& c : Registry()) out.push_back(c.run(options));
    return out;
  }
  const Case* c = FindCase(name);
  if (c == nullptr) {
    throw std::invalid_argument("unknown case: " + std::string(name));
  }
  out.push_back(c->run(options));
  return out;
}

std::string ReportsToJson(const std::vector<CaseReport>& reports) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : reports) {
    j.push_back({{"name", r.name},
                 {"status", StatusName(r.status)},
                 {"elapsed_ms", r.elapsed_ms},
                 {"detail", r.detail}});
  }
  return j.dump(2);
}

}  // namespace clusterlab::verify
