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

#ifndef CLUSTERLAB_ALGEBRA_SEMIFIELD_H_
#define CLUSTERLAB_ALGEBRA_SEMIFIELD_H_

#include <cstddef>
#include <string>
#include <vector>

#include "clusterlab/algebra/laurent.h"

namespace clusterlab::algebra {

// An element y^e of a tropical semifield Trop(y_1..y_m). Multiplication adds
// exponents; the tropical sum is the componentwise minimum.
class TropicalMonomial {
 public:
  TropicalMonomial() = default;
  explicit TropicalMonomial(std::vector<int> exponents)
      : exponents_(std::move(exponents)) {}
  static TropicalMonomial One(std::size_t rank) {
    return TropicalMonomial(std::vector<int>(rank, 0));
  }
  // The generator y_i, 1-based.
  static TropicalMonomial Generator(std::size_t rank, std::size_t i);

  std::size_t rank() const { return exponents_.size(); }
  const std::vector<int>& exponents() const { return exponents_; }
  int operator[](std::size_t i) const { return exponents_[i]; }
  bool is_one() const;

  TropicalMonomial operator*(const TropicalMonomial& o) const;
  TropicalMonomial operator/(const TropicalMonomial& o) const;
  TropicalMonomial Pow(int k) const;
  // Tropical sum.
  TropicalMonomial Plus(const TropicalMonomial& o) const;
  // Componentwise max(e, 0) and max(-e, 0).
  TropicalMonomial PositivePart() const;
  TropicalMonomial NegativePart() const;

  friend bool operator==(const TropicalMonomial&,
                         const TropicalMonomial&) = default;

  std::string ToString() const;

 private:
  std::vector<int> exponents_;
};

class SemifieldSpec {
 public:
  enum class Kind { kPrincipal, kTrivial, kTropical };

  // Trop(y_1..y_n) with the identity assignment.
  static SemifieldSpec Principal(std::size_t n);
  // The one-element semifield.
  static SemifieldSpec Trivial(std::size_t n);
  // Trop(z_1..z_m) with y_i assigned to `assignment[i-1]`.
  static SemifieldSpec Tropical(std::size_t m,
                                std::vector<TropicalMonomial> assignment);

  Kind kind() const { return kind_; }
  // Number of coefficient variables y_i.
  std::size_t n() const { return n_; }
  // Rank of the target semifield (0 for the trivial one).
  std::size_t m() const { return m_; }
  const TropicalMonomial& image(std::size_t i) const { return assignment_[i]; }

 private:
  Kind kind_ = Kind::kTrivial;
  std::size_t n_ = 0, m_ = 0;
  std::vector<TropicalMonomial> assignment_;
};

// p with every x_i set to 1.
LaurentPolynomial FPolynomial(const LaurentPolynomial& p);

// Evaluates a y-only polynomial with positive coefficients in the semifield.
// Throws std::domain_error on a nonpositive coefficient or an x-dependence.
TropicalMonomial TropicalEval(const LaurentPolynomial& f,
                              const SemifieldSpec& s);

// X(x; yhat) / F_X(yhat). For the trivial semifield the result stays in the
// input ring with all y-exponents zero; for a tropical one it lives in
// (x_rank, m).
LaurentPolynomial Specialize(const LaurentPolynomial& p,
                             const SemifieldSpec& s);

// T_1 = L, T_2 = L^2 - 2, T_k = L T_{k-1} - T_{k-2}.
LaurentPolynomial Chebyshev(int k, const LaurentPolynomial& L);

}  // namespace clusterlab::algebra

#endif  // CLUSTERLAB_ALGEBRA_SEMIFIELD_H_
