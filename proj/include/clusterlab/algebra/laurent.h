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

#ifndef CLUSTERLAB_ALGEBRA_LAURENT_H_
#define CLUSTERLAB_ALGEBRA_LAURENT_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clusterlab/algebra/exponent_kernels.h"

namespace clusterlab::algebra {

using Coeff = boost::multiprecision::cpp_int;

class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class LaurentPolynomial;

// Hash-based accumulator for building a polynomial term by term. Rows are
// written into scratch() and committed with Commit(); duplicate exponent
// rows have their coefficients summed.
class TermAccumulator {
 public:
  TermAccumulator(std::size_t x_rank, std::size_t y_rank,
                  std::size_t expected_terms = 16);

  std::size_t stride() const { return stride_; }
  Exp* scratch() { return scratch_.data(); }
  void Commit(const Coeff& c);
  void Add(const Exp* row, const Coeff& c);

  LaurentPolynomial Finish() &&;

 private:
  std::size_t Probe(const Exp* row, std::uint64_t h) const;
  void Grow();

  std::size_t nx_, ny_, stride_;
  std::vector<Exp> rows_;
  std::vector<Coeff> coeffs_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> table_;  // 0 = empty, else term index + 1
  std::vector<Exp> scratch_;
};

// Sparse Laurent polynomial over Z in x_1..x_n and y_1..y_m. Terms are kept
// sorted in decreasing lexicographic order of the concatenated (x, y)
// exponent vector, with no zero coefficients, so equal polynomials have
// identical storage.
class LaurentPolynomial {
 public:
  LaurentPolynomial() : LaurentPolynomial(0, 0) {}
  explicit LaurentPolynomial(std::size_t rank)
      : LaurentPolynomial(rank, rank) {}
  LaurentPolynomial(std::size_t x_rank, std::size_t y_rank);

  static LaurentPolynomial Constant(std::size_t rank, const Coeff& c);
  static LaurentPolynomial Monomial(std::size_t x_rank, std::size_t y_rank,
                                    std::span<const int> x,
                                    std::span<const int> y, const Coeff& c = 1);
  // The variables x_i and y_i, 1-based.
  static LaurentPolynomial X(std::size_t rank, std::size_t i, int e = 1);
  static LaurentPolynomial Y(std::size_t rank, std::size_t i, int e = 1);

  std::size_t x_rank() const { return nx_; }
  std::size_t y_rank() const { return ny_; }
  std::size_t stride() const { return stride_; }
  std::size_t num_terms() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }

  const Exp* row(std::size_t t) const { return rows_.data() + t * stride_; }
  std::span<const Exp> x_exponents(std::size_t t) const {
    return {row(t), nx_};
  }
  std::span<const Exp> y_exponents(std::size_t t) const {
    return {row(t) + nx_, ny_};
  }
  const Coeff& coeff(std::size_t t) const { return coeffs_[t]; }

  // True when every coefficient is strictly positive.
  bool has_positive_coefficients() const;
  // Coefficient of the monomial with all exponents zero.
  Coeff constant_term() const;

  // Multiplies by x^dx y^dy.
  LaurentPolynomial Shifted(std::span<const int> dx,
                            std::span<const int> dy) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& q);
  LaurentPolynomial& operator-=(const LaurentPolynomial& q);
  LaurentPolynomial& operator*=(const LaurentPolynomial& q);

  friend bool operator==(const LaurentPolynomial& a,
                         const LaurentPolynomial& b);

 private:
  friend class TermAccumulator;
  friend struct LaurentAccess;

  std::size_t nx_, ny_, stride_;
  std::vector<Exp> rows_;
  std::vector<Coeff> coeffs_;
};

// p + q, or p - q when `negate_q` is set.
LaurentPolynomial Add(const LaurentPolynomial& p, const LaurentPolynomial& q,
                      bool negate_q = false);
LaurentPolynomial Mul(const LaurentPolynomial& p, const LaurentPolynomial& q);
// Returns r with r * q == p. Throws NotDivisible if no such r exists.
LaurentPolynomial DivExact(const LaurentPolynomial& p,
                           const LaurentPolynomial& q);
LaurentPolynomial Pow(const LaurentPolynomial& p, unsigned k);

inline LaurentPolynomial operator+(const LaurentPolynomial& p,
                                   const LaurentPolynomial& q) {
  return Add(p, q);
}
inline LaurentPolynomial operator-(const LaurentPolynomial& p,
                                   const LaurentPolynomial& q) {
  return Add(p, q, true);
}
inline LaurentPolynomial operator*(const LaurentPolynomial& p,
                                   const LaurentPolynomial& q) {
  return Mul(p, q);
}

// Text form, e.g. "x1^2 * x2^-1 + 3 * y1 - 1". Terms appear in storage order.
std::string ToString(const LaurentPolynomial& p);
// Inverse of ToString. Variables beyond the given ranks are rejected.
LaurentPolynomial ParseLaurent(std::string_view text, std::size_t x_rank,
                               std::size_t y_rank);

}  // namespace clusterlab::algebra

#endif  // CLUSTERLAB_ALGEBRA_LAURENT_H_
