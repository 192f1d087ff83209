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

#include <algorithm>
#include <stdexcept>

namespace clusterlab::algebra {
namespace {

void CheckRank(std::size_t a, std::size_t b) {
  if (a != b) throw RankMismatch("tropical monomial rank mismatch");
}

LaurentPolynomial One(std::size_t nx, std::size_t ny) {
  const std::vector<int> zx(nx, 0), zy(ny, 0);
  return LaurentPolynomial::Monomial(nx, ny, zx, zy);
}

}  // namespace

TropicalMonomial TropicalMonomial::Generator(std::size_t rank, std::size_t i) {
  if (i < 1 || i > rank) throw std::out_of_range("Generator: bad index");
  std::vector<int> e(rank, 0);
  e[i - 1] = 1;
  return TropicalMonomial(std::move(e));
}

bool TropicalMonomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](int e) { return e == 0; });
}

TropicalMonomial TropicalMonomial::operator*(const TropicalMonomial& o) const {
  CheckRank(rank(), o.rank());
  std::vector<int> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exponents_[i];
  return TropicalMonomial(std::move(e));
}

TropicalMonomial TropicalMonomial::operator/(const TropicalMonomial& o) const {
  return *this * o.Pow(-1);
}

TropicalMonomial TropicalMonomial::Pow(int k) const {
  std::vector<int> e(exponents_);
  for (int& v : e) v *= k;
  return TropicalMonomial(std::move(e));
}

TropicalMonomial TropicalMonomial::Plus(const TropicalMonomial& o) const {
  CheckRank(rank(), o.rank());
  std::vector<int> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::min(e[i], o.exponents_[i]);
  return TropicalMonomial(std::move(e));
}

TropicalMonomial TropicalMonomial::PositivePart() const {
  std::vector<int> e(exponents_);
  for (int& v : e) v = std::max(v, 0);
  return TropicalMonomial(std::move(e));
}

TropicalMonomial TropicalMonomial::NegativePart() const {
  std::vector<int> e(exponents_);
  for (int& v : e) v = std::max(-v, 0);
  return TropicalMonomial(std::move(e));
}

std::string TropicalMonomial::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += " * ";
    out += "y" + std::to_string(i + 1);
    if (exponents_[i] != 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

SemifieldSpec SemifieldSpec::Principal(std::size_t n) {
  SemifieldSpec s;
  s.kind_ = Kind::kPrincipal;
  s.n_ = s.m_ = n;
  for (std::size_t i = 1; i <= n; ++i) {
    s.assignment_.push_back(TropicalMonomial::Generator(n, i));
  }
  return s;
}

SemifieldSpec SemifieldSpec::Trivial(std::size_t n) {
  SemifieldSpec s;
  s.kind_ = Kind::kTrivial;
  s.n_ = n;
  s.m_ = 0;
  s.assignment_.assign(n, TropicalMonomial::One(0));
  return s;
}

SemifieldSpec SemifieldSpec::Tropical(
    std::size_t m, std::vector<TropicalMonomial> assignment) {
  for (const auto& t : assignment) {
    if (t.rank() != m) throw RankMismatch("Tropical: assignment rank mismatch");
  }
  SemifieldSpec s;
  s.kind_ = Kind::kTropical;
  s.n_ = assignment.size();
  s.m_ = m;
  s.assignment_ = std::move(assignment);
  return s;
}

LaurentPolynomial FPolynomial(const LaurentPolynomial& p) {
  TermAccumulator acc(p.x_rank(), p.y_rank(), p.num_terms());
  for (std::size_t t = 0; t < p.num_terms(); ++t) {
    Exp* row = acc.scratch();
    std::copy(p.row(t), p.row(t) + p.stride(), row);
    std::fill(row, row + p.x_rank(), Exp{0});
    acc.Commit(p.coeff(t));
  }
  return std::move(acc).Finish();
}

TropicalMonomial TropicalEval(const LaurentPolynomial& f,
                              const SemifieldSpec& s) {
  if (f.y_rank() != s.n()) throw RankMismatch("TropicalEval: rank mismatch");
  if (f.is_zero()) throw std::domain_error("TropicalEval: zero polynomial");
  std::vector<int> acc;
  for (std::size_t t = 0; t < f.num_terms(); ++t) {
    if (f.coeff(t).sign() <= 0) {
      throw std::domain_error("TropicalEval: nonpositive coefficient");
    }
    for (Exp e : f.x_exponents(t)) {
      if (e != 0) throw std::domain_error("TropicalEval: x-dependent input");
    }
    std::vector<int> v(s.m(), 0);
    for (std::size_t i = 0; i < s.n(); ++i) {
      const int b = f.y_exponents(t)[i];
      if (b == 0) continue;
      for (std::size_t j = 0; j < s.m(); ++j) v[j] += b * s.image(i)[j];
    }
    if (t == 0) {
      acc = std::move(v);
    } else {
      for (std::size_t j = 0; j < acc.size(); ++j)
        acc[j] = std::min(acc[j], v[j]);
    }
  }
  return TropicalMonomial(std::move(acc));
}

LaurentPolynomial Specialize(const LaurentPolynomial& p,
                             const SemifieldSpec& s) {
  if (p.y_rank() != s.n()) throw RankMismatch("Specialize: rank mismatch");
  if (s.kind() == SemifieldSpec::Kind::kPrincipal) return p;

  const TropicalMonomial denom = TropicalEval(FPolynomial(p), s);
  const std::size_t ny =
      s.kind() == SemifieldSpec::Kind::kTrivial ? p.y_rank() : s.m();
  TermAccumulator acc(p.x_rank(), ny, p.num_terms());
  for (std::size_t t = 0; t < p.num_terms(); ++t) {
    Exp* row = acc.scratch();
    std::fill(row, row + acc.stride(), Exp{0});
    std::copy(p.row(t), p.row(t) + p.x_rank(), row);
    if (s.kind() == SemifieldSpec::Kind::kTropical) {
      for (std::size_t j = 0; j < s.m(); ++j) {
        int v = -denom[j];
        for (std::size_t i = 0; i < s.n(); ++i) {
          v += p.y_exponents(t)[i] * s.image(i)[j];
        }
        row[p.x_rank() + j] = static_cast<Exp>(v);
      }
    }
    acc.Commit(p.coeff(t));
  }
  return std::move(acc).Finish();
}

LaurentPolynomial Chebyshev(int k, const LaurentPolynomial& L) {
  if (k < 1) throw std::invalid_argument("Chebyshev: k must be positive");
  const LaurentPolynomial one = One(L.x_rank(), L.y_rank());
  LaurentPolynomial prev = one + one;  // T_0 = 2 gives T_2 = L^2 - 2.
  LaurentPolynomial cur = L;
  for (int i = 1; i < k; ++i) {
    LaurentPolynomial next = L * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace clusterlab::algebra
