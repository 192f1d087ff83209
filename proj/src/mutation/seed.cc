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

#include "clusterlab/mutation/seed.h"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <string>
#include <utility>

namespace clusterlab::mutation {
namespace {

LaurentPolynomial YMonomial(std::size_t n, const TropicalMonomial& t) {
  const std::vector<int> zero(n, 0);
  return LaurentPolynomial::Monomial(n, n, zero, t.exponents());
}

std::vector<std::string> ClusterKey(const Seed& s) {
  std::vector<std::string> key;
  key.reserve(s.cluster.size());
  for (const auto& p : s.cluster) key.push_back(algebra::ToString(p));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

Seed InitialSeed(const IntMatrix& B) {
  if (!B.is_skew_symmetric()) {
    throw std::invalid_argument("InitialSeed: matrix is not skew-symmetric");
  }
  const std::size_t n = B.rows();
  Seed s{B, {}, {}};
  for (std::size_t i = 1; i <= n; ++i) {
    s.cluster.push_back(LaurentPolynomial::X(n, i));
    s.coeffs.push_back(TropicalMonomial::Generator(n, i));
  }
  return s;
}

IntMatrix MutateMatrix(const IntMatrix& B, int k) {
  const int n = static_cast<int>(B.rows());
  if (k < 1 || k > n) throw std::out_of_range("MutateMatrix: bad index");
  const int kk = k - 1;
  IntMatrix out(B.rows(), B.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < static_cast<int>(B.cols()); ++j) {
      if (i == kk || j == kk) {
        out(i, j) = -B(i, j);
      } else {
        const int bik = B(i, kk), bkj = B(kk, j);
        out(i, j) = B(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  }
  return out;
}

Seed Mutate(const Seed& s, int k) {
  const std::size_t n = s.rank();
  if (k < 1 || k > static_cast<int>(n)) {
    throw std::out_of_range("Mutate: index " + std::to_string(k) +
                            " out of range");
  }
  const int kk = k - 1;
  const TropicalMonomial& ck = s.coeffs[kk];

  LaurentPolynomial plus = YMonomial(n, ck.PositivePart());
  LaurentPolynomial minus = YMonomial(n, ck.NegativePart());
  for (std::size_t i = 0; i < n; ++i) {
    const int b = s.B(i, kk);
    if (b > 0) plus = plus * algebra::Pow(s.cluster[i], b);
    if (b < 0) minus = minus * algebra::Pow(s.cluster[i], -b);
  }
  Seed out = s;
  try {
    out.cluster[kk] = algebra::DivExact(plus + minus, s.cluster[kk]);
  } catch (const algebra::NotDivisible& e) {
    throw std::logic_error(std::string("Mutate: exchange relation is not "
                                       "exactly divisible: ") +
                           e.what());
  }
  out.B = MutateMatrix(s.B, k);

  // yhat_j' = yhat_j * yhat_k^[b_kj]+ * (yhat_k (+) 1)^(-b_kj), j != k.
  const TropicalMonomial ck_or_one = ck.Plus(TropicalMonomial::One(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (static_cast<int>(j) == kk) {
      out.coeffs[j] = ck.Pow(-1);
      continue;
    }
    const int bkj = s.B(kk, j);
    out.coeffs[j] =
        s.coeffs[j] * ck.Pow(std::max(bkj, 0)) * ck_or_one.Pow(-bkj);
  }
  return out;
}

Seed MutateSeq(const Seed& s, std::span<const int> ks) {
  Seed cur = s;
  for (int k : ks) cur = Mutate(cur, k);
  return cur;
}

int MatrixRank(const IntMatrix& B) {
  using boost::multiprecision::cpp_rational;
  const std::size_t rows = B.rows(), cols = B.cols();
  std::vector<std::vector<cpp_rational>> m(rows,
                                           std::vector<cpp_rational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = B(i, j);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const cpp_rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::vector<int> FindMutationSequence(const Seed& s0,
                                      const LaurentPolynomial& target,
                                      int depth) {
  if (depth > 10) {
    throw std::invalid_argument("FindMutationSequence: depth must be <= 10");
  }
  for (const auto& x : s0.cluster) {
    if (x == target) return {};
  }
  const int n = static_cast<int>(s0.rank());
  std::set<std::vector<std::string>> seen{ClusterKey(s0)};
  std::vector<std::pair<Seed, std::vector<int>>> frontier{{s0, {}}};
  for (int level = 1; level <= depth; ++level) {
    std::vector<std::pair<Seed, std::vector<int>>> next;
    for (const auto& [seed, seq] : frontier) {
      for (int k = 1; k <= n; ++k) {
        if (!seq.empty() && seq.back() == k) continue;
        Seed child = Mutate(seed, k);
        std::vector<int> child_seq = seq;
        child_seq.push_back(k);
        if (child.cluster[k - 1] == target) return child_seq;
        if (seen.insert(ClusterKey(child)).second) {
          next.emplace_back(std::move(child), std::move(child_seq));
        }
      }
    }
    frontier = std::move(next);
  }
  throw NotFound("FindMutationSequence: target not reached within depth " +
                 std::to_string(depth));
}

}  // namespace clusterlab::mutation
