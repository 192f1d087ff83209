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

#include "clusterlab/algebra/laurent.h"

#include <algorithm>
#include <cstring>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace clusterlab::algebra {

struct LaurentAccess {
  static std::vector<Exp>& rows(LaurentPolynomial& p) { return p.rows_; }
  static std::vector<Coeff>& coeffs(LaurentPolynomial& p) { return p.coeffs_; }
};

namespace {

constexpr int kExpMax = std::numeric_limits<Exp>::max();

std::size_t StrideFor(std::size_t nx, std::size_t ny) {
  return std::max(kRowLanes, PaddedWidth(nx + ny));
}

std::uint64_t HashRow(const Exp* row, std::size_t stride) {
  std::uint64_t h = 0x243f6a8885a308d3ull;
  const std::size_t words = stride * sizeof(Exp) / sizeof(std::uint64_t);
  for (std::size_t i = 0; i < words; ++i) {
    std::uint64_t w;
    std::memcpy(&w, reinterpret_cast<const char*>(row) + i * 8, 8);
    h = (h ^ w) * 0x9e3779b97f4a7c15ull;
    h ^= h >> 29;
  }
  h ^= h >> 32;
  return h;
}

int MaxAbs(const LaurentPolynomial& p) {
  const ExponentKernels& k = ActiveKernels();
  int m = 0;
  for (std::size_t t = 0; t < p.num_terms(); ++t) {
    m = std::max(m, k.max_abs(p.row(t), p.stride()));
  }
  return m;
}

void CheckSameRing(const LaurentPolynomial& p, const LaurentPolynomial& q,
                   const char* op) {
  if (p.x_rank() != q.x_rank() || p.y_rank() != q.y_rank()) {
    throw RankMismatch(
        std::string(op) + ": rank mismatch (" + std::to_string(p.x_rank()) +
        "," + std::to_string(p.y_rank()) + ") vs (" +
        std::to_string(q.x_rank()) + "," + std::to_string(q.y_rank()) + ")");
  }
}

void CheckExponentRange(int a, int b, const char* op) {
  if (a + b > kExpMax) {
    throw std::overflow_error(std::string(op) + ": exponent overflow");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// TermAccumulator

TermAccumulator::TermAccumulator(std::size_t x_rank, std::size_t y_rank,
                                 std::size_t expected_terms)
    : nx_(x_rank),
      ny_(y_rank),
      stride_(StrideFor(x_rank, y_rank)),
      scratch_(stride_, 0) {
  std::size_t cap = 16;
  while (cap < 2 * expected_terms && cap < (std::size_t{1} << 24)) cap <<= 1;
  table_.assign(cap, 0);
}

std::size_t TermAccumulator::Probe(const Exp* row, std::uint64_t h) const {
  const ExponentKernels& k = ActiveKernels();
  const std::size_t mask = table_.size() - 1;
  std::size_t i = h & mask;
  while (true) {
    const std::uint32_t e = table_[i];
    if (e == 0) return i;
    const std::size_t idx = e - 1;
    if (hashes_[idx] == h &&
        k.compare(rows_.data() + idx * stride_, row, stride_) == 0) {
      return i;
    }
    i = (i + 1) & mask;
  }
}

void TermAccumulator::Grow() {
  table_.assign(table_.size() * 2, 0);
  const std::size_t mask = table_.size() - 1;
  for (std::size_t idx = 0; idx < hashes_.size(); ++idx) {
    std::size_t i = hashes_[idx] & mask;
    while (table_[i] != 0) i = (i + 1) & mask;
    table_[i] = static_cast<std::uint32_t>(idx + 1);
  }
}

void TermAccumulator::Add(const Exp* row, const Coeff& c) {
  if (c.is_zero()) return;
  const std::uint64_t h = HashRow(row, stride_);
  const std::size_t slot = Probe(row, h);
  if (table_[slot] != 0) {
    coeffs_[table_[slot] - 1] += c;
    return;
  }
  rows_.insert(rows_.end(), row, row + stride_);
  coeffs_.push_back(c);
  hashes_.push_back(h);
  table_[slot] = static_cast<std::uint32_t>(coeffs_.size());
  if (2 * coeffs_.size() > table_.size()) Grow();
}

void TermAccumulator::Commit(const Coeff& c) { Add(scratch_.data(), c); }

LaurentPolynomial TermAccumulator::Finish() && {
  const ExponentKernels& k = ActiveKernels();
  std::vector<std::uint32_t> order;
  order.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) order.push_back(static_cast<std::uint32_t>(i));
  }
  const Exp* base = rows_.data();
  const std::size_t s = stride_;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return k.compare(base + a * s, base + b * s, s) > 0;
  });
  LaurentPolynomial out(nx_, ny_);
  auto& rows = LaurentAccess::rows(out);
  auto& coeffs = LaurentAccess::coeffs(out);
  rows.reserve(order.size() * s);
  coeffs.reserve(order.size());
  for (std::uint32_t i : order) {
    rows.insert(rows.end(), base + i * s, base + (i + 1) * s);
    coeffs.push_back(std::move(coeffs_[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(std::size_t x_rank, std::size_t y_rank)
    : nx_(x_rank), ny_(y_rank), stride_(StrideFor(x_rank, y_rank)) {}

LaurentPolynomial LaurentPolynomial::Constant(std::size_t rank,
                                              const Coeff& c) {
  LaurentPolynomial p(rank, rank);
  if (!c.is_zero()) {
    p.rows_.assign(p.stride_, 0);
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::Monomial(std::size_t x_rank,
                                              std::size_t y_rank,
                                              std::span<const int> x,
                                              std::span<const int> y,
                                              const Coeff& c) {
  if (x.size() != x_rank || y.size() != y_rank) {
    throw RankMismatch("Monomial: exponent vector length mismatch");
  }
  LaurentPolynomial p(x_rank, y_rank);
  if (c.is_zero()) return p;
  p.rows_.assign(p.stride_, 0);
  for (std::size_t i = 0; i < x_rank; ++i) {
    if (std::abs(x[i]) > kExpMax) throw std::overflow_error("Monomial");
    p.rows_[i] = static_cast<Exp>(x[i]);
  }
  for (std::size_t i = 0; i < y_rank; ++i) {
    if (std::abs(y[i]) > kExpMax) throw std::overflow_error("Monomial");
    p.rows_[x_rank + i] = static_cast<Exp>(y[i]);
  }
  p.coeffs_.push_back(c);
  return p;
}

LaurentPolynomial LaurentPolynomial::X(std::size_t rank, std::size_t i, int e) {
  if (i < 1 || i > rank) throw std::out_of_range("X: index out of range");
  std::vector<int> x(rank, 0), y(rank, 0);
  x[i - 1] = e;
  return Monomial(rank, rank, x, y);
}

LaurentPolynomial LaurentPolynomial::Y(std::size_t rank, std::size_t i, int e) {
  if (i < 1 || i > rank) throw std::out_of_range("Y: index out of range");
  std::vector<int> x(rank, 0), y(rank, 0);
  y[i - 1] = e;
  return Monomial(rank, rank, x, y);
}

bool LaurentPolynomial::has_positive_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Coeff& c) { return c.sign() > 0; });
}

Coeff LaurentPolynomial::constant_term() const {
  const ExponentKernels& k = ActiveKernels();
  for (std::size_t t = 0; t < num_terms(); ++t) {
    if (k.max_abs(row(t), stride_) == 0) return coeffs_[t];
  }
  return 0;
}

LaurentPolynomial LaurentPolynomial::Shifted(std::span<const int> dx,
                                             std::span<const int> dy) const {
  if (dx.size() != nx_ || dy.size() != ny_) {
    throw RankMismatch("Shifted: exponent vector length mismatch");
  }
  std::vector<Exp> shift(stride_, 0);
  int shift_max = 0;
  for (std::size_t i = 0; i < nx_; ++i) {
    shift[i] = static_cast<Exp>(dx[i]);
    shift_max = std::max(shift_max, std::abs(dx[i]));
  }
  for (std::size_t i = 0; i < ny_; ++i) {
    shift[nx_ + i] = static_cast<Exp>(dy[i]);
    shift_max = std::max(shift_max, std::abs(dy[i]));
  }
  CheckExponentRange(MaxAbs(*this), shift_max, "Shifted");
  // Translation preserves the lexicographic order.
  LaurentPolynomial out = *this;
  const ExponentKernels& k = ActiveKernels();
  for (std::size_t t = 0; t < num_terms(); ++t) {
    Exp* r = out.rows_.data() + t * stride_;
    k.add(r, shift.data(), r, stride_);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (Coeff& c : out.coeffs_) c = -c;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& q) {
  return *this = Add(*this, q);
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& q) {
  return *this = Add(*this, q, true);
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& q) {
  return *this = Mul(*this, q);
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.rows_ == b.rows_ &&
         a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// Ring operations

LaurentPolynomial Add(const LaurentPolynomial& p, const LaurentPolynomial& q,
                      bool negate_q) {
  CheckSameRing(p, q, "Add");
  const ExponentKernels& k = ActiveKernels();
  const std::size_t s = p.stride();
  LaurentPolynomial out(p.x_rank(), p.y_rank());
  auto& rows = LaurentAccess::rows(out);
  auto& coeffs = LaurentAccess::coeffs(out);
  rows.reserve((p.num_terms() + q.num_terms()) * s);
  coeffs.reserve(p.num_terms() + q.num_terms());
  auto emit = [&](const Exp* r, Coeff c) {
    rows.insert(rows.end(), r, r + s);
    coeffs.push_back(std::move(c));
  };
  std::size_t i = 0, j = 0;
  while (i < p.num_terms() || j < q.num_terms()) {
    int cmp;
    if (i == p.num_terms()) {
      cmp = -1;
    } else if (j == q.num_terms()) {
      cmp = 1;
    } else {
      cmp = k.compare(p.row(i), q.row(j), s);
    }
    if (cmp > 0) {
      emit(p.row(i), p.coeff(i));
      ++i;
    } else if (cmp < 0) {
      emit(q.row(j), negate_q ? Coeff(-q.coeff(j)) : q.coeff(j));
      ++j;
    } else {
      Coeff c = negate_q ? Coeff(p.coeff(i) - q.coeff(j))
                         : Coeff(p.coeff(i) + q.coeff(j));
      if (!c.is_zero()) emit(p.row(i), std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPolynomial Mul(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  CheckSameRing(p, q, "Mul");
  if (p.is_zero() || q.is_zero())
    return LaurentPolynomial(p.x_rank(), p.y_rank());
  CheckExponentRange(MaxAbs(p), MaxAbs(q), "Mul");
  const ExponentKernels& k = ActiveKernels();
  const std::size_t s = p.stride();
  TermAccumulator acc(p.x_rank(), p.y_rank(),
                      std::min<std::size_t>(p.num_terms() * q.num_terms(),
                                            std::size_t{1} << 20));
  Coeff c;
  for (std::size_t i = 0; i < p.num_terms(); ++i) {
    for (std::size_t j = 0; j < q.num_terms(); ++j) {
      k.add(p.row(i), q.row(j), acc.scratch(), s);
      c = p.coeff(i);
      c *= q.coeff(j);
      acc.Commit(c);
    }
  }
  return std::move(acc).Finish();
}

namespace {

struct RowGreater {
  std::size_t stride;
  bool operator()(const std::vector<Exp>& a, const std::vector<Exp>& b) const {
    return ActiveKernels().compare(a.data(), b.data(), stride) > 0;
  }
};

}  // namespace

LaurentPolynomial DivExact(const LaurentPolynomial& p,
                           const LaurentPolynomial& q) {
  CheckSameRing(p, q, "DivExact");
  if (q.is_zero()) throw std::domain_error("DivExact: division by zero");
  if (p.is_zero()) return p;
  CheckExponentRange(MaxAbs(p), MaxAbs(q), "DivExact");

  const ExponentKernels& k = ActiveKernels();
  const std::size_t s = p.stride();
  const std::size_t w = p.x_rank() + p.y_rank();

  // Every quotient exponent lies in [min p - min q, max p - max q] lanewise.
  std::vector<int> lo(w), hi(w);
  auto lane_bounds = [&](const LaurentPolynomial& f, std::vector<int>& mn,
                         std::vector<int>& mx) {
    mn.assign(w, kExpMax);
    mx.assign(w, -kExpMax - 1);
    for (std::size_t t = 0; t < f.num_terms(); ++t) {
      for (std::size_t i = 0; i < w; ++i) {
        mn[i] = std::min<int>(mn[i], f.row(t)[i]);
        mx[i] = std::max<int>(mx[i], f.row(t)[i]);
      }
    }
  };
  std::vector<int> pmin, pmax, qmin, qmax;
  lane_bounds(p, pmin, pmax);
  lane_bounds(q, qmin, qmax);
  for (std::size_t i = 0; i < w; ++i) {
    lo[i] = pmin[i] - qmin[i];
    hi[i] = pmax[i] - qmax[i];
    if (lo[i] > hi[i]) throw NotDivisible("DivExact: Newton box is empty");
  }

  std::map<std::vector<Exp>, Coeff, RowGreater> rem(RowGreater{s});
  for (std::size_t t = 0; t < p.num_terms(); ++t) {
    rem.emplace(std::vector<Exp>(p.row(t), p.row(t) + s), p.coeff(t));
  }

  LaurentPolynomial out(p.x_rank(), p.y_rank());
  auto& rows = LaurentAccess::rows(out);
  auto& coeffs = LaurentAccess::coeffs(out);
  const Exp* lead = q.row(0);
  const Coeff& lead_c = q.coeff(0);
  std::vector<Exp> t_row(s), key(s);
  Coeff quot, r;
  while (!rem.empty()) {
    auto top = rem.begin();
    k.sub(top->first.data(), lead, t_row.data(), s);
    for (std::size_t i = 0; i < w; ++i) {
      if (t_row[i] < lo[i] || t_row[i] > hi[i]) {
        throw NotDivisible("DivExact: quotient term leaves the Newton box");
      }
    }
    boost::multiprecision::divide_qr(top->second, lead_c, quot, r);
    if (!r.is_zero()) {
      throw NotDivisible("DivExact: coefficient not divisible");
    }
    rows.insert(rows.end(), t_row.begin(), t_row.end());
    coeffs.push_back(quot);
    for (std::size_t j = 0; j < q.num_terms(); ++j) {
      k.add(t_row.data(), q.row(j), key.data(), s);
      Coeff delta = quot * q.coeff(j);
      auto it = rem.find(key);
      if (it == rem.end()) {
        rem.emplace(key, -delta);
      } else {
        it->second -= delta;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
  }
  return out;
}

LaurentPolynomial Pow(const LaurentPolynomial& p, unsigned k) {
  const std::vector<int> zx(p.x_rank(), 0), zy(p.y_rank(), 0);
  LaurentPolynomial result =
      LaurentPolynomial::Monomial(p.x_rank(), p.y_rank(), zx, zy);
  LaurentPolynomial base = p;
  while (k > 0) {
    if (k & 1u) result = Mul(result, base);
    k >>= 1;
    if (k > 0) base = Mul(base, base);
  }
  return result;
}

}  // namespace clusterlab::algebra
