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

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>

#include "clusterlab/algebra/laurent.h"
#include "clusterlab/algebra/laurent_json.h"

namespace clusterlab::algebra {
namespace {

void AppendFactors(const LaurentPolynomial& p, std::size_t t,
                   std::string& out) {
  bool first = true;
  auto emit = [&](char var, std::size_t i, int e) {
    if (e == 0) return;
    if (!first) out += " * ";
    first = false;
    out += var;
    out += std::to_string(i + 1);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  };
  for (std::size_t i = 0; i < p.x_rank(); ++i)
    emit('x', i, p.x_exponents(t)[i]);
  for (std::size_t i = 0; i < p.y_rank(); ++i)
    emit('y', i, p.y_exponents(t)[i]);
}

bool HasFactors(const LaurentPolynomial& p, std::size_t t) {
  for (Exp e : p.x_exponents(t)) {
    if (e != 0) return true;
  }
  for (Exp e : p.y_exponents(t)) {
    if (e != 0) return true;
  }
  return false;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t nx, std::size_t ny)
      : s_(text), nx_(nx), ny_(ny), acc_(nx, ny) {}

  LaurentPolynomial Run() && {
    SkipWs();
    int sign = 1;
    if (Peek() == '-') {
      sign = -1;
      ++pos_;
    }
    while (true) {
      Term(sign);
      SkipWs();
      if (pos_ == s_.size()) break;
      const char c = s_[pos_++];
      if (c == '+') {
        sign = 1;
      } else if (c == '-') {
        sign = -1;
      } else {
        Fail("expected '+' or '-'");
      }
    }
    return std::move(acc_).Finish();
  }

 private:
  char Peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void SkipWs() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw std::invalid_argument("ParseLaurent: " + what + " at offset " +
                                std::to_string(pos_));
  }

  std::string Digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(Peek()))) ++pos_;
    if (start == pos_) Fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void Term(int sign) {
    Coeff c = sign;
    Exp* row = acc_.scratch();
    std::fill(row, row + acc_.stride(), Exp{0});
    while (true) {
      SkipWs();
      const char ch = Peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= Coeff(Digits());
      } else if (ch == 'x' || ch == 'y') {
        ++pos_;
        const std::size_t idx = std::stoul(Digits());
        const std::size_t limit = ch == 'x' ? nx_ : ny_;
        if (idx < 1 || idx > limit) Fail("variable index out of range");
        long e = 1;
        if (Peek() == '^') {
          ++pos_;
          bool neg = false;
          if (Peek() == '-') {
            neg = true;
            ++pos_;
          }
          e = std::stol(Digits());
          if (neg) e = -e;
        }
        Exp& slot = row[(ch == 'x' ? 0 : nx_) + idx - 1];
        const long total = long{slot} + e;
        if (total > std::numeric_limits<Exp>::max() ||
            total < std::numeric_limits<Exp>::min()) {
          Fail("exponent out of range");
        }
        slot = static_cast<Exp>(total);
      } else {
        Fail("expected a factor");
      }
      SkipWs();
      if (Peek() != '*') break;
      ++pos_;
    }
    acc_.Commit(c);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t nx_, ny_;
  TermAccumulator acc_;
};

void CheckJsonExponent(int e) {
  if (e > std::numeric_limits<Exp>::max() ||
      e < std::numeric_limits<Exp>::min()) {
    throw std::out_of_range("LaurentFromJson: exponent out of range");
  }
}

}  // namespace

std::string ToString(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t t = 0; t < p.num_terms(); ++t) {
    const Coeff& c = p.coeff(t);
    if (t == 0) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Coeff mag = abs(c);
    const bool factors = HasFactors(p, t);
    if (!factors || mag != 1) {
      out += mag.str();
      if (factors) out += " * ";
    }
    AppendFactors(p, t, out);
  }
  return out;
}

LaurentPolynomial ParseLaurent(std::string_view text, std::size_t x_rank,
                               std::size_t y_rank) {
  return Parser(text, x_rank, y_rank).Run();
}

nlohmann::json ToJson(const LaurentPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t t = 0; t < p.num_terms(); ++t) {
    nlohmann::json term;
    const Coeff& c = p.coeff(t);
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max()) {
      term["coeff"] = c.convert_to<std::int64_t>();
    } else {
      term["coeff"] = c.str();
    }
    term["x"] =
        std::vector<int>(p.x_exponents(t).begin(), p.x_exponents(t).end());
    term["y"] =
        std::vector<int>(p.y_exponents(t).begin(), p.y_exponents(t).end());
    terms.push_back(std::move(term));
  }
  return {{"x_rank", p.x_rank()}, {"y_rank", p.y_rank()}, {"terms", terms}};
}

LaurentPolynomial LaurentFromJson(const nlohmann::json& j) {
  const auto& terms = j.at("terms");
  std::size_t nx = 0, ny = 0;
  if (j.contains("x_rank")) {
    nx = j.at("x_rank").get<std::size_t>();
    ny = j.at("y_rank").get<std::size_t>();
  } else if (!terms.empty()) {
    nx = terms[0].at("x").size();
    ny = terms[0].at("y").size();
  }
  TermAccumulator acc(nx, ny, terms.size());
  for (const auto& term : terms) {
    const auto x = term.at("x").get<std::vector<int>>();
    const auto y = term.at("y").get<std::vector<int>>();
    if (x.size() != nx || y.size() != ny) {
      throw RankMismatch("LaurentFromJson: term length mismatch");
    }
    const auto& cj = term.at("coeff");
    const Coeff c = cj.is_string() ? Coeff(cj.get<std::string>())
                                   : Coeff(cj.get<std::int64_t>());
    for (int e : x) CheckJsonExponent(e);
    for (int e : y) CheckJsonExponent(e);
    Exp* row = acc.scratch();
    std::fill(row, row + acc.stride(), Exp{0});
    for (std::size_t i = 0; i < nx; ++i) row[i] = static_cast<Exp>(x[i]);
    for (std::size_t i = 0; i < ny; ++i) row[nx + i] = static_cast<Exp>(y[i]);
    acc.Commit(c);
  }
  return std::move(acc).Finish();
}

}  // namespace clusterlab::algebra
