// Copyright 2026 The macsvt Authors
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

#include "macsvt/qt_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace macsvt {

  namespace {

    bool exp_less(const QTTerm &a, const QTTerm &b) { return a.q != b.q ? a.q < b.q : a.t < b.t; }

    // Merges two sorted term lists; sign = -1 subtracts the second.
    std::vector<QTTerm> merge(const std::vector<QTTerm> &a, const std::vector<QTTerm> &b, int sign) {
      std::vector<QTTerm> out;
      out.reserve(a.size() + b.size());
      auto i = a.begin(), j = b.begin();
      while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && exp_less(*i, *j))) {
          out.push_back(*i++);
        } else if (i == a.end() || exp_less(*j, *i)) {
          out.push_back({j->q, j->t, sign > 0 ? j->coeff : BigInt(-j->coeff)});
          ++j;
        } else {
          BigInt c = sign > 0 ? BigInt(i->coeff + j->coeff) : BigInt(i->coeff - j->coeff);
          if (c != 0) out.push_back({i->q, i->t, std::move(c)});
          ++i;
          ++j;
        }
      }
      return out;
    }

  } // namespace

  QTPolynomial QTPolynomial::constant(const BigInt &c) { return monomial(0, 0, c); }

  QTPolynomial QTPolynomial::monomial(int q_exp, int t_exp, const BigInt &c) {
    QTPolynomial p;
    if (c != 0) p.terms_.push_back({q_exp, t_exp, c});
    return p;
  }

  QTPolynomial QTPolynomial::from_terms(std::vector<QTTerm> terms) {
    std::sort(terms.begin(), terms.end(), exp_less);
    QTPolynomial p;
    for (auto &term : terms) {
      if (!p.terms_.empty() && p.terms_.back().q == term.q && p.terms_.back().t == term.t) {
        p.terms_.back().coeff += term.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (term.coeff != 0) {
        p.terms_.push_back(std::move(term));
      }
    }
    return p;
  }

  bool QTPolynomial::is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].q == 0 && terms_[0].t == 0 && terms_[0].coeff == 1;
  }

  BigInt QTPolynomial::coefficient(int q_exp, int t_exp) const {
    QTTerm key{q_exp, t_exp, 0};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, exp_less);
    if (it != terms_.end() && it->q == q_exp && it->t == t_exp) return it->coeff;
    return 0;
  }

  int QTPolynomial::min_q() const noexcept { return terms_.empty() ? 0 : terms_.front().q; }
  int QTPolynomial::max_q() const noexcept { return terms_.empty() ? 0 : terms_.back().q; }

  int QTPolynomial::min_t() const noexcept {
    if (terms_.empty()) return 0;
    return std::min_element(terms_.begin(), terms_.end(), [](auto &a, auto &b) { return a.t < b.t; })->t;
  }

  int QTPolynomial::max_t() const noexcept {
    if (terms_.empty()) return 0;
    return std::max_element(terms_.begin(), terms_.end(), [](auto &a, auto &b) { return a.t < b.t; })->t;
  }

  QTPolynomial QTPolynomial::shifted(int dq, int dt) const {
    QTPolynomial p = *this;
    for (auto &term : p.terms_) {
      term.q += dq;
      term.t += dt;
    }
    return p;
  }

  QTPolynomial QTPolynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    QTPolynomial result = constant(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  QTPolynomial &QTPolynomial::operator+=(const QTPolynomial &other) {
    terms_ = merge(terms_, other.terms_, +1);
    return *this;
  }

  QTPolynomial &QTPolynomial::operator-=(const QTPolynomial &other) {
    terms_ = merge(terms_, other.terms_, -1);
    return *this;
  }

  QTPolynomial &QTPolynomial::operator*=(const QTPolynomial &other) { return *this = *this * other; }

  QTPolynomial operator*(const QTPolynomial &a, const QTPolynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1 && b.terms_[0].coeff == 1) return a.shifted(b.terms_[0].q, b.terms_[0].t);
    if (a.terms_.size() == 1 && a.terms_[0].coeff == 1) return b.shifted(a.terms_[0].q, a.terms_[0].t);
    std::vector<QTTerm> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &x : a.terms_)
      for (const auto &y : b.terms_) products.push_back({x.q + y.q, x.t + y.t, x.coeff * y.coeff});
    return QTPolynomial::from_terms(std::move(products));
  }

  QTPolynomial operator-(QTPolynomial a) {
    for (auto &term : a.terms_) term.coeff = -term.coeff;
    return a;
  }

} // namespace macsvt
