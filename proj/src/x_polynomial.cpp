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

#include "macsvt/x_polynomial.hpp"

#include "macsvt/error.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace macsvt {

  XMonomial::XMonomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_)
      if (e < 0) throw std::invalid_argument("negative exponent in x-monomial");
  }

  int XMonomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  XMonomial XMonomial::swapped(int i) const {
    if (i < 1 || i >= rank()) throw std::invalid_argument("swap index out of range");
    XMonomial m = *this;
    std::swap(m.exps_[i - 1], m.exps_[i]);
    return m;
  }

  XPolynomial XPolynomial::constant(int n, const FactoredRational &c) {
    XPolynomial p(n);
    p.add_term(XMonomial::one(n), c);
    return p;
  }

  void XPolynomial::check_rank(int n) const {
    if (n != n_) throw RankMismatchError("rank " + std::to_string(n) + " does not match polynomial rank " + std::to_string(n_));
  }

  FactoredRational XPolynomial::coefficient(const XMonomial &m) const {
    check_rank(m.rank());
    auto it = terms_.find(m);
    return it == terms_.end() ? FactoredRational{} : it->second;
  }

  void XPolynomial::add_term(const XMonomial &m, const FactoredRational &c) {
    check_rank(m.rank());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  XPolynomial &XPolynomial::operator+=(const XPolynomial &other) {
    check_rank(other.n_);
    if (&other == this) return *this = scaled(FactoredRational::constant(2));
    for (const auto &[m, c] : other.terms_) add_term(m, c);
    return *this;
  }

  XPolynomial &XPolynomial::operator-=(const XPolynomial &other) {
    check_rank(other.n_);
    if (&other == this) {
      terms_.clear();
      return *this;
    }
    for (const auto &[m, c] : other.terms_) add_term(m, -c);
    return *this;
  }

  XPolynomial XPolynomial::scaled(const FactoredRational &c) const {
    XPolynomial p(n_);
    if (c.is_zero()) return p;
    for (const auto &[m, coeff] : terms_) p.terms_.emplace(m, coeff * c);
    return p;
  }

  bool is_symmetric(const XPolynomial &p) {
    for (int i = 1; i < p.rank(); ++i) {
      for (const auto &[m, c] : p.terms()) {
        auto it = p.terms().find(m.swapped(i));
        if (it == p.terms().end() || !(it->second == c)) return false;
      }
    }
    return true;
  }

  void XPolynomialSum::add(const XMonomial &m, const FactoredRational &c) {
    if (m.rank() != n_) throw RankMismatchError("monomial rank does not match sum rank");
    sums_[m].add(c);
  }

  XPolynomial XPolynomialSum::result() const {
    XPolynomial p(n_);
    for (const auto &[m, sum] : sums_) p.add_term(m, sum.result());
    return p;
  }

} // namespace macsvt
