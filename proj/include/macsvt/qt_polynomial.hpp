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

/**
 * @file
 * @brief Sparse Laurent polynomials in q and t with arbitrary-precision integer coefficients.
 */

#pragma once

#include "macsvt/bigint.hpp"

#include <span>
#include <vector>

namespace macsvt {

  struct QTTerm {
    int q = 0;
    int t = 0;
    BigInt coeff;

    friend bool operator==(const QTTerm &, const QTTerm &) = default;
  };

  /**
   * @brief Sum of coeff * q^q * t^t.
   *
   * Terms are kept sorted lexicographically by (q, t) with no zero coefficients, so equal
   * polynomials have identical term lists.
   */
  class QTPolynomial {
   public:
    QTPolynomial() = default;

    static QTPolynomial constant(const BigInt &c);
    static QTPolynomial monomial(int q_exp, int t_exp, const BigInt &c = 1);
    /// Sorts, merges equal exponents, drops zeros.
    static QTPolynomial from_terms(std::vector<QTTerm> terms);

    [[nodiscard]] std::span<const QTTerm> terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_one() const noexcept;
    [[nodiscard]] BigInt coefficient(int q_exp, int t_exp) const;

    /// Smallest / largest exponents; all zero for the zero polynomial.
    [[nodiscard]] int min_q() const noexcept;
    [[nodiscard]] int max_q() const noexcept;
    [[nodiscard]] int min_t() const noexcept;
    [[nodiscard]] int max_t() const noexcept;

    /// Multiplies by q^dq t^dt.
    [[nodiscard]] QTPolynomial shifted(int dq, int dt) const;
    [[nodiscard]] QTPolynomial pow(int e) const;

    QTPolynomial &operator+=(const QTPolynomial &other);
    QTPolynomial &operator-=(const QTPolynomial &other);
    QTPolynomial &operator*=(const QTPolynomial &other);

    friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial &b) { return a += b; }
    friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial &b) { return a -= b; }
    friend QTPolynomial operator*(const QTPolynomial &a, const QTPolynomial &b);
    friend QTPolynomial operator-(QTPolynomial a);

    friend bool operator==(const QTPolynomial &, const QTPolynomial &) = default;

   private:
    std::vector<QTTerm> terms_;
  };

  inline const QTPolynomial q_var = QTPolynomial::monomial(1, 0);
  inline const QTPolynomial t_var = QTPolynomial::monomial(0, 1);

} // namespace macsvt
