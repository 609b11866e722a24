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
 * @brief Polynomials in x_1, .., x_n with exact q,t coefficients.
 */

#pragma once

#include "macsvt/bigint.hpp"
#include "macsvt/factored_rational.hpp"

#include <compare>
#include <map>
#include <span>
#include <vector>

namespace macsvt {

  /// x_1^{e_1} .. x_n^{e_n}.
  class XMonomial {
   public:
    XMonomial() = default;
    /// Throws std::invalid_argument on a negative exponent.
    explicit XMonomial(std::vector<int> exponents);
    static XMonomial one(int n) { return XMonomial(std::vector<int>(n, 0)); }

    [[nodiscard]] int rank() const noexcept { return static_cast<int>(exps_.size()); }
    [[nodiscard]] std::span<const int> exponents() const noexcept { return exps_; }
    /// Exponent of x_i, 1-based.
    [[nodiscard]] int operator()(int i) const { return exps_[i - 1]; }
    [[nodiscard]] int degree() const noexcept;
    /// Multiplies by x_i.
    void multiply_by(int i) { ++exps_.at(i - 1); }
    /// Exchanges x_i and x_{i+1}.
    [[nodiscard]] XMonomial swapped(int i) const;

    friend bool operator==(const XMonomial &, const XMonomial &) = default;
    friend auto operator<=>(const XMonomial &, const XMonomial &) = default;

   private:
    std::vector<int> exps_;
  };

  class XPolynomial {
   public:
    using TermMap = std::map<XMonomial, FactoredRational>;

    XPolynomial() = default;
    /// The zero polynomial in n variables.
    explicit XPolynomial(int n) : n_(n) {}
    static XPolynomial constant(int n, const FactoredRational &c);

    [[nodiscard]] int rank() const noexcept { return n_; }
    /// Nonzero terms, ascending by exponent vector.
    [[nodiscard]] const TermMap &terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

    /// Zero for absent monomials.  Throws RankMismatchError.
    [[nodiscard]] FactoredRational coefficient(const XMonomial &m) const;
    /// Adds c * m.  Throws RankMismatchError.
    void add_term(const XMonomial &m, const FactoredRational &c);

    XPolynomial &operator+=(const XPolynomial &other);
    XPolynomial &operator-=(const XPolynomial &other);
    [[nodiscard]] XPolynomial scaled(const FactoredRational &c) const;

    friend XPolynomial operator+(XPolynomial a, const XPolynomial &b) { return a += b; }
    friend XPolynomial operator-(XPolynomial a, const XPolynomial &b) { return a -= b; }
    friend XPolynomial operator-(const XPolynomial &a) { return a.scaled(FactoredRational::constant(-1)); }

    friend bool operator==(const XPolynomial &, const XPolynomial &) = default;

   private:
    void check_rank(int n) const;

    int n_ = 0;
    TermMap terms_;
  };

  /// Invariant under every exchange x_i <-> x_{i+1}.
  [[nodiscard]] bool is_symmetric(const XPolynomial &p);

  /// Collects many terms per monomial and reduces each coefficient once.
  class XPolynomialSum {
   public:
    explicit XPolynomialSum(int n) : n_(n) {}
    /// Throws RankMismatchError.
    void add(const XMonomial &m, const FactoredRational &c);
    [[nodiscard]] XPolynomial result() const;

   private:
    int n_;
    std::map<XMonomial, RationalSum> sums_;
  };

  /// An x-polynomial with rational numbers as coefficients (the value at a point (q, t)).
  struct RationalXPolynomial {
    int rank = 0;
    std::map<XMonomial, BigRational> terms;

    friend bool operator==(const RationalXPolynomial &, const RationalXPolynomial &) = default;
  };

} // namespace macsvt
