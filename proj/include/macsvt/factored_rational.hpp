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
 * @brief Exact rational functions in q, t whose denominators are products of binomials 1 - q^a t^b.
 *
 * Every denominator is factored into the irreducible pieces Psi_d(q^a t^b), with gcd(a, b) = 1,
 * Psi_1(x) = 1 - x and Psi_d = Phi_d (the d-th cyclotomic polynomial) for d >= 2, so that
 * 1 - x^k is the product of Psi_d(x) over the divisors d of k.  Cancellation is exhausted by
 * trial division against those pieces, which makes the stored form unique: two values are equal
 * exactly when their numerators and factor multisets coincide, independent of how they were built.
 *
 * The binomial view (numerator over a multiset of 1 - q^a t^b) is derived from that form.
 */

#pragma once

#include "macsvt/bigint.hpp"
#include "macsvt/qt_polynomial.hpp"

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace macsvt {

  /// (1 - q^a t^b)^multiplicity with a, b >= 0 and (a, b) != (0, 0).
  struct BinomialFactor {
    int a            = 1;
    int b            = 0;
    int multiplicity = 1;

    friend bool operator==(const BinomialFactor &, const BinomialFactor &) = default;
    friend auto operator<=>(const BinomialFactor &, const BinomialFactor &) = default;
  };

  /// Psi_d(q^a t^b) with gcd(a, b) = 1 and a > 0, or (a, b) = (0, 1).
  struct IrreducibleFactor {
    int a = 1;
    int b = 0;
    int d = 1;

    friend bool operator==(const IrreducibleFactor &, const IrreducibleFactor &) = default;
    friend auto operator<=>(const IrreducibleFactor &, const IrreducibleFactor &) = default;
  };

  /// Coefficients of Psi_d(x), constant term first.
  [[nodiscard]] std::vector<long long> psi_coefficients(int d);

  /// Psi_d(q^a t^b) expanded.
  [[nodiscard]] QTPolynomial expand(const IrreducibleFactor &f);

  /// Exact quotient p / Psi_d(q^a t^b), or nothing if the division leaves a remainder.
  [[nodiscard]] std::optional<QTPolynomial> divide_exact(const QTPolynomial &p, const IrreducibleFactor &f);

  /// Exact quotient of Laurent polynomials, or nothing if b does not divide a.  Throws on b = 0.
  [[nodiscard]] std::optional<QTPolynomial> divide_exact(const QTPolynomial &a, const QTPolynomial &b);

  struct BinomialForm {
    QTPolynomial numerator;
    std::vector<BinomialFactor> denominator;
  };

  class FactoredRational {
   public:
    /// Zero.
    FactoredRational() = default;

    explicit FactoredRational(QTPolynomial numerator) : num_(std::move(numerator)) {}

    static FactoredRational constant(const BigInt &c) { return FactoredRational(QTPolynomial::constant(c)); }

    /// numerator / prod (1 - q^a t^b)^mult.  Throws std::invalid_argument on a malformed factor.
    static FactoredRational from_binomials(QTPolynomial numerator, std::span<const BinomialFactor> denominator);

    /**
     * @brief 1 / (1 - q^a t^b) where either a, b >= 0 or a, b <= 0 (not both zero).
     *
     * Negative exponents are rewritten with 1/(1 - x^{-1}) = -x/(1 - x).
     */
    static FactoredRational inverse_binomial(int a, int b);

    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const noexcept { return den_.empty(); }

    /// Numerator of the binomial view.
    [[nodiscard]] QTPolynomial numerator() const { return binomial_form().numerator; }
    /// Binomial factors of the binomial view, sorted by (a, b).
    [[nodiscard]] std::vector<BinomialFactor> denominator() const { return binomial_form().denominator; }
    [[nodiscard]] BinomialForm binomial_form() const;

    /// Numerator of the irreducible form (coprime to every irreducible factor below).
    [[nodiscard]] const QTPolynomial &reduced_numerator() const noexcept { return num_; }
    [[nodiscard]] std::span<const std::pair<IrreducibleFactor, int>> irreducible_denominator() const noexcept { return den_; }

    FactoredRational &operator+=(const FactoredRational &other) { return *this = *this + other; }
    FactoredRational &operator-=(const FactoredRational &other) { return *this = *this - other; }
    FactoredRational &operator*=(const FactoredRational &other) { return *this = *this * other; }

    friend FactoredRational operator+(const FactoredRational &a, const FactoredRational &b);
    friend FactoredRational operator-(const FactoredRational &a, const FactoredRational &b) { return a + (-b); }
    friend FactoredRational operator*(const FactoredRational &a, const FactoredRational &b);
    friend FactoredRational operator-(FactoredRational a) {
      a.num_ = -a.num_;
      return a;
    }

    /// Structural equality of the unique reduced forms.
    friend bool operator==(const FactoredRational &, const FactoredRational &) = default;

   private:
    friend class RationalSum;
    friend FactoredRational divide(const FactoredRational &a, const FactoredRational &b);
    void canonicalize();

    QTPolynomial num_;
    std::vector<std::pair<IrreducibleFactor, int>> den_; // sorted, multiplicities > 0
  };

  /// Equality by cross-multiplication: a.num * (b.den / g) == b.num * (a.den / g), g the common part.
  [[nodiscard]] bool rat_eq(const FactoredRational &a, const FactoredRational &b);

  /// a / b.  Throws ZeroDenominatorError for b = 0 and std::domain_error if the quotient's
  /// denominator is not a product of binomials.
  [[nodiscard]] FactoredRational divide(const FactoredRational &a, const FactoredRational &b);

  /**
   * @brief Accumulates many terms over one growing common denominator and reduces once.
   *
   * result() equals the left fold of operator+ over the added terms.
   */
  class RationalSum {
   public:
    void add(const FactoredRational &r);
    [[nodiscard]] FactoredRational result() const;

   private:
    QTPolynomial num_;
    std::vector<std::pair<IrreducibleFactor, int>> den_;
  };

  /// Specialization of one or both variables.
  struct Substitution {
    enum class Limit { keep, zero, infinity };

    Limit q         = Limit::keep;
    Limit t         = Limit::keep;
    /// Applied before the limits: t := q.
    bool t_equals_q = false;
  };

  /// Exact specialized value.  Throws ZeroDenominatorError if the value has a pole there.
  [[nodiscard]] FactoredRational substitute(const FactoredRational &r, const Substitution &s);

  /// Value at a rational point.  Throws ZeroDenominatorError if a denominator factor vanishes.
  [[nodiscard]] BigRational evaluate(const FactoredRational &r, const BigRational &q, const BigRational &t);

  /// Value of a Laurent polynomial at a rational point (nonzero base for negative exponents).
  [[nodiscard]] BigRational evaluate(const QTPolynomial &p, const BigRational &q, const BigRational &t);

} // namespace macsvt
