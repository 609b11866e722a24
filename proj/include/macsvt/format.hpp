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
 * @brief Plain-text and LaTeX rendering of coefficients, monomials and polynomials.
 *
 * Text uses `*` and `^` (e.g. `(q*t^2 - q*t^3)/(1 - q*t^5)*x1*x2`); terms of an x-polynomial are
 * listed with the exponent vectors in decreasing lexicographic order.
 */

#pragma once

#include "macsvt/factored_rational.hpp"
#include "macsvt/macdonald.hpp"
#include "macsvt/qt_polynomial.hpp"
#include "macsvt/x_polynomial.hpp"

#include <string>

namespace macsvt {

  /// Laurent polynomial in q, t; terms ascending by (q, t).  "0" for zero.
  [[nodiscard]] std::string to_text(const QTPolynomial &p);
  /// numerator, or (numerator)/(binomials) when there is a denominator.
  [[nodiscard]] std::string to_text(const FactoredRational &r);
  /// x1^2*x2; "1" for the constant monomial.
  [[nodiscard]] std::string to_text(const XMonomial &m);
  [[nodiscard]] std::string to_text(const XPolynomial &p);
  [[nodiscard]] std::string to_text(const BigRational &r);
  [[nodiscard]] std::string to_text(const RationalXPolynomial &p);

  /// q^a t^b in LaTeX (braces only around multi-character exponents); empty for a = b = 0.
  [[nodiscard]] std::string latex_qt_monomial(int a, int b);
  /// x_{i_1}x_{i_2}.. for an index word.
  [[nodiscard]] std::string latex_x_word(const std::vector<int> &word);
  /**
   * @brief A term weight as a monomial followed by one fraction per entry, factors ordered by
   * (shift, height): q^2t^5\frac{(1-t)}{(1-qt^4)}..  Negative-variant records use q^{-1}, t^{-1}.
   */
  [[nodiscard]] std::string latex_weight(const TermRecord &term, Variant variant);
  [[nodiscard]] std::string to_latex(const QTPolynomial &p);
  [[nodiscard]] std::string to_latex(const FactoredRational &r);
  [[nodiscard]] std::string to_latex(const XPolynomial &p);

  /// {(1,2):{1,2} (2,2):{1}}, listing nonempty boxes only; {} for the empty tableau.
  [[nodiscard]] std::string to_text(const SetValuedTableau &t);

} // namespace macsvt
