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

#include "macsvt/format.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace macsvt {

  namespace {

    std::string text_power(const char *var, int e) {
      if (e == 0) return "";
      return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
    }

    std::string latex_power(const char *var, int e) {
      if (e == 0) return "";
      if (e == 1) return var;
      const std::string digits = std::to_string(e);
      return std::string(var) + "^" + (digits.size() == 1 ? digits : "{" + digits + "}");
    }

    /// Joins signed terms: each piece is (negative, magnitude text).
    std::string join_signed(const std::vector<std::pair<bool, std::string>> &pieces) {
      if (pieces.empty()) return "0";
      std::string out;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto &[negative, body] = pieces[i];
        if (i == 0) {
          out += negative ? "-" + body : body;
        } else {
          out += (negative ? " - " : " + ") + body;
        }
      }
      return out;
    }

    std::string monomial_with_coefficient(const BigInt &magnitude, const std::string &mono, const char *times) {
      if (mono.empty()) return magnitude.str();
      if (magnitude == 1) return mono;
      return magnitude.str() + times + mono;
    }

    std::string text_qt_monomial(int a, int b) {
      std::string q = text_power("q", a), t = text_power("t", b);
      if (q.empty()) return t;
      if (t.empty()) return q;
      return q + "*" + t;
    }

    std::string text_binomial(const BinomialFactor &f) {
      std::string s = "(1 - " + text_qt_monomial(f.a, f.b) + ")";
      return f.multiplicity == 1 ? s : s + "^" + std::to_string(f.multiplicity);
    }

    std::string latex_binomial(const BinomialFactor &f) {
      std::string s = "(1-" + latex_qt_monomial(f.a, f.b) + ")";
      if (f.multiplicity == 1) return s;
      const std::string digits = std::to_string(f.multiplicity);
      return s + "^" + (digits.size() == 1 ? digits : "{" + digits + "}");
    }

    bool single_term(const FactoredRational &r) { return r.is_polynomial() && r.reduced_numerator().size() == 1; }

    /// Coefficient text for use in front of an x-monomial; returns (negative, magnitude text).
    std::pair<bool, std::string> signed_coefficient(const FactoredRational &c, bool for_latex) {
      if (single_term(c)) {
        const QTTerm &term = c.reduced_numerator().terms()[0];
        const bool negative = term.coeff < 0;
        BigInt magnitude    = negative ? BigInt(-term.coeff) : term.coeff;
        const std::string mono = for_latex ? latex_qt_monomial(term.q, term.t) : text_qt_monomial(term.q, term.t);
        return {negative, monomial_with_coefficient(magnitude, mono, for_latex ? "" : "*")};
      }
      if (for_latex) {
        std::string s = to_latex(c);
        return {false, c.is_polynomial() ? "(" + s + ")" : s};
      }
      std::string s = to_text(c);
      return {false, c.is_polynomial() ? "(" + s + ")" : s};
    }

  } // namespace

  std::string to_text(const QTPolynomial &p) {
    std::vector<std::pair<bool, std::string>> pieces;
    for (const auto &term : p.terms()) {
      const bool negative = term.coeff < 0;
      pieces.emplace_back(negative, monomial_with_coefficient(negative ? BigInt(-term.coeff) : term.coeff, text_qt_monomial(term.q, term.t), "*"));
    }
    return join_signed(pieces);
  }

  std::string to_text(const FactoredRational &r) {
    const BinomialForm form = r.binomial_form();
    if (form.denominator.empty()) return to_text(form.numerator);
    std::string num = to_text(form.numerator);
    if (form.numerator.size() > 1) num = "(" + num + ")";
    std::string den;
    for (std::size_t i = 0; i < form.denominator.size(); ++i) den += (i ? "*" : "") + text_binomial(form.denominator[i]);
    if (form.denominator.size() > 1 || form.denominator[0].multiplicity > 1) den = "(" + den + ")";
    return num + "/" + den;
  }

  std::string to_text(const XMonomial &m) {
    std::string out;
    for (int i = 1; i <= m.rank(); ++i) {
      if (m(i) == 0) continue;
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(i);
      if (m(i) > 1) out += "^" + std::to_string(m(i));
    }
    return out.empty() ? "1" : out;
  }

  std::string to_text(const XPolynomial &p) {
    std::vector<std::pair<bool, std::string>> pieces;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      const auto &[m, c] = *it;
      if (m.degree() == 0) {
        if (single_term(c)) {
          pieces.push_back(signed_coefficient(c, false));
        } else {
          pieces.emplace_back(false, to_text(c));
        }
        continue;
      }
      auto [negative, coeff] = signed_coefficient(c, false);
      pieces.emplace_back(negative, coeff == "1" ? to_text(m) : coeff + "*" + to_text(m));
    }
    return join_signed(pieces);
  }

  std::string to_text(const BigRational &r) {
    const BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
  }

  std::string to_text(const RationalXPolynomial &p) {
    std::vector<std::pair<bool, std::string>> pieces;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
      const auto &[m, c]  = *it;
      const bool negative = c < 0;
      const std::string magnitude = to_text(negative ? BigRational(-c) : c);
      if (m.degree() == 0) {
        pieces.emplace_back(negative, magnitude);
      } else {
        pieces.emplace_back(negative, magnitude == "1" ? to_text(m) : magnitude + "*" + to_text(m));
      }
    }
    return join_signed(pieces);
  }

  std::string latex_qt_monomial(int a, int b) { return latex_power("q", a) + latex_power("t", b); }

  std::string latex_x_word(const std::vector<int> &word) {
    std::string out;
    for (int i : word) out += i < 10 ? "x_" + std::to_string(i) : "x_{" + std::to_string(i) + "}";
    return out;
  }

  std::string latex_weight(const TermRecord &term, Variant variant) {
    const int sign    = variant == Variant::pos ? 1 : -1;
    std::string out   = latex_qt_monomial(sign * term.maj, sign * term.cov);
    auto factors      = term.factors;
    std::sort(factors.begin(), factors.end());
    const std::string top = variant == Variant::pos ? "\\frac{(1-t)}" : "\\frac{(1-t^{-1})}";
    for (const auto &[sh, ht] : factors) out += top + "{(1-" + latex_qt_monomial(sign * sh, sign * ht) + ")}";
    return out.empty() ? "1" : out;
  }

  std::string to_latex(const QTPolynomial &p) {
    std::vector<std::pair<bool, std::string>> pieces;
    for (const auto &term : p.terms()) {
      const bool negative = term.coeff < 0;
      pieces.emplace_back(negative, monomial_with_coefficient(negative ? BigInt(-term.coeff) : term.coeff, latex_qt_monomial(term.q, term.t), ""));
    }
    return join_signed(pieces);
  }

  std::string to_latex(const FactoredRational &r) {
    const BinomialForm form = r.binomial_form();
    if (form.denominator.empty()) return to_latex(form.numerator);
    std::string den;
    for (const auto &f : form.denominator) den += latex_binomial(f);
    return "\\frac{" + to_latex(form.numerator) + "}{" + den + "}";
  }

  std::string to_latex(const XPolynomial &p) {
    std::vector<std::pair<bool, std::string>> pieces;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      const auto &[m, c] = *it;
      std::string mono;
      for (int i = 1; i <= m.rank(); ++i) {
        if (m(i) == 0) continue;
        mono += i < 10 ? "x_" + std::to_string(i) : "x_{" + std::to_string(i) + "}";
        if (m(i) > 1) mono += m(i) < 10 ? "^" + std::to_string(m(i)) : "^{" + std::to_string(m(i)) + "}";
      }
      if (mono.empty()) {
        pieces.push_back(single_term(c) ? signed_coefficient(c, true) : std::pair<bool, std::string>{false, to_latex(c)});
        continue;
      }
      auto [negative, coeff] = signed_coefficient(c, true);
      pieces.emplace_back(negative, coeff == "1" ? mono : coeff + mono);
    }
    return join_signed(pieces);
  }

  std::string to_text(const SetValuedTableau &t) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (std::size_t i = 0; i < t.diagram().box_count(); ++i) {
      const auto entries = t.entries_at(i);
      if (entries.empty()) continue;
      const Box b = t.diagram().boxes()[i];
      out << (first ? "" : " ") << "(" << b.r << "," << b.c << "):{";
      for (std::size_t k = 0; k < entries.size(); ++k) out << (k ? "," : "") << entries[k];
      out << "}";
      first = false;
    }
    out << "}";
    return out.str();
  }

} // namespace macsvt
