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

#include "macsvt/factored_rational.hpp"

#include "macsvt/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <numeric>
#include <stdexcept>

namespace macsvt {

  namespace {

    using DenList = std::vector<std::pair<IrreducibleFactor, int>>;

    // Phi_d via x^d - 1 = prod_{e | d} Phi_e, then Psi_1 = -Phi_1.
    std::vector<long long> compute_psi(int d, const std::vector<std::vector<long long>> &smaller) {
      std::vector<long long> p(d + 1, 0);
      p[0] = -1;
      p[d] = 1;
      for (int e = 1; e < d; ++e) {
        if (d % e) continue;
        std::vector<long long> divisor = smaller[e];
        if (e == 1) divisor = {-1, 1};
        // p has constant term +-1 and divisor is monic: long division from the top.
        const int deg_div = static_cast<int>(divisor.size()) - 1;
        std::vector<long long> quotient(p.size() - deg_div, 0);
        for (int k = static_cast<int>(p.size()) - 1; k >= deg_div; --k) {
          long long c                 = p[k];
          quotient[k - deg_div]       = c;
          for (int i = 0; i <= deg_div; ++i) p[k - deg_div + i] -= c * divisor[i];
        }
        p = std::move(quotient);
      }
      if (d == 1) p = {1, -1};
      return p;
    }

    const std::vector<std::vector<long long>> &psi_table() {
      static const std::vector<std::vector<long long>> table = [] {
        constexpr int limit = 128;
        std::vector<std::vector<long long>> t(limit + 1);
        for (int d = 1; d <= limit; ++d) t[d] = compute_psi(d, t);
        return t;
      }();
      return table;
    }

    std::vector<IrreducibleFactor> factor_binomial(int a, int b) {
      if (a < 0 || b < 0 || (a == 0 && b == 0)) throw std::invalid_argument("binomial factor 1 - q^a t^b needs a, b >= 0, not both 0");
      const int g = std::gcd(a, b);
      std::vector<IrreducibleFactor> out;
      for (int d = 1; d <= g; ++d)
        if (g % d == 0) out.push_back({a / g, b / g, d});
      return out;
    }

    void add_factor(DenList &den, const IrreducibleFactor &f, int mult) {
      auto it = std::lower_bound(den.begin(), den.end(), f, [](const auto &entry, const IrreducibleFactor &key) { return entry.first < key; });
      if (it != den.end() && it->first == f) {
        it->second += mult;
      } else {
        den.insert(it, {f, mult});
      }
    }

    int multiplicity(const DenList &den, const IrreducibleFactor &f) {
      auto it = std::lower_bound(den.begin(), den.end(), f, [](const auto &entry, const IrreducibleFactor &key) { return entry.first < key; });
      return (it != den.end() && it->first == f) ? it->second : 0;
    }

    QTPolynomial expand_power(const IrreducibleFactor &f, int e) { return e == 0 ? QTPolynomial::constant(1) : expand(f).pow(e); }

    QTPolynomial expand_all(const DenList &den) {
      QTPolynomial p = QTPolynomial::constant(1);
      for (const auto &[f, m] : den) p *= expand_power(f, m);
      return p;
    }

  } // namespace

  std::vector<long long> psi_coefficients(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
    const auto &table = psi_table();
    if (d < static_cast<int>(table.size())) return table[d];
    std::vector<std::vector<long long>> all(d + 1);
    for (int e = 1; e <= d; ++e) all[e] = e < static_cast<int>(table.size()) ? table[e] : compute_psi(e, all);
    return all[d];
  }

  QTPolynomial expand(const IrreducibleFactor &f) {
    auto coeffs = psi_coefficients(f.d);
    std::vector<QTTerm> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0) terms.push_back({static_cast<int>(k) * f.a, static_cast<int>(k) * f.b, coeffs[k]});
    return QTPolynomial::from_terms(std::move(terms));
  }

  std::optional<QTPolynomial> divide_exact(const QTPolynomial &p, const IrreducibleFactor &f) {
    if (p.is_zero()) return QTPolynomial{};
    const auto psi     = psi_coefficients(f.d);
    const int deg      = static_cast<int>(psi.size()) - 1;
    const bool along_q = f.a > 0;
    const int step     = along_q ? f.a : 1;

    // Terms on one line {(i, j) + k(a, b)} form a univariate polynomial in x = q^a t^b.
    struct Item {
      long long key;
      int pos;
      const QTTerm *term;
    };
    std::vector<Item> items;
    items.reserve(p.size());
    for (const auto &term : p.terms())
      items.push_back({static_cast<long long>(term.q) * f.b - static_cast<long long>(term.t) * f.a, along_q ? term.q : term.t, &term});
    std::sort(items.begin(), items.end(), [](const Item &x, const Item &y) { return x.key != y.key ? x.key < y.key : x.pos < y.pos; });

    std::vector<QTTerm> out;
    std::vector<BigInt> line, quotient;
    for (std::size_t lo = 0; lo < items.size();) {
      std::size_t hi = lo;
      while (hi < items.size() && items[hi].key == items[lo].key) ++hi;
      const int base_pos  = items[lo].pos;
      const int top       = (items[hi - 1].pos - base_pos) / step;
      if (top < deg) return std::nullopt;
      line.assign(top + 1, 0);
      for (std::size_t i = lo; i < hi; ++i) line[(items[i].pos - base_pos) / step] = items[i].term->coeff;
      // Psi_d has constant term 1, so divide from the bottom and check the top deg coefficients vanish.
      quotient.assign(top - deg + 1, 0);
      for (int k = 0; k <= top - deg; ++k) {
        BigInt c = line[k];
        quotient[k] = c;
        if (c != 0)
          for (int i = 0; i <= deg; ++i)
            if (psi[i] != 0) line[k + i] -= c * psi[i];
      }
      for (int k = top - deg + 1; k <= top; ++k)
        if (line[k] != 0) return std::nullopt;
      const QTTerm &base = *items[lo].term;
      for (int k = 0; k <= top - deg; ++k)
        if (quotient[k] != 0) out.push_back({base.q + k * f.a, base.t + k * f.b, std::move(quotient[k])});
      lo = hi;
    }
    return QTPolynomial::from_terms(std::move(out));
  }

  std::optional<QTPolynomial> divide_exact(const QTPolynomial &a, const QTPolynomial &b) {
    if (b.is_zero()) throw ZeroDenominatorError("division by the zero polynomial");
    if (a.is_zero()) return QTPolynomial{};
    QTPolynomial rem        = a.shifted(-a.min_q(), -a.min_t());
    const QTPolynomial div  = b.shifted(-b.min_q(), -b.min_t());
    const int max_q_quot    = rem.max_q() - div.max_q();
    const int max_t_quot    = rem.max_t() - div.max_t();
    const QTTerm lead       = div.terms().back();
    std::vector<QTTerm> quot;
    while (!rem.is_zero()) {
      const QTTerm &top = rem.terms().back();
      const int dq = top.q - lead.q, dt = top.t - lead.t;
      if (dq < 0 || dt < 0 || dq > max_q_quot || dt > max_t_quot) return std::nullopt;
      if (top.coeff % lead.coeff != 0) return std::nullopt;
      auto m = QTPolynomial::monomial(dq, dt, top.coeff / lead.coeff);
      quot.push_back(m.terms()[0]);
      rem -= m * div;
    }
    return QTPolynomial::from_terms(std::move(quot)).shifted(a.min_q() - b.min_q(), a.min_t() - b.min_t());
  }

  void FactoredRational::canonicalize() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    for (auto &[f, m] : den_) {
      while (m > 0) {
        auto quotient = divide_exact(num_, f);
        if (!quotient) break;
        num_ = std::move(*quotient);
        --m;
      }
    }
    std::erase_if(den_, [](const auto &entry) { return entry.second == 0; });
  }

  FactoredRational FactoredRational::from_binomials(QTPolynomial numerator, std::span<const BinomialFactor> denominator) {
    FactoredRational r(std::move(numerator));
    for (const auto &bf : denominator) {
      if (bf.multiplicity < 0) throw std::invalid_argument("negative binomial multiplicity");
      if (bf.multiplicity == 0) continue;
      for (const auto &f : factor_binomial(bf.a, bf.b)) add_factor(r.den_, f, bf.multiplicity);
    }
    r.canonicalize();
    return r;
  }

  FactoredRational FactoredRational::inverse_binomial(int a, int b) {
    if (a <= 0 && b <= 0 && (a != 0 || b != 0)) {
      // 1/(1 - x^{-1}) = -x/(1 - x) with x = q^{-a} t^{-b}.
      const BinomialFactor f{-a, -b, 1};
      return from_binomials(QTPolynomial::monomial(-a, -b, -1), std::span(&f, 1));
    }
    const BinomialFactor f{a, b, 1};
    return from_binomials(QTPolynomial::constant(1), std::span(&f, 1));
  }

  BinomialForm FactoredRational::binomial_form() const {
    BinomialForm form{num_, {}};
    // Group by primitive direction; choose, from the largest index down, the fewest binomials
    // 1 - x^k covering every required Psi_d, then multiply the numerator by the surplus.
    std::map<std::pair<int, int>, std::map<int, int>> by_direction;
    for (const auto &[f, m] : den_) by_direction[{f.a, f.b}][f.d] = m;
    for (const auto &[dir, need] : by_direction) {
      std::map<int, int> chosen;
      for (auto it = need.rbegin(); it != need.rend(); ++it) {
        int have = 0;
        for (const auto &[k, count] : chosen)
          if (k % it->first == 0) have += count;
        if (it->second > have) chosen[it->first] += it->second - have;
      }
      std::map<int, int> covered;
      for (const auto &[k, count] : chosen)
        for (int d = 1; d <= k; ++d)
          if (k % d == 0) covered[d] += count;
      for (const auto &[d, count] : covered) {
        auto it           = need.find(d);
        const int surplus = count - (it == need.end() ? 0 : it->second);
        if (surplus > 0) form.numerator *= expand_power({dir.first, dir.second, d}, surplus);
      }
      for (const auto &[k, count] : chosen) form.denominator.push_back({dir.first * k, dir.second * k, count});
    }
    std::sort(form.denominator.begin(), form.denominator.end());
    return form;
  }

  FactoredRational operator+(const FactoredRational &a, const FactoredRational &b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RationalSum sum;
    sum.add(a);
    sum.add(b);
    return sum.result();
  }

  FactoredRational operator*(const FactoredRational &a, const FactoredRational &b) {
    if (a.is_zero() || b.is_zero()) return {};
    FactoredRational r(a.num_ * b.num_);
    r.den_ = a.den_;
    for (const auto &[f, m] : b.den_) add_factor(r.den_, f, m);
    r.canonicalize();
    return r;
  }

  bool rat_eq(const FactoredRational &a, const FactoredRational &b) {
    DenList only_a, only_b;
    for (const auto &[f, m] : a.irreducible_denominator()) {
      const int extra = m - multiplicity({b.irreducible_denominator().begin(), b.irreducible_denominator().end()}, f);
      if (extra > 0) only_a.push_back({f, extra});
    }
    for (const auto &[f, m] : b.irreducible_denominator()) {
      const int extra = m - multiplicity({a.irreducible_denominator().begin(), a.irreducible_denominator().end()}, f);
      if (extra > 0) only_b.push_back({f, extra});
    }
    return a.reduced_numerator() * expand_all(only_b) == b.reduced_numerator() * expand_all(only_a);
  }

  namespace {

    int totient(int d) {
      int result = d;
      for (int p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        result -= result / p;
      }
      if (d > 1) result -= result / d;
      return result;
    }

    // Every Psi_d(q^a t^b) whose exponent box fits inside q_span x t_span.
    std::vector<IrreducibleFactor> psi_candidates(int q_span, int t_span) {
      std::vector<IrreducibleFactor> out;
      for (int a = 0; a <= q_span; ++a)
        for (int b = 0; b <= t_span; ++b) {
          if (std::gcd(a, b) != 1 || (a == 0 && b != 1)) continue;
          const int span = a > 0 ? q_span / a : t_span;
          const int limit = b > 0 ? std::min(span, t_span / b) : span;
          // phi(d) >= sqrt(d / 2)
          for (int d = 1; d <= 2 * limit * limit; ++d)
            if (totient(d) <= limit) out.push_back({a, b, d});
        }
      return out;
    }

  } // namespace

  FactoredRational divide(const FactoredRational &a, const FactoredRational &b) {
    if (b.is_zero()) throw ZeroDenominatorError("division by zero");
    if (a.is_zero()) return {};
    // a/b = a.num * D_b / (b.num * D_a).  Every irreducible binomial piece of b.num moves into the
    // result's denominator; what is left of b.num must divide exactly.
    QTPolynomial divisor = b.num_.shifted(-b.num_.min_q(), -b.num_.min_t());
    DenList result_den   = a.den_;
    for (const auto &f : psi_candidates(divisor.max_q(), divisor.max_t())) {
      while (auto quotient = divide_exact(divisor, f)) {
        divisor = std::move(*quotient);
        add_factor(result_den, f, 1);
      }
    }
    auto quotient = divide_exact(a.num_ * expand_all(b.den_), divisor);
    if (!quotient) throw std::domain_error("quotient denominator is not a product of binomials 1 - q^a t^b");
    FactoredRational r(quotient->shifted(-b.num_.min_q(), -b.num_.min_t()));
    r.den_ = std::move(result_den);
    r.canonicalize();
    return r;
  }

  void RationalSum::add(const FactoredRational &r) {
    if (r.is_zero()) return;
    for (const auto &[f, m] : r.den_) {
      const int have = multiplicity(den_, f);
      if (m > have) {
        num_ *= expand_power(f, m - have);
        add_factor(den_, f, m - have);
      }
    }
    QTPolynomial scaled = r.num_;
    for (const auto &[f, m] : den_) {
      const int missing = m - multiplicity(r.den_, f);
      if (missing > 0) scaled *= expand_power(f, missing);
    }
    num_ += scaled;
  }

  FactoredRational RationalSum::result() const {
    FactoredRational r(num_);
    r.den_ = den_;
    r.canonicalize();
    return r;
  }

  namespace {

    // Keeps the terms whose exponent of the chosen variable is zero.  Throws on a negative exponent
    // (pole at zero), or on a positive one when forbid_positive is set (pole at infinity).
    QTPolynomial constant_part(const QTPolynomial &p, bool in_q, bool forbid_positive) {
      std::vector<QTTerm> kept;
      for (const auto &term : p.terms()) {
        const int e = in_q ? term.q : term.t;
        if ((forbid_positive && e > 0) || (!forbid_positive && e < 0))
          throw ZeroDenominatorError(std::string("value has a pole at ") + (in_q ? "q" : "t") + (forbid_positive ? " = infinity" : " = 0"));
        if (e == 0) kept.push_back(term);
      }
      return QTPolynomial::from_terms(std::move(kept));
    }

    BinomialForm limit(BinomialForm form, bool in_q, Substitution::Limit lim) {
      if (lim == Substitution::Limit::keep) return form;
      std::vector<BinomialFactor> remaining;
      for (const auto &bf : form.denominator) {
        const int e = in_q ? bf.a : bf.b;
        if (e == 0) {
          remaining.push_back(bf);
        } else if (lim == Substitution::Limit::infinity) {
          // 1/(1 - x) = -x^{-1} / (1 - x^{-1}) and 1 - x^{-1} -> 1.
          for (int i = 0; i < bf.multiplicity; ++i) form.numerator = -form.numerator.shifted(-bf.a, -bf.b);
        }
      }
      form.numerator   = constant_part(form.numerator, in_q, lim == Substitution::Limit::infinity);
      form.denominator = std::move(remaining);
      return form;
    }

  } // namespace

  FactoredRational substitute(const FactoredRational &r, const Substitution &s) {
    BinomialForm form = r.binomial_form();
    if (s.t_equals_q) {
      std::vector<QTTerm> terms;
      for (const auto &term : form.numerator.terms()) terms.push_back({term.q + term.t, 0, term.coeff});
      form.numerator = QTPolynomial::from_terms(std::move(terms));
      for (auto &bf : form.denominator) bf = {bf.a + bf.b, 0, bf.multiplicity};
    }
    form = limit(std::move(form), false, s.t);
    form = limit(std::move(form), true, s.q);
    return FactoredRational::from_binomials(std::move(form.numerator), form.denominator);
  }

  namespace {

    BigRational power(const BigRational &base, int e) {
      BigRational result = 1;
      for (int i = 0; i < std::abs(e); ++i) result *= base;
      return e >= 0 ? result : BigRational(1 / result);
    }

  } // namespace

  BigRational evaluate(const QTPolynomial &p, const BigRational &q, const BigRational &t) {
    BigRational sum = 0;
    for (const auto &term : p.terms()) {
      if ((term.q < 0 && q == 0) || (term.t < 0 && t == 0)) throw ZeroDenominatorError("negative power of zero");
      BigRational v = BigRational(term.coeff);
      v *= power(q, term.q);
      v *= power(t, term.t);
      sum += v;
    }
    return sum;
  }

  BigRational evaluate(const FactoredRational &r, const BigRational &q, const BigRational &t) {
    BigRational den = 1;
    for (const auto &[f, m] : r.irreducible_denominator()) {
      BigRational v = evaluate(expand(f), q, t);
      if (v == 0) throw ZeroDenominatorError("denominator factor vanishes at the evaluation point");
      for (int i = 0; i < m; ++i) den *= v;
    }
    return evaluate(r.reduced_numerator(), q, t) / den;
  }

} // namespace macsvt
