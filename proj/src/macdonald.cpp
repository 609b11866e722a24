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

#include "macsvt/macdonald.hpp"

#include "macsvt/error.hpp"
#include "macsvt/format.hpp"
#include "macsvt/walk.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace macsvt {

  namespace {

    bool exceeds_budget(int log2_count, std::uint64_t multiplier, std::uint64_t budget) {
      if (log2_count >= 64) return true;
      const std::uint64_t count = std::uint64_t{1} << log2_count;
      return count > budget / multiplier || count * multiplier > budget;
    }

    std::uint64_t factorial(int n) {
      std::uint64_t f = 1;
      for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
      return f;
    }

    std::string describe(const Permutation &z, const SetValuedTableau &t) {
      std::ostringstream out;
      out << "mu=(";
      for (std::size_t r = 0; r < t.shape().parts().size(); ++r) out << (r ? "," : "") << t.shape().parts()[r];
      out << ") z=(";
      for (std::size_t i = 0; i < z.window().size(); ++i) out << (i ? "," : "") << z.window()[i];
      out << ") T=" << to_text(t);
      return out.str();
    }

  } // namespace

  TermRecord tableau_term(const Permutation &z, const SetValuedTableau &t, Variant variant) {
    const Diagram &d             = t.diagram();
    const TableauStatistics stat = statistics(z, t);
    std::vector<std::pair<int, int>> factors;
    std::vector<BinomialFactor> denominator;
    for (std::size_t i = 0; i < d.box_count(); ++i) {
      for (int m : t.entries_at(i)) {
        factors.emplace_back(d.shift(i), d.height(i, m));
        denominator.push_back({d.shift(i), d.height(i, m), 1});
      }
    }
    const int k = static_cast<int>(factors.size());
    TermRecord rec{t, x_weight(stat.sequence), x_word(stat.sequence), 0, 0, std::move(factors), {}};
    if (variant == Variant::pos) {
      rec.maj = stat.maj_gt;
      rec.cov = stat.cov_gt;
      const QTPolynomial one_minus_t = QTPolynomial::constant(1) - t_var;
      rec.coefficient = FactoredRational::from_binomials(one_minus_t.pow(k).shifted(rec.maj, rec.cov), denominator);
    } else {
      rec.maj = stat.maj_lt;
      rec.cov = stat.cov_lt;
      // (1 - t^{-1}) / (1 - q^{-a} t^{-b}) = -q^a t^b (1 - t^{-1}) / (1 - q^a t^b).
      QTPolynomial numerator = (QTPolynomial::constant(1) - QTPolynomial::monomial(0, -1)).pow(k).shifted(-rec.maj, -rec.cov);
      for (const auto &[sh, ht] : rec.factors) numerator = -numerator.shifted(sh, ht);
      rec.coefficient = FactoredRational::from_binomials(std::move(numerator), denominator);
    }
    return rec;
  }

  TermRecord walk_term(const Permutation &z, const SetValuedTableau &t, Variant variant) {
    const AlcoveWalk walk = walk_from_subset(z, t.shape(), tableau_to_subset(t));
    WalkTerm w            = walk_weight(walk, variant);
    // Walk folds come in letter order (decreasing entry inside a box); list them by box, then entry.
    std::vector<Fold> order = w.folds;
    std::stable_sort(order.begin(), order.end(), [&](const Fold &a, const Fold &b) {
      const auto ia = t.diagram().index_of(a.box), ib = t.diagram().index_of(b.box);
      return ia != ib ? ia < ib : a.m < b.m;
    });
    std::vector<std::pair<int, int>> factors;
    for (const Fold &f : order) factors.emplace_back(static_cast<int>(f.inversion.shift()), f.inversion.height());
    return TermRecord{t, std::move(w.x), std::move(w.x_word), w.maj, w.cov, std::move(factors), std::move(w.coefficient)};
  }

  EResult compute_E(const MacdonaldQuery &query, const ComputeOptions &options) {
    const int n = query.mu.rank();
    if (query.z.rank() != n)
      throw RankMismatchError("permutation rank " + std::to_string(query.z.rank()) + " does not match shape rank " + std::to_string(n));
    const auto diagram = make_diagram(query.mu);
    if (exceeds_budget(diagram->total_arm(), 1, options.max_terms)) throw BudgetExceededError(diagram->total_arm(), options.max_terms);
    EResult result{XPolynomial(n), {}};
    XPolynomialSum sum(n);
    TableauEnumerator(diagram).for_each([&](const SetValuedTableau &t) {
      TermRecord rec = query.engine == Engine::tableaux ? tableau_term(query.z, t, query.variant) : walk_term(query.z, t, query.variant);
      sum.add(rec.x, rec.coefficient);
      if (options.keep_terms) result.terms.push_back(std::move(rec));
    });
    result.polynomial = sum.result();
    return result;
  }

  XPolynomial symmetrized_sum(const Composition &lambda, std::uint64_t max_terms) {
    const int n        = lambda.rank();
    const auto diagram = make_diagram(lambda);
    if (n > 20 || exceeds_budget(diagram->total_arm(), factorial(n), max_terms))
      throw BudgetExceededError(diagram->total_arm() + static_cast<int>(std::ceil(std::log2(static_cast<double>(factorial(std::min(n, 20)))))), max_terms);
    XPolynomialSum sum(n);
    const TableauEnumerator tableaux(diagram);
    for (const Permutation &z : all_permutations(n)) {
      tableaux.for_each([&](const SetValuedTableau &t) {
        TermRecord rec = tableau_term(z, t, Variant::pos);
        sum.add(rec.x, rec.coefficient);
      });
    }
    return sum.result();
  }

  XPolynomial compute_P(const Composition &lambda, std::uint64_t max_terms) {
    if (!lambda.is_partition()) throw std::invalid_argument("lambda must be weakly decreasing");
    const XPolynomial s = symmetrized_sum(lambda, max_terms);
    if (!is_symmetric(s)) throw InternalConsistencyError("the symmetrized sum is not symmetric");
    const FactoredRational lead = s.coefficient(XMonomial(std::vector<int>(lambda.parts().begin(), lambda.parts().end())));
    if (lead.is_zero()) throw InternalConsistencyError("the symmetrized sum vanishes at x^lambda");
    XPolynomial p(lambda.rank());
    for (const auto &[m, c] : s.terms()) p.add_term(m, divide(c, lead));
    return p;
  }

  XPolynomial specialize(const XPolynomial &p, const Substitution &s) {
    XPolynomial out(p.rank());
    for (const auto &[m, c] : p.terms()) out.add_term(m, substitute(c, s));
    return out;
  }

  RationalXPolynomial evaluate_at(const XPolynomial &p, const BigRational &q, const BigRational &t) {
    RationalXPolynomial out{p.rank(), {}};
    for (const auto &[m, c] : p.terms()) {
      BigRational v = evaluate(c, q, t);
      if (v != 0) out.terms.emplace(m, std::move(v));
    }
    return out;
  }

  VerifyReport verify_identities(const Composition &mu, const Permutation &z, const VerifyOptions &options) {
    if (z.rank() != mu.rank())
      throw RankMismatchError("permutation rank " + std::to_string(z.rank()) + " does not match shape rank " + std::to_string(mu.rank()));
    const auto diagram = make_diagram(mu);
    VerifyReport report;

    auto check = [&](const SetValuedTableau &t) {
      ++report.checked;
      std::vector<std::string> failures;
      try {
        const TermRecord pos      = tableau_term(z, t, Variant::pos);
        const TermRecord neg      = tableau_term(z, t, Variant::neg);
        const TermRecord walk_pos = walk_term(z, t, Variant::pos);
        const TermRecord walk_neg = walk_term(z, t, Variant::neg);
        if (!(pos.x == neg.x) || !rat_eq(pos.coefficient, neg.coefficient)) {
          report.pos_neg = false;
          failures.emplace_back("pos/neg");
        }
        if (!(walk_pos.x == pos.x) || !rat_eq(walk_pos.coefficient, pos.coefficient) || !rat_eq(walk_neg.coefficient, neg.coefficient)) {
          report.walk_tableau = false;
          failures.emplace_back("walk/tableau");
        }
        const TableauStatistics stat = statistics(z, t);
        const AlcoveWalk walk        = walk_from_subset(z, mu, tableau_to_subset(t));
        for (const Fold &f : folds(walk)) {
          const bool greater = (stat.folds.greater[diagram->index_of(f.box)] >> (f.m - 1)) & 1;
          if (greater != (f.sign == FoldSign::negative)) {
            report.fold_sign = false;
            failures.emplace_back("fold-sign");
            break;
          }
        }
      } catch (const InternalConsistencyError &e) {
        report.parity = false;
        failures.emplace_back(std::string("parity (") + e.what() + ")");
      }
      if (!failures.empty()) {
        ++report.failed;
        if (!report.counterexample) {
          std::string text = describe(z, t) + ": ";
          for (std::size_t i = 0; i < failures.size(); ++i) text += (i ? ", " : "") + failures[i];
          report.counterexample = std::move(text);
        }
      }
    };

    if (options.samples) {
      std::mt19937_64 rng(options.seed);
      for (std::uint64_t i = 0; i < *options.samples; ++i) check(random_tableau(diagram, rng));
    } else {
      if (exceeds_budget(diagram->total_arm(), 1, options.max_terms)) throw BudgetExceededError(diagram->total_arm(), options.max_terms);
      TableauEnumerator(diagram).for_each(check);
    }
    return report;
  }

} // namespace macsvt
