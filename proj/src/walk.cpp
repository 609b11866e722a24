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

#include "macsvt/walk.hpp"

#include "macsvt/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace macsvt {

  namespace {

    std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

    PeriodicPermutation step(const PeriodicPermutation &p, const Letter &letter, bool crossed) {
      if (letter.is_pi()) return p.times_pi();
      return crossed ? p : p.times_s(letter.index);
    }

  } // namespace

  std::vector<std::size_t> AlcoveWalk::crossed_letters() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < crossed.size(); ++k)
      if (crossed[k]) out.push_back(k + 1);
    return out;
  }

  std::vector<Permutation> AlcoveWalk::boundary_residues() const {
    std::vector<Permutation> out;
    for (std::size_t k = 0; k < word.size(); ++k)
      if (word.letters[k].is_pi()) out.push_back(steps[k + 1].residues());
    return out;
  }

  AlcoveWalk walk_from_subset(const Permutation &z, const Composition &mu, std::span<const std::size_t> crossed) {
    if (z.rank() != mu.rank())
      throw RankMismatchError("permutation rank " + std::to_string(z.rank()) + " does not match shape rank " + std::to_string(mu.rank()));
    AlcoveWalk walk;
    walk.n    = mu.rank();
    walk.word = box_greedy_word(mu);
    walk.crossed.assign(walk.word.size(), false);
    for (std::size_t k : crossed) {
      if (k < 1 || k > walk.word.size()) throw InvalidSubsetError("letter index " + std::to_string(k) + " is outside the word");
      if (walk.word.letters[k - 1].is_pi()) throw InvalidSubsetError("letter " + std::to_string(k) + " is pi and cannot be crossed out");
      walk.crossed[k - 1] = true;
    }
    walk.steps.reserve(walk.word.size() + 1);
    walk.steps.push_back(PeriodicPermutation::embed(z));
    for (std::size_t k = 0; k < walk.word.size(); ++k) walk.steps.push_back(step(walk.steps.back(), walk.word.letters[k], walk.crossed[k]));
    return walk;
  }

  std::vector<std::size_t> tableau_to_subset(const SetValuedTableau &t) {
    const Diagram &d = t.diagram();
    std::vector<std::size_t> out;
    std::size_t block_start = 0;
    for (std::size_t i = 0; i < d.box_count(); ++i) {
      const int u = d.arm(i);
      // Block of box i is s_u, s_{u-1}, .., s_1, pi.
      auto entries = t.entries_at(i);
      for (auto it = entries.rbegin(); it != entries.rend(); ++it) out.push_back(block_start + static_cast<std::size_t>(u - *it) + 1);
      block_start += static_cast<std::size_t>(u) + 1;
    }
    return out;
  }

  SetValuedTableau subset_to_tableau(DiagramPtr diagram, std::span<const std::size_t> crossed) {
    const Word word = box_greedy_word(diagram->shape());
    std::map<Box, std::vector<int>> entries;
    for (std::size_t k : crossed) {
      if (k < 1 || k > word.size()) throw InvalidSubsetError("letter index " + std::to_string(k) + " is outside the word");
      const Letter &letter = word.letters[k - 1];
      if (letter.is_pi()) throw InvalidSubsetError("letter " + std::to_string(k) + " is pi and cannot be crossed out");
      entries[letter.box].push_back(letter.index);
    }
    return SetValuedTableau::from_entries(std::move(diagram), entries);
  }

  std::vector<Fold> folds(const AlcoveWalk &walk) {
    const std::int64_t n = walk.n;
    std::vector<Fold> out;
    // y = w_{k+1} .. w_r; the letter w_k contributes the inversion y^{-1}(m), y^{-1}(m+1).
    PeriodicPermutation y_inverse = PeriodicPermutation::identity(walk.n);
    for (std::size_t k = walk.word.size(); k-- > 0;) {
      const Letter &letter = walk.word.letters[k];
      if (letter.is_pi()) {
        y_inverse = y_inverse.times_pi_inverse();
        continue;
      }
      const int m = letter.index;
      if (walk.crossed[k]) {
        std::int64_t a = y_inverse(m), b = y_inverse(m + 1);
        if (a > b) std::swap(a, b);
        const std::int64_t offset = n * floor_div(a - 1, n);
        const Permutation before  = walk.steps[k].residues();
        Fold f;
        f.k         = k + 1;
        f.box       = letter.box;
        f.m         = m;
        f.sign      = before(m) > before(m + 1) ? FoldSign::negative : FoldSign::positive;
        f.inversion = AffineInversion::make(static_cast<int>(a - offset), b - offset, walk.n);
        out.push_back(f);
      }
      y_inverse = y_inverse.times_s(m);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  WalkTerm walk_weight(const AlcoveWalk &walk, Variant variant) {
    const int n = walk.n;
    WalkTerm term;
    term.x = XMonomial::one(n);
    for (const Permutation &boundary : walk.boundary_residues()) {
      term.x_word.push_back(boundary(n));
      term.x.multiply_by(boundary(n));
    }

    // The same word walked from the same start with nothing crossed out.
    PeriodicPermutation unfolded = walk.steps.front();
    for (const Letter &letter : walk.word.letters) unfolded = step(unfolded, letter, false);
    const int length_final    = length(walk.steps.back().residues());
    const int length_unfolded = length(unfolded.residues());

    term.folds           = folds(walk);
    const auto &fold_list = term.folds;
    const int count      = static_cast<int>(fold_list.size());
    if ((length_final - length_unfolded - count) % 2 != 0) throw InternalConsistencyError("walk length difference and fold count have different parity");

    int sh_neg = 0, ht_neg = 0, sh_pos = 0, ht_pos = 0;
    std::vector<BinomialFactor> denominator;
    for (const Fold &f : fold_list) {
      const int sh = static_cast<int>(f.inversion.shift());
      const int ht = f.inversion.height();
      term.factors.emplace_back(sh, ht);
      denominator.push_back({sh, ht, 1});
      if (f.sign == FoldSign::negative) {
        sh_neg += sh;
        ht_neg += ht;
      } else {
        sh_pos += sh;
        ht_pos += ht;
      }
    }

    if (variant == Variant::pos) {
      term.maj = sh_neg;
      term.cov = ht_neg + (length_final - length_unfolded - count) / 2;
      const QTPolynomial one_minus_t = QTPolynomial::constant(1) - t_var;
      term.coefficient = FactoredRational::from_binomials(one_minus_t.pow(count).shifted(term.maj, term.cov), denominator);
    } else {
      term.maj = sh_pos;
      term.cov = ht_pos - (length_final - length_unfolded + count) / 2;
      const QTPolynomial one_minus_t_inv = QTPolynomial::constant(1) - QTPolynomial::monomial(0, -1);
      FactoredRational c(one_minus_t_inv.pow(count).shifted(-term.maj, -term.cov));
      for (const Fold &f : fold_list) c *= FactoredRational::inverse_binomial(-static_cast<int>(f.inversion.shift()), -f.inversion.height());
      term.coefficient = std::move(c);
    }
    return term;
  }

} // namespace macsvt
