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
 * @brief Alcove walks along the box-greedy word, their folds, and the walk-side weight.
 *
 * This module does not use the tableau statistics: signs come from comparing walk windows,
 * shifts and heights from the affine inversion attached to each crossed letter, and the
 * length correction from the unfolded walk.
 */

#pragma once

#include "macsvt/factored_rational.hpp"
#include "macsvt/periodic.hpp"
#include "macsvt/permutation.hpp"
#include "macsvt/tableau.hpp"
#include "macsvt/variant.hpp"
#include "macsvt/word.hpp"
#include "macsvt/x_polynomial.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace macsvt {

  struct AlcoveWalk {
    int n = 0;
    Word word;
    /// crossed[k - 1] is true when letter k (1-based) is crossed out.
    std::vector<bool> crossed;
    /// p_0 = z, then p_k after letter k.
    std::vector<PeriodicPermutation> steps;

    /// 1-based positions of the crossed letters, increasing.
    [[nodiscard]] std::vector<std::size_t> crossed_letters() const;
    /// Residues of the step after each pi letter, i.e. at the end of each box.
    [[nodiscard]] std::vector<Permutation> boundary_residues() const;
  };

  /**
   * @brief Steps p_k = p_{k-1} pi for pi, p_{k-1} for a crossed letter, p_{k-1} s_j otherwise.
   *
   * Letters are numbered from 1.  Throws InvalidSubsetError if a listed index is out of range or names a pi letter, and
   * RankMismatchError if z and mu have different ranks.
   */
  [[nodiscard]] AlcoveWalk walk_from_subset(const Permutation &z, const Composition &mu, std::span<const std::size_t> crossed);

  /// 1-based positions of the letters s_m for every entry m of every box.
  [[nodiscard]] std::vector<std::size_t> tableau_to_subset(const SetValuedTableau &t);
  /// Inverse of tableau_to_subset.  Throws InvalidSubsetError for pi letters or bad indices.
  [[nodiscard]] SetValuedTableau subset_to_tableau(DiagramPtr diagram, std::span<const std::size_t> crossed);

  enum class FoldSign { positive, negative };

  struct Fold {
    /// 1-based letter position.
    std::size_t k = 0;
    Box box{};
    int m         = 0;
    FoldSign sign = FoldSign::positive;
    AffineInversion inversion;
  };

  /// One fold per crossed letter.  The inversion is recovered from the suffix of the word.
  [[nodiscard]] std::vector<Fold> folds(const AlcoveWalk &walk);

  struct WalkTerm {
    XMonomial x;
    std::vector<int> x_word;
    int maj = 0;
    int cov = 0;
    /// (shift, height) of each fold, in letter order.
    std::vector<std::pair<int, int>> factors;
    std::vector<Fold> folds;
    FactoredRational coefficient;
  };

  /// Weight of a walk computed from walk data only.  Throws InternalConsistencyError on a parity failure.
  [[nodiscard]] WalkTerm walk_weight(const AlcoveWalk &walk, Variant variant);

} // namespace macsvt
