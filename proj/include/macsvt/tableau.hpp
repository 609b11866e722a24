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
 * @brief Set-valued tableaux, their permutation sequences, x-weights, folds and statistics.
 */

#pragma once

#include "macsvt/composition.hpp"
#include "macsvt/permutation.hpp"
#include "macsvt/x_polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

namespace macsvt {

  /// Per-box data of a composition, computed once and shared by all its tableaux.
  class Diagram {
   public:
    explicit Diagram(Composition mu);

    [[nodiscard]] const Composition &shape() const noexcept { return mu_; }
    [[nodiscard]] int rank() const noexcept { return mu_.rank(); }
    /// Boxes in box order.
    [[nodiscard]] const std::vector<Box> &boxes() const noexcept { return boxes_; }
    [[nodiscard]] std::size_t box_count() const noexcept { return boxes_.size(); }
    [[nodiscard]] int arm(std::size_t index) const { return arms_.at(index); }
    [[nodiscard]] int shift(std::size_t index) const { return shifts_.at(index); }
    /// ht(m, box) = v_mu(r) - m; throws InvalidEntryError unless 1 <= m <= arm.
    [[nodiscard]] int height(std::size_t index, int m) const;
    [[nodiscard]] const Permutation &v() const noexcept { return v_; }
    /// Sum of the arms: the tableau count is 2^total_arm.
    [[nodiscard]] int total_arm() const noexcept { return total_arm_; }
    /// Position of b in box order; throws InvalidBoxError.
    [[nodiscard]] std::size_t index_of(Box b) const;

   private:
    Composition mu_;
    std::vector<Box> boxes_;
    std::vector<int> arms_;
    std::vector<int> shifts_;
    Permutation v_;
    int total_arm_ = 0;
  };

  using DiagramPtr = std::shared_ptr<const Diagram>;

  [[nodiscard]] inline DiagramPtr make_diagram(const Composition &mu) { return std::make_shared<const Diagram>(mu); }

  /**
   * @brief A subset of {1, .., arm} in every box.
   *
   * Subsets are stored as bit masks in box order: bit m-1 is set when m is an entry.
   */
  class SetValuedTableau {
   public:
    /// The all-empty tableau.
    explicit SetValuedTableau(DiagramPtr diagram);
    /// Throws InvalidEntryError if a mask uses a bit beyond the box's arm.
    static SetValuedTableau from_masks(DiagramPtr diagram, std::vector<std::uint64_t> masks);
    /// Entries per box; boxes not listed are empty.  Throws InvalidBoxError / InvalidEntryError.
    static SetValuedTableau from_entries(DiagramPtr diagram, const std::map<Box, std::vector<int>> &entries);

    [[nodiscard]] const Diagram &diagram() const noexcept { return *diagram_; }
    [[nodiscard]] const DiagramPtr &diagram_ptr() const noexcept { return diagram_; }
    [[nodiscard]] const Composition &shape() const noexcept { return diagram_->shape(); }
    [[nodiscard]] std::uint64_t mask(std::size_t index) const { return masks_.at(index); }
    [[nodiscard]] std::span<const std::uint64_t> masks() const noexcept { return masks_; }
    /// Entries of a box, increasing.
    [[nodiscard]] std::vector<int> entries(Box b) const;
    [[nodiscard]] std::vector<int> entries_at(std::size_t index) const;
    /// |T|, the total number of entries.
    [[nodiscard]] int size() const noexcept;

    friend bool operator==(const SetValuedTableau &a, const SetValuedTableau &b) {
      return a.diagram_->shape() == b.diagram_->shape() && a.masks_ == b.masks_;
    }

   private:
    DiagramPtr diagram_;
    std::vector<std::uint64_t> masks_;
  };

  /// Increasing list of the set bits of a mask, 1-based.
  [[nodiscard]] std::vector<int> mask_entries(std::uint64_t mask);

  /**
   * @brief All tableaux of a shape, lexicographic by box order and then by mask.
   *
   * Index i encodes the masks with the last box in the lowest bits.
   */
  class TableauEnumerator {
   public:
    explicit TableauEnumerator(DiagramPtr diagram);

    [[nodiscard]] int log2_count() const noexcept { return diagram_->total_arm(); }
    /// 2^log2_count; throws std::overflow_error if that does not fit in 64 bits.
    [[nodiscard]] std::uint64_t count() const;
    [[nodiscard]] SetValuedTableau at(std::uint64_t index) const;
    void for_each(const std::function<void(const SetValuedTableau &)> &fn) const;

   private:
    DiagramPtr diagram_;
  };

  /// Every tableau of the shape, in enumeration order.  Intended for small shapes.
  [[nodiscard]] std::vector<SetValuedTableau> enumerate_tableaux(const Composition &mu);

  /**
   * @brief The disjoint product gamma_{m_1} x gamma_{m_2-m_1} x .. x gamma_{u+1-m_p} x gamma_1^{n-u-1}.
   *
   * Throws InvalidEntryError unless the subset is increasing inside {1, .., u} and u <= n-1.
   */
  [[nodiscard]] Permutation cycle_sigma(int u, std::span<const int> subset, int n);

  struct PermutationSequence {
    Permutation initial;
    /// z_b for each box, in box order.
    std::vector<Permutation> per_box;
    Permutation final;
  };

  /// z_b = z_prev * cycle_sigma(u, T(b), n) * gamma_n^{-1}.  Throws RankMismatchError.
  [[nodiscard]] PermutationSequence z_sequence(const Permutation &z, const SetValuedTableau &t);

  /// Indices z_b(n) in box order.
  [[nodiscard]] std::vector<int> x_word(const PermutationSequence &seq);
  /// Product of x_{z_b(n)} over all boxes.
  [[nodiscard]] XMonomial x_weight(const PermutationSequence &seq);

  /// Entry masks per box (box order): less and greater partition each T(b).
  struct FoldClassification {
    std::vector<std::uint64_t> less;
    std::vector<std::uint64_t> greater;
  };

  [[nodiscard]] FoldClassification classify_folds(const PermutationSequence &seq, const SetValuedTableau &t);

  struct TableauStatistics {
    PermutationSequence sequence;
    FoldClassification folds;
    int size               = 0;
    int length_final       = 0;
    /// Length of z * v_mu^{-1}.
    int length_initial_key = 0;
    /// (length_final - length_initial_key - size) / 2.
    int half_term          = 0;
    int maj_gt             = 0;
    int cov_gt             = 0;
    int maj_lt             = 0;
    int cov_lt             = 0;
  };

  /// All statistics of (z, T).  Throws InternalConsistencyError if the half term is not an integer.
  [[nodiscard]] TableauStatistics statistics(const Permutation &z, const SetValuedTableau &t);

  [[nodiscard]] inline int maj_gt(const Permutation &z, const SetValuedTableau &t) { return statistics(z, t).maj_gt; }
  [[nodiscard]] inline int cov_gt(const Permutation &z, const SetValuedTableau &t) { return statistics(z, t).cov_gt; }
  [[nodiscard]] inline int maj_lt(const Permutation &z, const SetValuedTableau &t) { return statistics(z, t).maj_lt; }
  [[nodiscard]] inline int cov_lt(const Permutation &z, const SetValuedTableau &t) { return statistics(z, t).cov_lt; }

} // namespace macsvt
