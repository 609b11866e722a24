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
 * @brief Compositions, their boxes, and the per-box statistics that drive both tableau formulas.
 *
 * All indices are 1-based.  Row r of a composition mu holds mu_r boxes (r,1), .., (r,mu_r); boxes are
 * traversed down columns and then left to right, i.e. by increasing r + n*c.
 */

#pragma once

#include "macsvt/permutation.hpp"

#include <compare>
#include <span>
#include <vector>

namespace macsvt {

  struct Box {
    int r = 1;
    int c = 1;

    friend bool operator==(const Box &, const Box &) = default;
    friend auto operator<=>(const Box &, const Box &) = default;
  };

  /// A vector mu = (mu_1, .., mu_n) of nonnegative integers, n >= 1.
  class Composition {
   public:
    /// Throws std::invalid_argument for an empty vector or a negative part.
    explicit Composition(std::vector<int> parts);

    [[nodiscard]] int rank() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int part(int r) const { return parts_[r - 1]; }
    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }

    /// Number of boxes, sum of the parts.
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] int max_part() const noexcept;
    [[nodiscard]] bool contains(Box b) const noexcept;
    /// Weakly decreasing.
    [[nodiscard]] bool is_partition() const noexcept;

    friend bool operator==(const Composition &, const Composition &) = default;

   private:
    std::vector<int> parts_;
  };

  /// Boxes of mu sorted by r + n*c.
  [[nodiscard]] std::vector<Box> box_list(const Composition &mu);

  /// Minimal-length permutation v with v(r) the position of mu_r in the weakly increasing rearrangement.
  [[nodiscard]] Permutation v_mu(const Composition &mu);

  /**
   * @brief Bound on the entries allowed in box b:
   * #{r' < r : mu_r' < c <= mu_r} + #{r' > r : mu_r' < c-1 < mu_r}.
   *
   * Throws InvalidBoxError if b is not a box of mu.
   */
  [[nodiscard]] int u_arm(const Composition &mu, Box b);

  /// sh(r,c) = mu_r - c + 1.
  [[nodiscard]] int shift(const Composition &mu, Box b);

  /// ht(m,r,c) = v_mu(r) - m, for 1 <= m <= u_arm(mu, b).  Throws InvalidEntryError otherwise.
  [[nodiscard]] int height(const Composition &mu, int m, Box b);

  /// Every composition of rank n with parts in {0, .., max_part}, lexicographic.
  [[nodiscard]] std::vector<Composition> all_compositions(int n, int max_part);

} // namespace macsvt
