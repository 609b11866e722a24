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
 * @brief Finite permutations of {1, .., n} in one-line notation.
 */

#pragma once

#include <compare>
#include <span>
#include <vector>

namespace macsvt {

  /**
   * @brief A permutation w of {1, .., n}, stored as its window (w(1), .., w(n)).
   *
   * Products compose as functions: (f * g)(i) = f(g(i)).  Right multiplication by the adjacent
   * transposition s_j therefore swaps the window entries at positions j and j+1.
   */
  class Permutation {
   public:
    Permutation() = default;

    /// Throws std::invalid_argument unless the window is a bijection of {1, .., n}.
    explicit Permutation(std::vector<int> window);

    static Permutation identity(int n);

    [[nodiscard]] int rank() const noexcept { return static_cast<int>(window_.size()); }

    /// Value at a 1-based position.
    [[nodiscard]] int operator()(int i) const { return window_[i - 1]; }

    [[nodiscard]] std::span<const int> window() const noexcept { return window_; }

    [[nodiscard]] Permutation inverse() const;

    /// Swaps window positions j and j+1, i.e. returns (*this) * s_j.
    [[nodiscard]] Permutation times_s(int j) const;

    friend Permutation operator*(const Permutation &f, const Permutation &g);

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

   private:
    std::vector<int> window_;
  };

  /// Number of pairs i < j with w(i) > w(j).
  [[nodiscard]] int length(const Permutation &w);

  /// The k-cycle with one-line form (k, 1, 2, .., k-1).
  [[nodiscard]] Permutation long_cycle(int k);

  /// Disjoint product of long cycles on consecutive blocks of the given sizes (all sizes >= 1).
  [[nodiscard]] Permutation cycle_product(std::span<const int> block_sizes);

  /// All permutations of {1, .., n} in lexicographic order of their windows.
  [[nodiscard]] std::vector<Permutation> all_permutations(int n);

} // namespace macsvt
