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
 * @brief n-periodic permutations of the integers and their affine inversions.
 */

#pragma once

#include "macsvt/composition.hpp"
#include "macsvt/permutation.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace macsvt {

  /**
   * @brief A bijection w of Z with w(i + n) = w(i) + n, stored as the window (w(1), .., w(n)).
   *
   * The window residues mod n are always a complete residue system.
   */
  class PeriodicPermutation {
   public:
    PeriodicPermutation() = default;

    /// Throws std::invalid_argument if the window residues are not {0, .., n-1}.
    explicit PeriodicPermutation(std::vector<std::int64_t> window);

    static PeriodicPermutation identity(int n);
    static PeriodicPermutation embed(const Permutation &w);

    [[nodiscard]] int rank() const noexcept { return static_cast<int>(window_.size()); }
    [[nodiscard]] std::span<const std::int64_t> window() const noexcept { return window_; }

    /// w(k) for any integer k, by periodic extension.
    [[nodiscard]] std::int64_t operator()(std::int64_t k) const;

    /// Right multiplication by s_j: swaps the values at positions j and j+1.
    [[nodiscard]] PeriodicPermutation times_s(int j) const;
    /// Right multiplication by pi (pi(i) = i+1): window becomes (w(2), .., w(n), w(1)+n).
    [[nodiscard]] PeriodicPermutation times_pi() const;
    /// Right multiplication by pi^{-1}: window becomes (w(n)-n, w(1), .., w(n-1)).
    [[nodiscard]] PeriodicPermutation times_pi_inverse() const;

    /// The finite permutation i -> w(i) mod n, with residue 0 written as n.
    [[nodiscard]] Permutation residues() const;

    friend bool operator==(const PeriodicPermutation &, const PeriodicPermutation &) = default;

   private:
    std::vector<std::int64_t> window_;
  };

  /**
   * @brief An inversion (i, k) with i in {1..n}, i < k, w(i) > w(k).
   *
   * k decomposes as j + ell*n with j in {1..n}; the shift is ell and the height is |j - i|.
   */
  struct AffineInversion {
    int i            = 1;
    std::int64_t k   = 1;
    int j            = 1;
    std::int64_t ell = 0;

    static AffineInversion make(int i, std::int64_t k, int n);

    [[nodiscard]] std::int64_t shift() const noexcept { return ell; }
    [[nodiscard]] int height() const noexcept { return j > i ? j - i : i - j; }

    friend bool operator==(const AffineInversion &a, const AffineInversion &b) noexcept { return a.i == b.i && a.k == b.k; }
    friend auto operator<=>(const AffineInversion &a, const AffineInversion &b) noexcept {
      if (auto c = a.i <=> b.i; c != 0) return c;
      return a.k <=> b.k;
    }
  };

  /// u_mu = t_mu v_mu^{-1} with t_mu(j) = j + n*mu_j, so u_mu(i) = v_mu^{-1}(i) + n*mu_{v_mu^{-1}(i)}.
  [[nodiscard]] PeriodicPermutation periodic_from_mu(const Composition &mu);

  /// n * (max part + 1); large enough for inversions_brute on periodic_from_mu(mu).
  [[nodiscard]] std::int64_t inversion_bound(const Composition &mu);

  /**
   * @brief All inversions (i, k) of w with k <= k_bound, sorted.
   *
   * Throws std::invalid_argument if some k > k_bound could still be an inversion, so a successful
   * return is always the complete inversion set.
   */
  [[nodiscard]] std::vector<AffineInversion> inversions_brute(const PeriodicPermutation &w, std::int64_t k_bound);

  /// The i-th inversion attached to box b by the box-greedy word: (v_mu(r), i + n*(mu_r - c + 1)).
  [[nodiscard]] AffineInversion inversion_by_box(const Composition &mu, Box b, int i);

} // namespace macsvt
