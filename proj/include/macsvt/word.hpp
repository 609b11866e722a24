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
 * @brief Words in s_1, .., s_{n-1} and pi, and the box-greedy reduced word of u_mu.
 */

#pragma once

#include "macsvt/composition.hpp"
#include "macsvt/periodic.hpp"

#include <cstddef>
#include <vector>

namespace macsvt {

  struct Letter {
    enum class Kind { s, pi };

    Kind kind = Kind::pi;
    /// j for s_j; 0 for pi.
    int index = 0;
    /// Box whose block of the box-greedy word contains this letter.
    Box box{};

    [[nodiscard]] bool is_pi() const noexcept { return kind == Kind::pi; }

    friend bool operator==(const Letter &, const Letter &) = default;
  };

  struct Word {
    std::vector<Letter> letters;

    [[nodiscard]] std::size_t size() const noexcept { return letters.size(); }
    [[nodiscard]] std::size_t s_count() const noexcept;
  };

  /// Concatenation over boxes (in box order) of s_u s_{u-1} .. s_1 pi, u = u_arm(mu, box).
  [[nodiscard]] Word box_greedy_word(const Composition &mu);

  /// Product of the letters, by right multiplication starting from the identity.
  [[nodiscard]] PeriodicPermutation evaluate_word(const Word &w, int n);

} // namespace macsvt
