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

#include "macsvt/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace macsvt {

  std::size_t Word::s_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(letters.begin(), letters.end(), [](const Letter &l) { return !l.is_pi(); }));
  }

  Word box_greedy_word(const Composition &mu) {
    Word w;
    for (Box b : box_list(mu)) {
      for (int j = u_arm(mu, b); j >= 1; --j) w.letters.push_back({Letter::Kind::s, j, b});
      w.letters.push_back({Letter::Kind::pi, 0, b});
    }
    return w;
  }

  PeriodicPermutation evaluate_word(const Word &w, int n) {
    auto p = PeriodicPermutation::identity(n);
    for (const auto &letter : w.letters) {
      if (letter.is_pi()) {
        p = p.times_pi();
      } else {
        if (letter.index < 1 || letter.index >= n) throw std::invalid_argument("letter s_j out of range for rank n");
        p = p.times_s(letter.index);
      }
    }
    return p;
  }

} // namespace macsvt
