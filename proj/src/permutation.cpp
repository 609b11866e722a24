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

#include "macsvt/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace macsvt {

  Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
    std::vector<bool> seen(window_.size() + 1, false);
    for (int v : window_) {
      if (v < 1 || v > rank() || seen[v]) throw std::invalid_argument("window is not a permutation of {1..n}");
      seen[v] = true;
    }
  }

  Permutation Permutation::identity(int n) {
    Permutation p;
    p.window_.resize(n);
    std::iota(p.window_.begin(), p.window_.end(), 1);
    return p;
  }

  Permutation Permutation::inverse() const {
    Permutation p;
    p.window_.resize(window_.size());
    for (int i = 0; i < rank(); ++i) p.window_[window_[i] - 1] = i + 1;
    return p;
  }

  Permutation Permutation::times_s(int j) const {
    if (j < 1 || j >= rank()) throw std::invalid_argument("s_j requires 1 <= j < n");
    Permutation p = *this;
    std::swap(p.window_[j - 1], p.window_[j]);
    return p;
  }

  Permutation operator*(const Permutation &f, const Permutation &g) {
    if (f.rank() != g.rank()) throw std::invalid_argument("permutation ranks differ");
    Permutation p;
    p.window_.resize(g.window_.size());
    for (int i = 0; i < g.rank(); ++i) p.window_[i] = f.window_[g.window_[i] - 1];
    return p;
  }

  int length(const Permutation &w) {
    int count = 0;
    auto win  = w.window();
    for (std::size_t i = 0; i < win.size(); ++i)
      for (std::size_t j = i + 1; j < win.size(); ++j)
        if (win[i] > win[j]) ++count;
    return count;
  }

  Permutation long_cycle(int k) {
    const int sizes[] = {k};
    return cycle_product(sizes);
  }

  Permutation cycle_product(std::span<const int> block_sizes) {
    std::vector<int> window;
    int offset = 0;
    for (int k : block_sizes) {
      if (k < 1) throw std::invalid_argument("cycle block sizes must be positive");
      window.push_back(offset + k);
      for (int i = 1; i < k; ++i) window.push_back(offset + i);
      offset += k;
    }
    return Permutation(std::move(window));
  }

  std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do { out.emplace_back(w); } while (std::next_permutation(w.begin(), w.end()));
    return out;
  }

} // namespace macsvt
