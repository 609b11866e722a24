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

#include "macsvt/composition.hpp"

#include "macsvt/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace macsvt {

  namespace {

    std::string box_name(Box b) { return "(" + std::to_string(b.r) + "," + std::to_string(b.c) + ")"; }

    void require_box(const Composition &mu, Box b) {
      if (!mu.contains(b)) throw InvalidBoxError("box " + box_name(b) + " is not in the shape");
    }

  } // namespace

  Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
    if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p < 0; }))
      throw std::invalid_argument("composition parts must be nonnegative");
  }

  int Composition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  int Composition::max_part() const noexcept { return *std::max_element(parts_.begin(), parts_.end()); }

  bool Composition::contains(Box b) const noexcept {
    return b.r >= 1 && b.r <= rank() && b.c >= 1 && b.c <= parts_[b.r - 1];
  }

  bool Composition::is_partition() const noexcept {
    return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>{});
  }

  std::vector<Box> box_list(const Composition &mu) {
    std::vector<Box> boxes;
    boxes.reserve(mu.size());
    for (int c = 1; c <= mu.max_part(); ++c)
      for (int r = 1; r <= mu.rank(); ++r)
        if (mu.part(r) >= c) boxes.push_back({r, c});
    return boxes;
  }

  Permutation v_mu(const Composition &mu) {
    const int n = mu.rank();
    std::vector<int> v(n);
    for (int r = 1; r <= n; ++r) {
      int value = 1;
      for (int s = 1; s < r; ++s) value += mu.part(s) <= mu.part(r);
      for (int s = r + 1; s <= n; ++s) value += mu.part(s) < mu.part(r);
      v[r - 1] = value;
    }
    return Permutation(std::move(v));
  }

  int u_arm(const Composition &mu, Box b) {
    require_box(mu, b);
    const int mr = mu.part(b.r);
    int u        = 0;
    for (int s = 1; s < b.r; ++s) u += mu.part(s) < b.c && b.c <= mr;
    for (int s = b.r + 1; s <= mu.rank(); ++s) u += mu.part(s) < b.c - 1 && b.c - 1 < mr;
    return u;
  }

  int shift(const Composition &mu, Box b) {
    require_box(mu, b);
    return mu.part(b.r) - b.c + 1;
  }

  int height(const Composition &mu, int m, Box b) {
    const int u = u_arm(mu, b);
    if (m < 1 || m > u)
      throw InvalidEntryError("entry " + std::to_string(m) + " outside {1.." + std::to_string(u) + "} in box " + box_name(b));
    return v_mu(mu)(b.r) - m;
  }

  std::vector<Composition> all_compositions(int n, int max_part) {
    std::vector<Composition> out;
    std::vector<int> parts(n, 0);
    while (true) {
      out.emplace_back(parts);
      int i = n - 1;
      while (i >= 0 && parts[i] == max_part) parts[i--] = 0;
      if (i < 0) break;
      ++parts[i];
    }
    return out;
  }

} // namespace macsvt
