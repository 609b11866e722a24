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

#include "macsvt/periodic.hpp"

#include "macsvt/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace macsvt {

  namespace {

    std::int64_t floor_mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

  } // namespace

  PeriodicPermutation::PeriodicPermutation(std::vector<std::int64_t> window) : window_(std::move(window)) {
    const auto n = static_cast<std::int64_t>(window_.size());
    std::vector<bool> seen(window_.size(), false);
    for (auto v : window_) {
      auto r = floor_mod(v, n);
      if (seen[r]) throw std::invalid_argument("window residues are not a complete residue system");
      seen[r] = true;
    }
  }

  PeriodicPermutation PeriodicPermutation::identity(int n) {
    std::vector<std::int64_t> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return PeriodicPermutation(std::move(w));
  }

  PeriodicPermutation PeriodicPermutation::embed(const Permutation &w) {
    auto win = w.window();
    return PeriodicPermutation(std::vector<std::int64_t>(win.begin(), win.end()));
  }

  std::int64_t PeriodicPermutation::operator()(std::int64_t k) const {
    const std::int64_t n = rank();
    const std::int64_t j = floor_mod(k - 1, n) + 1;
    return window_[j - 1] + (k - j);
  }

  PeriodicPermutation PeriodicPermutation::times_s(int j) const {
    if (j < 1 || j >= rank()) throw std::invalid_argument("s_j requires 1 <= j < n");
    PeriodicPermutation p = *this;
    std::swap(p.window_[j - 1], p.window_[j]);
    return p;
  }

  PeriodicPermutation PeriodicPermutation::times_pi() const {
    PeriodicPermutation p = *this;
    std::rotate(p.window_.begin(), p.window_.begin() + 1, p.window_.end());
    p.window_.back() += rank();
    return p;
  }

  PeriodicPermutation PeriodicPermutation::times_pi_inverse() const {
    PeriodicPermutation p = *this;
    std::rotate(p.window_.rbegin(), p.window_.rbegin() + 1, p.window_.rend());
    p.window_.front() -= rank();
    return p;
  }

  Permutation PeriodicPermutation::residues() const {
    const std::int64_t n = rank();
    std::vector<int> w(window_.size());
    for (std::size_t i = 0; i < window_.size(); ++i) {
      auto r = floor_mod(window_[i], n);
      w[i]   = static_cast<int>(r == 0 ? n : r);
    }
    return Permutation(std::move(w));
  }

  AffineInversion AffineInversion::make(int i, std::int64_t k, int n) {
    AffineInversion inv;
    inv.i   = i;
    inv.k   = k;
    inv.j   = static_cast<int>(floor_mod(k - 1, n) + 1);
    inv.ell = (k - inv.j) / n;
    return inv;
  }

  PeriodicPermutation periodic_from_mu(const Composition &mu) {
    const int n       = mu.rank();
    const auto v_inv  = v_mu(mu).inverse();
    std::vector<std::int64_t> w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = v_inv(i) + static_cast<std::int64_t>(n) * mu.part(v_inv(i));
    return PeriodicPermutation(std::move(w));
  }

  std::int64_t inversion_bound(const Composition &mu) { return static_cast<std::int64_t>(mu.rank()) * (mu.max_part() + 1); }

  std::vector<AffineInversion> inversions_brute(const PeriodicPermutation &w, std::int64_t k_bound) {
    const int n = w.rank();
    auto win    = w.window();
    const auto top = *std::max_element(win.begin(), win.end());
    for (std::int64_t k = k_bound + 1; k <= k_bound + n; ++k)
      if (w(k) <= top) throw std::invalid_argument("k_bound " + std::to_string(k_bound) + " is too small to enumerate all inversions");

    std::vector<AffineInversion> out;
    for (int i = 1; i <= n; ++i)
      for (std::int64_t k = i + 1; k <= k_bound; ++k)
        if (w(i) > w(k)) out.push_back(AffineInversion::make(i, k, n));
    std::sort(out.begin(), out.end());
    return out;
  }

  AffineInversion inversion_by_box(const Composition &mu, Box b, int i) {
    const int u = u_arm(mu, b);
    if (i < 1 || i > u) throw InvalidEntryError("inversion index " + std::to_string(i) + " outside {1.." + std::to_string(u) + "}");
    const int n = mu.rank();
    return AffineInversion::make(v_mu(mu)(b.r), i + static_cast<std::int64_t>(n) * shift(mu, b), n);
  }

} // namespace macsvt
