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


// Reference implementations used only by the tests.  They work on plain vectors straight from the
// definitions and share no code with the library.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

  using Rational = boost::multiprecision::cpp_rational;
  using Perm     = std::vector<int>; // one-line, 1-based values

  inline Perm compose(const Perm &f, const Perm &g) {
    Perm h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i] - 1];
    return h;
  }

  inline Perm invert(const Perm &w) {
    Perm r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[w[i] - 1] = static_cast<int>(i) + 1;
    return r;
  }

  inline int inversions(const Perm &w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
    return c;
  }

  inline Perm identity(int n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 1);
    return w;
  }

  /// Shortest w such that r -> w(r) sends mu to its weakly increasing rearrangement, by search.
  inline Perm v_mu_brute(const std::vector<int> &mu) {
    const int n = static_cast<int>(mu.size());
    std::vector<int> sorted = mu;
    std::sort(sorted.begin(), sorted.end());
    Perm w = identity(n), best;
    int best_len = -1;
    do {
      bool ok = true;
      for (int r = 0; r < n && ok; ++r) ok = sorted[w[r] - 1] == mu[r];
      if (ok && (best_len < 0 || inversions(w) < best_len)) {
        best     = w;
        best_len = inversions(w);
      }
    } while (std::next_permutation(w.begin(), w.end()));
    return best;
  }

  inline int arm(const std::vector<int> &mu, int r, int c) {
    const int n = static_cast<int>(mu.size());
    int u       = 0;
    for (int s = 1; s < r; ++s) u += mu[s - 1] < c && c <= mu[r - 1];
    for (int s = r + 1; s <= n; ++s) u += mu[s - 1] < c - 1 && c - 1 < mu[r - 1];
    return u;
  }

  /// Boxes (r, c) sorted by r + n*c.
  inline std::vector<std::pair<int, int>> boxes(const std::vector<int> &mu) {
    const int n = static_cast<int>(mu.size());
    std::vector<std::pair<int, int>> b;
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= mu[r - 1]; ++c) b.emplace_back(r, c);
    std::sort(b.begin(), b.end(), [n](auto x, auto y) { return x.first + n * x.second < y.first + n * y.second; });
    return b;
  }

  inline Rational power(const Rational &x, int e) {
    Rational r = 1;
    const Rational base = e < 0 ? Rational(1) / x : x;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
    return r;
  }

  struct Term {
    std::vector<int> x; // exponent vector
    Rational pos;       // positive-power weight at (q, t)
    Rational neg;       // negative-power weight at (q, t)
    int maj = 0;
    int cov = 0;
  };

  /// Weight of the tableau with entry lists `entries` (box order) for key z, evaluated at (q, t).
  inline Term term(const Perm &z, const std::vector<int> &mu, const std::vector<std::vector<int>> &entries, const Rational &q,
                   const Rational &t) {
    const int n = static_cast<int>(mu.size());
    Perm v(n);
    for (int r = 1; r <= n; ++r) {
      int pos = 1;
      for (int s = 1; s <= n; ++s) pos += (s < r && mu[s - 1] <= mu[r - 1]) || (s > r && mu[s - 1] < mu[r - 1]);
      v[r - 1] = pos;
    }
    Perm gamma_inv(n);
    for (int i = 1; i <= n; ++i) gamma_inv[i - 1] = i % n + 1;
    const auto bs = boxes(mu);
    Term out;
    out.x.assign(n, 0);
    Perm cur = z;
    int size = 0, maj_gt = 0, ht_gt = 0, maj_lt = 0, ht_lt = 0;
    Rational pos_prod = 1, neg_prod = 1;
    for (std::size_t b = 0; b < bs.size(); ++b) {
      const auto [r, c] = bs[b];
      const int u       = arm(mu, r, c);
      Perm sigma;
      int prev = 0;
      auto push_cycle = [&sigma](int k) {
        const int off = static_cast<int>(sigma.size());
        sigma.push_back(off + k);
        for (int i = 1; i < k; ++i) sigma.push_back(off + i);
      };
      for (int m : entries[b]) {
        push_cycle(m - prev);
        prev = m;
      }
      push_cycle(u + 1 - prev);
      while (static_cast<int>(sigma.size()) < n) push_cycle(1);
      cur = compose(compose(cur, sigma), gamma_inv);
      ++out.x[cur[n - 1] - 1];
      int before = n;
      for (int m : entries[b]) {
        const int sh = mu[r - 1] - c + 1, ht = v[r - 1] - m;
        ++size;
        pos_prod *= (1 - t) / (1 - power(q, sh) * power(t, ht));
        neg_prod *= (1 - power(t, -1)) / (1 - power(q, -sh) * power(t, -ht));
        if (cur[before - 1] < cur[m - 1]) {
          maj_lt += sh;
          ht_lt += ht;
        } else {
          maj_gt += sh;
          ht_gt += ht;
        }
        before = m;
      }
    }
    const int l_fin = inversions(cur), l_init = inversions(compose(z, invert(v)));
    const int twice_h = l_fin - l_init - size;
    out.maj           = maj_gt;
    out.cov           = ht_gt + twice_h / 2;
    const int cov_lt  = ht_lt - (l_fin - l_init + size) / 2;
    out.pos           = power(q, out.maj) * power(t, out.cov) * pos_prod;
    out.neg           = power(q, -maj_lt) * power(t, -cov_lt) * neg_prod;
    return out;
  }

  /// Every choice of subsets of {1..arm} per box, in box order.
  inline std::vector<std::vector<std::vector<int>>> all_entries(const std::vector<int> &mu) {
    std::vector<std::vector<std::vector<int>>> out{{}};
    for (auto [r, c] : boxes(mu)) {
      const int u = arm(mu, r, c);
      std::vector<std::vector<std::vector<int>>> next;
      for (const auto &prefix : out)
        for (int mask = 0; mask < (1 << u); ++mask) {
          auto e = prefix;
          e.emplace_back();
          for (int m = 1; m <= u; ++m)
            if (mask >> (m - 1) & 1) e.back().push_back(m);
          next.push_back(std::move(e));
        }
      out = std::move(next);
    }
    return out;
  }

  /// E^z_mu evaluated at (q, t), as exponent vector -> value.
  inline std::map<std::vector<int>, Rational> evaluate_E(const Perm &z, const std::vector<int> &mu, const Rational &q,
                                                         const Rational &t) {
    std::map<std::vector<int>, Rational> out;
    for (const auto &e : all_entries(mu)) {
      auto tm = term(z, mu, e, q, t);
      out[tm.x] += tm.pos;
    }
    std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
    return out;
  }

  /// Schur polynomial s_lambda(x_1..x_n) by semistandard tableaux.
  inline std::map<std::vector<int>, long> schur(const std::vector<int> &lambda, int n) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(lambda.size()); ++r)
      for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
    std::map<std::pair<int, int>, int> fill;
    std::map<std::vector<int>, long> out;
    auto rec = [&](auto &&self, std::size_t k) -> void {
      if (k == cells.size()) {
        std::vector<int> x(n, 0);
        for (auto &[cell, val] : fill) ++x[val - 1];
        ++out[x];
        return;
      }
      const auto [r, c] = cells[k];
      int lo            = 1;
      if (c > 0) lo = std::max(lo, fill[{r, c - 1}]);
      if (r > 0) lo = std::max(lo, fill[{r - 1, c}] + 1);
      for (int val = lo; val <= n; ++val) {
        fill[{r, c}] = val;
        self(self, k + 1);
      }
      fill.erase({r, c});
    };
    rec(rec, 0);
    return out;
  }

  /// Inversions (i, k) of the periodic permutation with window w: 1 <= i <= n, i < k, w(i) > w(k).
  inline std::vector<std::pair<int, std::int64_t>> periodic_inversions(const std::vector<std::int64_t> &w) {
    const auto n = static_cast<std::int64_t>(w.size());
    auto value   = [&](std::int64_t k) {
      const std::int64_t j = ((k - 1) % n + n) % n;
      return w[j] + (k - 1 - j);
    };
    const std::int64_t span = *std::max_element(w.begin(), w.end()) - *std::min_element(w.begin(), w.end()) + 2 * n;
    std::vector<std::pair<int, std::int64_t>> out;
    for (int i = 1; i <= n; ++i)
      for (std::int64_t k = i + 1; k <= i + span; ++k)
        if (value(i) > value(k)) out.emplace_back(i, k);
    return out;
  }

} // namespace oracle
