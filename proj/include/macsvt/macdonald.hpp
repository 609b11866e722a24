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
 * @brief Relative Macdonald polynomials E^z_mu as tableau sums, symmetric P_lambda, specializations
 * and the identity checks between the two tableau expansions and the walk computation.
 */

#pragma once

#include "macsvt/composition.hpp"
#include "macsvt/factored_rational.hpp"
#include "macsvt/permutation.hpp"
#include "macsvt/tableau.hpp"
#include "macsvt/variant.hpp"
#include "macsvt/x_polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace macsvt {

  enum class Engine { tableaux, walks };

  inline constexpr std::uint64_t default_term_budget = std::uint64_t{1} << 20;
  inline constexpr std::uint64_t default_rng_seed    = 20260101;

  struct MacdonaldQuery {
    Permutation z;
    Composition mu{std::vector<int>{0}};
    Variant variant = Variant::pos;
    Engine engine   = Engine::tableaux;
  };

  struct TermRecord {
    SetValuedTableau tableau;
    XMonomial x;
    /// z_b(n) for each box in box order.
    std::vector<int> x_word;
    int maj = 0;
    int cov = 0;
    /// (shift, height) per entry, in box order and increasing entry within a box.
    std::vector<std::pair<int, int>> factors;
    FactoredRational coefficient;
  };

  /// The term of T computed from the tableau statistics.
  [[nodiscard]] TermRecord tableau_term(const Permutation &z, const SetValuedTableau &t, Variant variant);
  /// The term of T computed through the corresponding alcove walk.
  [[nodiscard]] TermRecord walk_term(const Permutation &z, const SetValuedTableau &t, Variant variant);

  struct ComputeOptions {
    std::uint64_t max_terms = default_term_budget;
    bool keep_terms         = false;
  };

  struct EResult {
    XPolynomial polynomial;
    /// Filled when ComputeOptions::keep_terms is set, in enumeration order.
    std::vector<TermRecord> terms;
  };

  /// Throws BudgetExceededError if the tableau count exceeds the budget, RankMismatchError on rank mismatch.
  [[nodiscard]] EResult compute_E(const MacdonaldQuery &query, const ComputeOptions &options = {});

  /// Sum of E^z_lambda over all z in S_n.  The budget applies to the total term count n! * 2^N.
  [[nodiscard]] XPolynomial symmetrized_sum(const Composition &lambda, std::uint64_t max_terms = default_term_budget);

  /**
   * @brief P_lambda: the symmetrized sum divided by its coefficient at x^lambda.
   *
   * Throws std::invalid_argument unless lambda is a partition; InternalConsistencyError if the sum is
   * not symmetric or vanishes at x^lambda.
   */
  [[nodiscard]] XPolynomial compute_P(const Composition &lambda, std::uint64_t max_terms = default_term_budget);

  /// Applies the substitution to every coefficient and drops zeros.
  [[nodiscard]] XPolynomial specialize(const XPolynomial &p, const Substitution &s);

  /// Value at a rational point.
  [[nodiscard]] RationalXPolynomial evaluate_at(const XPolynomial &p, const BigRational &q, const BigRational &t);

  struct VerifyOptions {
    /// Check this many random tableaux instead of all of them.
    std::optional<std::uint64_t> samples;
    std::uint64_t seed      = default_rng_seed;
    std::uint64_t max_terms = default_term_budget;
  };

  struct VerifyReport {
    std::uint64_t checked = 0;
    std::uint64_t failed  = 0;
    bool pos_neg          = true;
    bool walk_tableau     = true;
    bool parity           = true;
    bool fold_sign        = true;
    /// Description of the first failing tableau.
    std::optional<std::string> counterexample;

    [[nodiscard]] bool ok() const noexcept { return pos_neg && walk_tableau && parity && fold_sign; }
  };

  /**
   * @brief Per-tableau checks: positive and negative terms agree, tableau and walk terms agree,
   * the length parity holds and walk fold signs match the fold classification.
   *
   * Exhaustive unless samples is set; throws BudgetExceededError for an exhaustive run over budget.
   */
  [[nodiscard]] VerifyReport verify_identities(const Composition &mu, const Permutation &z, const VerifyOptions &options = {});

  /// A uniformly random tableau drawn from raw 64-bit generator outputs.
  template <class Rng> SetValuedTableau random_tableau(const DiagramPtr &diagram, Rng &rng) {
    std::vector<std::uint64_t> masks(diagram->box_count());
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const int u = diagram->arm(i);
      masks[i]    = u >= 64 ? rng() : rng() & ((std::uint64_t{1} << u) - 1);
    }
    return SetValuedTableau::from_masks(diagram, std::move(masks));
  }

  /// A uniformly random permutation by Fisher-Yates on raw generator outputs.
  template <class Rng> Permutation random_permutation(int n, Rng &rng) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(w[i], w[rng() % static_cast<std::uint64_t>(i + 1)]);
    return Permutation(std::move(w));
  }

} // namespace macsvt
