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


#include "macsvt/error.hpp"
#include "macsvt/macdonald.hpp"
#include "macsvt/walk.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace macsvt;

namespace {

  std::vector<std::int64_t> window_of(const PeriodicPermutation &w) { return {w.window().begin(), w.window().end()}; }

  const Composition example_mu({0, 4, 5, 1, 4});

  SetValuedTableau example_tableau() {
    return SetValuedTableau::from_entries(make_diagram(example_mu), {{{2, 1}, {1}},
                                                                     {{2, 3}, {1}},
                                                                     {{2, 4}, {2}},
                                                                     {{3, 1}, {1}},
                                                                     {{3, 3}, {1, 2}},
                                                                     {{3, 5}, {1, 3}},
                                                                     {{5, 3}, {1, 2}}});
  }

  AlcoveWalk example_walk() {
    const auto subset = tableau_to_subset(example_tableau());
    return walk_from_subset(Permutation::identity(5), example_mu, subset);
  }

  bool same_term(const TermRecord &a, const WalkTerm &b) {
    auto fa = a.factors, fb = b.factors;
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    return a.x == b.x && a.x_word == b.x_word && a.maj == b.maj && a.cov == b.cov && fa == fb && a.coefficient == b.coefficient;
  }

} // namespace

TEST(Walk, OpeningSteps) {
  const auto walk = example_walk();
  ASSERT_EQ(walk.word.size(), 37u);
  ASSERT_EQ(walk.steps.size(), 38u);
  const auto z  = PeriodicPermutation::identity(5);
  const auto pi = z.times_pi();
  EXPECT_EQ(walk.steps[0], z);
  EXPECT_EQ(walk.steps[1], z);
  EXPECT_EQ(walk.steps[2], pi);
  EXPECT_EQ(walk.steps[3], pi);
  EXPECT_EQ(walk.steps[4], pi.times_pi());
  EXPECT_EQ(walk.steps[5], pi.times_pi().times_s(1));
  EXPECT_EQ(walk.steps[6], pi.times_pi().times_s(1).times_pi());
  EXPECT_EQ(walk.crossed_letters().size(), 10u);
  EXPECT_EQ(walk.crossed_letters().front(), 1u);
}

TEST(Walk, BoxBoundaryWindows) {
  const auto walk = example_walk();
  const std::vector<std::vector<std::int64_t>> expected{
      {2, 3, 4, 5, 6},    {3, 4, 5, 6, 7},     {3, 5, 6, 7, 9},     {3, 6, 7, 9, 10},    {3, 7, 9, 10, 11},
      {3, 9, 10, 11, 12}, {3, 9, 11, 12, 15},  {11, 9, 12, 15, 8},  {9, 12, 15, 8, 16},  {12, 15, 8, 16, 14},
      {12, 8, 16, 14, 20}, {12, 8, 14, 20, 21}, {12, 8, 20, 21, 19}, {20, 8, 21, 19, 17}};
  std::vector<std::vector<std::int64_t>> boundaries;
  for (std::size_t k = 0; k < walk.word.size(); ++k)
    if (walk.word.letters[k].is_pi()) boundaries.push_back(window_of(walk.steps[k + 1]));
  EXPECT_EQ(boundaries, expected);
}

TEST(Walk, BoundaryResiduesAreThePermutationSequence) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 5; ++n)
    for (const auto &mu : all_compositions(n, 2)) {
      const auto d = make_diagram(mu);
      for (int rep = 0; rep < 3; ++rep) {
        const auto z    = random_permutation(n, rng);
        const auto tab  = random_tableau(d, rng);
        const auto walk = walk_from_subset(z, mu, tableau_to_subset(tab));
        ASSERT_EQ(walk.boundary_residues(), z_sequence(z, tab).per_box);
      }
    }
}

TEST(Walk, SubsetRoundTrip) {
  std::mt19937_64 rng(2);
  const auto d = make_diagram(example_mu);
  for (int i = 0; i < 1000; ++i) {
    const auto tab    = random_tableau(d, rng);
    const auto subset = tableau_to_subset(tab);
    ASSERT_EQ(subset.size(), static_cast<std::size_t>(tab.size()));
    ASSERT_EQ(subset_to_tableau(d, subset), tab);
    ASSERT_EQ(walk_from_subset(Permutation::identity(5), example_mu, subset).crossed_letters(), subset);
  }
}

TEST(Walk, RejectsBadSubsets) {
  const auto d = make_diagram(example_mu);
  const std::size_t pi_letter[] = {2};
  const std::size_t too_big[]   = {38};
  const std::size_t zero[]      = {0};
  EXPECT_THROW((void)walk_from_subset(Permutation::identity(5), example_mu, pi_letter), InvalidSubsetError);
  EXPECT_THROW((void)walk_from_subset(Permutation::identity(5), example_mu, too_big), InvalidSubsetError);
  EXPECT_THROW((void)walk_from_subset(Permutation::identity(5), example_mu, zero), InvalidSubsetError);
  EXPECT_THROW((void)subset_to_tableau(d, pi_letter), InvalidSubsetError);
  EXPECT_THROW((void)walk_from_subset(Permutation::identity(4), example_mu, {}), RankMismatchError);
}

TEST(Walk, FoldsOfExample) {
  const auto walk = example_walk();
  const auto fs   = folds(walk);
  ASSERT_EQ(fs.size(), 10u);
  const Diagram d(example_mu);
  int negative = 0;
  for (const auto &f : fs) {
    const auto idx = d.index_of(f.box);
    EXPECT_EQ(f.inversion.shift(), d.shift(idx));
    EXPECT_EQ(f.inversion.height(), d.height(idx, f.m));
    EXPECT_FALSE(walk.word.letters[f.k - 1].is_pi());
    EXPECT_EQ(walk.word.letters[f.k - 1].index, f.m);
    negative += f.sign == FoldSign::negative;
  }
  EXPECT_EQ(negative, 5);
  EXPECT_EQ(fs[0].box, (Box{2, 1}));
  EXPECT_EQ(fs[0].sign, FoldSign::positive); // (2,1) holds 1 in the less part
}

TEST(Walk, FoldSignsMatchClassification) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 5; ++n)
    for (const auto &mu : all_compositions(n, 2)) {
      const auto d = make_diagram(mu);
      for (int rep = 0; rep < 3; ++rep) {
        const auto z   = random_permutation(n, rng);
        const auto tab = random_tableau(d, rng);
        const auto cls = classify_folds(z_sequence(z, tab), tab);
        for (const auto &f : folds(walk_from_subset(z, mu, tableau_to_subset(tab)))) {
          const bool less = cls.less[d->index_of(f.box)] >> (f.m - 1) & 1;
          ASSERT_EQ(less, f.sign == FoldSign::positive);
        }
      }
    }
}

TEST(Walk, ExampleWeight) {
  const auto w = walk_weight(example_walk(), Variant::pos);
  EXPECT_EQ(w.maj, 9);
  EXPECT_EQ(w.cov, 8);
  EXPECT_EQ(w.x, XMonomial({4, 3, 1, 3, 3}));
  EXPECT_EQ(w.factors.size(), 10u);
}

TEST(Walk, WeightEqualsTableauTerm) {
  for (int n = 1; n <= 4; ++n)
    for (const auto &mu : all_compositions(n, 2)) {
      const auto d = make_diagram(mu);
      for (const auto &z : all_permutations(n))
        TableauEnumerator(d).for_each([&](const SetValuedTableau &tab) {
          const auto walk = walk_from_subset(z, mu, tableau_to_subset(tab));
          for (auto variant : {Variant::pos, Variant::neg}) ASSERT_TRUE(same_term(tableau_term(z, tab, variant), walk_weight(walk, variant)));
        });
    }
}
