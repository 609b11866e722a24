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


#include "golden_blocks.hpp"
#include "oracles.hpp"

#include "macsvt/error.hpp"
#include "macsvt/format.hpp"
#include "macsvt/tableau.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <vector>

using namespace macsvt;

namespace {

  std::vector<int> window_of(const Permutation &w) { return {w.window().begin(), w.window().end()}; }

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

  std::map<Box, std::vector<int>> split(const SetValuedTableau &t, const std::vector<std::uint64_t> &masks) {
    std::map<Box, std::vector<int>> out;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (masks[i]) out[t.diagram().boxes()[i]] = mask_entries(masks[i]);
    return out;
  }

  std::vector<std::vector<int>> entry_lists(const SetValuedTableau &t) {
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < t.diagram().box_count(); ++i) out.push_back(t.entries_at(i));
    return out;
  }

} // namespace

TEST(Diagram, ArmsShiftsHeights) {
  const Diagram d(example_mu);
  EXPECT_EQ(d.box_count(), 14u);
  EXPECT_EQ(d.total_arm(), 23);
  EXPECT_EQ(d.index_of({3, 5}), 13u);
  EXPECT_EQ(d.arm(d.index_of({3, 5})), 3);
  EXPECT_EQ(d.shift(d.index_of({3, 1})), 5);
  EXPECT_EQ(d.height(d.index_of({3, 5}), 3), 2);
  EXPECT_THROW((void)d.index_of({1, 1}), InvalidBoxError);
  EXPECT_THROW((void)d.height(0, 2), InvalidEntryError);
}

TEST(SetValuedTableau, Construction) {
  const auto d = make_diagram(example_mu);
  const auto t = example_tableau();
  EXPECT_EQ(t.size(), 10);
  EXPECT_EQ(t.entries({3, 5}), (std::vector<int>{1, 3}));
  EXPECT_EQ(t.entries({4, 1}), std::vector<int>{});
  EXPECT_EQ(to_text(t), "{(2,1):{1} (3,1):{1} (2,3):{1} (3,3):{1,2} (5,3):{1,2} (2,4):{2} (3,5):{1,3}}");
  EXPECT_THROW(SetValuedTableau::from_entries(d, {{{2, 1}, {2}}}), InvalidEntryError);
  EXPECT_THROW(SetValuedTableau::from_entries(d, {{{1, 1}, {1}}}), InvalidBoxError);
  EXPECT_THROW(SetValuedTableau::from_masks(d, std::vector<std::uint64_t>(14, 2)), InvalidEntryError);
  EXPECT_EQ(SetValuedTableau::from_masks(d, {t.masks().begin(), t.masks().end()}), t);
}

TEST(TableauEnumerator, CountsAndOrder) {
  const auto d = make_diagram(Composition({2, 2, 1, 1, 0, 0}));
  TableauEnumerator e(d);
  EXPECT_EQ(e.count(), 16u);
  EXPECT_EQ(e.at(0).size(), 0);
  EXPECT_EQ(e.at(15).size(), 4);
  // last box in the lowest bits
  EXPECT_EQ(e.at(1).entries({2, 2}), std::vector<int>{1});
  EXPECT_EQ(e.at(4).entries({1, 2}), std::vector<int>{1});
  std::uint64_t seen = 0;
  e.for_each([&](const SetValuedTableau &t) { EXPECT_EQ(t, e.at(seen++)); });
  EXPECT_EQ(seen, 16u);
  EXPECT_EQ(TableauEnumerator(make_diagram(example_mu)).count(), std::uint64_t{1} << 23);
  EXPECT_EQ(enumerate_tableaux(Composition({1, 0})).size(), 1u);
  EXPECT_EQ(enumerate_tableaux(Composition({0, 1})).size(), 2u);
}

TEST(CycleSigma, BlockProduct) {
  const int subset[] = {3, 4, 8, 10};
  const auto sigma   = cycle_sigma(11, subset, 14);
  EXPECT_EQ(window_of(sigma), (std::vector<int>{3, 1, 2, 4, 8, 5, 6, 7, 10, 9, 12, 11, 13, 14}));
  Permutation gamma_inv(std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 1});
  EXPECT_EQ(window_of(sigma * gamma_inv), (std::vector<int>{1, 2, 4, 8, 5, 6, 7, 10, 9, 12, 11, 13, 14, 3}));
  EXPECT_EQ(window_of(cycle_sigma(0, {}, 3)), (std::vector<int>{1, 2, 3}));
  const int bad[] = {4, 3};
  EXPECT_THROW((void)cycle_sigma(5, bad, 6), InvalidEntryError);
  const int out_of_range[] = {6};
  EXPECT_THROW((void)cycle_sigma(5, out_of_range, 7), InvalidEntryError);
  EXPECT_THROW((void)cycle_sigma(6, {}, 6), InvalidEntryError);
}

TEST(WorkedTableau, PermutationSequence) {
  const auto t   = example_tableau();
  const auto seq = z_sequence(Permutation::identity(5), t);
  const std::vector<std::vector<int>> expected{
      {2, 3, 4, 5, 1}, {3, 4, 5, 1, 2}, {3, 5, 1, 2, 4}, {3, 1, 2, 4, 5}, // column 1
      {3, 2, 4, 5, 1}, {3, 4, 5, 1, 2}, {3, 4, 1, 2, 5},                  // column 2
      {1, 4, 2, 5, 3}, {4, 2, 5, 3, 1}, {2, 5, 3, 1, 4},                  // column 3
      {2, 3, 1, 4, 5}, {2, 3, 4, 5, 1}, {2, 3, 5, 1, 4},                  // column 4 ((3,4) from the periodic windows)
      {5, 3, 1, 4, 2}};                                                    // column 5
  ASSERT_EQ(seq.per_box.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(window_of(seq.per_box[i]), expected[i]) << i;
  EXPECT_EQ(window_of(seq.final), (std::vector<int>{5, 3, 1, 4, 2}));
  EXPECT_EQ(x_weight(seq), XMonomial({4, 3, 1, 3, 3}));
  EXPECT_EQ(x_word(seq), (std::vector<int>{1, 2, 4, 5, 1, 2, 5, 3, 1, 4, 5, 1, 4, 2}));
  EXPECT_THROW((void)z_sequence(Permutation::identity(4), t), RankMismatchError);
}

TEST(WorkedTableau, FoldClassification) {
  const auto t     = example_tableau();
  const auto folds = classify_folds(z_sequence(Permutation::identity(5), t), t);
  const std::map<Box, std::vector<int>> less{{{2, 1}, {1}}, {{3, 1}, {1}}, {{3, 3}, {1}}, {{3, 5}, {1}}, {{5, 3}, {2}}};
  const std::map<Box, std::vector<int>> greater{{{2, 3}, {1}}, {{2, 4}, {2}}, {{3, 3}, {2}}, {{3, 5}, {3}}, {{5, 3}, {1}}};
  EXPECT_EQ(split(t, folds.less), less);
  EXPECT_EQ(split(t, folds.greater), greater);
}

TEST(WorkedTableau, Statistics) {
  const auto st = statistics(Permutation::identity(5), example_tableau());
  EXPECT_EQ(st.size, 10);
  EXPECT_EQ(st.length_final, 7);
  EXPECT_EQ(st.length_initial_key, 3);
  EXPECT_EQ(st.half_term, -3);
  EXPECT_EQ(st.maj_gt, 9);
  EXPECT_EQ(st.cov_gt, 8);
  EXPECT_EQ(maj_gt(Permutation::identity(5), example_tableau()), 9);
}

TEST(Golden, BlocksOfTwoTwoOneOne) {
  const Composition mu({2, 2, 1, 1, 0, 0});
  const auto d = make_diagram(mu);
  auto blocks = golden::blocks;
  blocks[7].z[5] = {1, 6, 3, 4, 5, 2}; // transcription slip: the listed window repeats block 12
  for (const auto &block : blocks) {
    const auto t   = SetValuedTableau::from_entries(d, {{{1, 2}, block.t12}, {{2, 2}, block.t22}});
    const auto seq = z_sequence(Permutation::identity(6), t);
    for (std::size_t i = 0; i < block.z.size(); ++i) EXPECT_EQ(window_of(seq.per_box[i]), block.z[i]) << to_text(t);
  }
}

TEST(Statistics, AgreeWithOracle) {
  std::mt19937_64 rng(5);
  const oracle::Rational q(3, 7), t(-2, 5);
  for (int n = 1; n <= 4; ++n)
    for (const auto &mu : all_compositions(n, 2)) {
      const auto d = make_diagram(mu);
      std::vector<int> parts(mu.parts().begin(), mu.parts().end());
      for (const auto &z : all_permutations(n)) {
        TableauEnumerator e(d);
        for (std::uint64_t i = 0; i < e.count(); i += 1 + rng() % 3) {
          const auto tab = e.at(i);
          const auto st  = statistics(z, tab);
          const auto ref = oracle::term(window_of(z), parts, entry_lists(tab), q, t);
          ASSERT_EQ(x_weight(st.sequence), XMonomial(ref.x));
          ASSERT_EQ(st.maj_gt, ref.maj);
          ASSERT_EQ(st.cov_gt, ref.cov);
        }
      }
    }
}

TEST(Statistics, ParityAndDegree) {
  for (int n = 1; n <= 4; ++n)
    for (const auto &mu : all_compositions(n, 2)) {
      const auto d = make_diagram(mu);
      const auto v_inv = v_mu(mu).inverse();
      for (const auto &z : all_permutations(n))
        TableauEnumerator(d).for_each([&](const SetValuedTableau &tab) {
          const auto st = statistics(z, tab);
          ASSERT_EQ((st.length_final - length(z * v_inv) - tab.size()) % 2, 0);
          ASSERT_EQ(x_weight(st.sequence).degree(), mu.size());
          ASSERT_EQ(st.folds.less.size(), d->box_count());
          for (std::size_t i = 0; i < d->box_count(); ++i) {
            ASSERT_EQ(st.folds.less[i] & st.folds.greater[i], 0u);
            ASSERT_EQ(st.folds.less[i] | st.folds.greater[i], tab.mask(i));
          }
        });
    }
}

TEST(Statistics, EmptyTableauAtIdentityHasWeightXMu) {
  for (int n = 1; n <= 5; ++n)
    for (const auto &mu : all_compositions(n, 3)) {
      const SetValuedTableau empty(make_diagram(mu));
      const auto st = statistics(Permutation::identity(n), empty);
      ASSERT_EQ(x_weight(st.sequence), XMonomial({mu.parts().begin(), mu.parts().end()}));
      ASSERT_EQ(st.maj_gt, 0);
      ASSERT_EQ(st.cov_gt, 0);
    }
}
