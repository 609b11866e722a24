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

#include "macsvt/tableau.hpp"

#include "macsvt/error.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace macsvt {

  namespace {

    std::string box_label(Box b) { return "(" + std::to_string(b.r) + "," + std::to_string(b.c) + ")"; }

    std::uint64_t arm_mask(int arm) { return arm >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << arm) - 1; }

    /// gamma_n^{-1}, one-line (2, 3, .., n, 1).
    Permutation gamma_inverse(int n) {
      std::vector<int> w(n);
      for (int i = 0; i < n; ++i) w[i] = i + 2;
      if (n > 0) w[n - 1] = 1;
      return Permutation(std::move(w));
    }

  } // namespace

  Diagram::Diagram(Composition mu) : mu_(std::move(mu)), boxes_(box_list(mu_)), v_(v_mu(mu_)) {
    for (const Box &b : boxes_) {
      const int u = u_arm(mu_, b);
      // Heights v_mu(r) - m must stay positive for every admissible entry m <= u.
      if (u >= v_(b.r)) throw InternalConsistencyError("arm " + std::to_string(u) + " reaches v_mu(r) in box " + box_label(b));
      arms_.push_back(u);
      shifts_.push_back(macsvt::shift(mu_, b));
      total_arm_ += u;
    }
  }

  int Diagram::height(std::size_t index, int m) const {
    const int u = arm(index);
    if (m < 1 || m > u)
      throw InvalidEntryError("entry " + std::to_string(m) + " outside {1.." + std::to_string(u) + "} in box " + box_label(boxes_[index]));
    return v_(boxes_[index].r) - m;
  }

  std::size_t Diagram::index_of(Box b) const {
    for (std::size_t i = 0; i < boxes_.size(); ++i)
      if (boxes_[i] == b) return i;
    throw InvalidBoxError("box " + box_label(b) + " is not in the shape");
  }

  SetValuedTableau::SetValuedTableau(DiagramPtr diagram) : diagram_(std::move(diagram)) {
    if (!diagram_) throw std::invalid_argument("null diagram");
    masks_.assign(diagram_->box_count(), 0);
  }

  SetValuedTableau SetValuedTableau::from_masks(DiagramPtr diagram, std::vector<std::uint64_t> masks) {
    SetValuedTableau t(std::move(diagram));
    if (masks.size() != t.masks_.size()) throw InvalidBoxError("expected one mask per box");
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (masks[i] & ~arm_mask(t.diagram().arm(i)))
        throw InvalidEntryError("entry above the arm bound in box " + box_label(t.diagram().boxes()[i]));
    t.masks_ = std::move(masks);
    return t;
  }

  SetValuedTableau SetValuedTableau::from_entries(DiagramPtr diagram, const std::map<Box, std::vector<int>> &entries) {
    SetValuedTableau t(std::move(diagram));
    for (const auto &[b, values] : entries) {
      const std::size_t index = t.diagram().index_of(b);
      const int u             = t.diagram().arm(index);
      for (int m : values) {
        if (m < 1 || m > u)
          throw InvalidEntryError("entry " + std::to_string(m) + " outside {1.." + std::to_string(u) + "} in box " + box_label(b));
        t.masks_[index] |= std::uint64_t{1} << (m - 1);
      }
    }
    return t;
  }

  std::vector<int> mask_entries(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
      out.push_back(std::countr_zero(mask) + 1);
      mask &= mask - 1;
    }
    return out;
  }

  std::vector<int> SetValuedTableau::entries(Box b) const { return mask_entries(masks_[diagram_->index_of(b)]); }

  std::vector<int> SetValuedTableau::entries_at(std::size_t index) const { return mask_entries(masks_.at(index)); }

  int SetValuedTableau::size() const noexcept {
    int s = 0;
    for (auto m : masks_) s += std::popcount(m);
    return s;
  }

  TableauEnumerator::TableauEnumerator(DiagramPtr diagram) : diagram_(std::move(diagram)) {}

  std::uint64_t TableauEnumerator::count() const {
    if (log2_count() >= 64) throw std::overflow_error("tableau count 2^" + std::to_string(log2_count()) + " does not fit in 64 bits");
    return std::uint64_t{1} << log2_count();
  }

  SetValuedTableau TableauEnumerator::at(std::uint64_t index) const {
    if (index >= count()) throw std::out_of_range("tableau index out of range");
    std::vector<std::uint64_t> masks(diagram_->box_count());
    for (std::size_t i = masks.size(); i-- > 0;) {
      const int u = diagram_->arm(i);
      masks[i]    = index & arm_mask(u);
      index >>= u;
    }
    return SetValuedTableau::from_masks(diagram_, std::move(masks));
  }

  void TableauEnumerator::for_each(const std::function<void(const SetValuedTableau &)> &fn) const {
    const std::uint64_t n = count();
    for (std::uint64_t i = 0; i < n; ++i) fn(at(i));
  }

  std::vector<SetValuedTableau> enumerate_tableaux(const Composition &mu) {
    std::vector<SetValuedTableau> out;
    TableauEnumerator(make_diagram(mu)).for_each([&](const SetValuedTableau &t) { out.push_back(t); });
    return out;
  }

  Permutation cycle_sigma(int u, std::span<const int> subset, int n) {
    if (u < 0 || u > n - 1) throw InvalidEntryError("arm " + std::to_string(u) + " out of range for rank " + std::to_string(n));
    std::vector<int> blocks;
    int prev = 0;
    for (int m : subset) {
      if (m <= prev || m > u) throw InvalidEntryError("subset must be increasing inside {1.." + std::to_string(u) + "}");
      blocks.push_back(m - prev);
      prev = m;
    }
    blocks.push_back(u + 1 - prev);
    blocks.resize(blocks.size() + (n - u - 1), 1);
    return cycle_product(blocks);
  }

  PermutationSequence z_sequence(const Permutation &z, const SetValuedTableau &t) {
    const Diagram &d = t.diagram();
    const int n      = d.rank();
    if (z.rank() != n) throw RankMismatchError("permutation rank " + std::to_string(z.rank()) + " does not match shape rank " + std::to_string(n));
    const Permutation ginv = gamma_inverse(n);
    PermutationSequence seq{z, {}, z};
    seq.per_box.reserve(d.box_count());
    Permutation current = z;
    for (std::size_t i = 0; i < d.box_count(); ++i) {
      const auto entries = t.entries_at(i);
      current            = current * cycle_sigma(d.arm(i), entries, n) * ginv;
      seq.per_box.push_back(current);
    }
    seq.final = current;
    return seq;
  }

  std::vector<int> x_word(const PermutationSequence &seq) {
    std::vector<int> word;
    word.reserve(seq.per_box.size());
    const int n = seq.initial.rank();
    for (const auto &zb : seq.per_box) word.push_back(zb(n));
    return word;
  }

  XMonomial x_weight(const PermutationSequence &seq) {
    XMonomial m = XMonomial::one(seq.initial.rank());
    for (int i : x_word(seq)) m.multiply_by(i);
    return m;
  }

  FoldClassification classify_folds(const PermutationSequence &seq, const SetValuedTableau &t) {
    const std::size_t boxes = t.diagram().box_count();
    if (seq.per_box.size() != boxes) throw RankMismatchError("permutation sequence does not match the tableau");
    FoldClassification out{std::vector<std::uint64_t>(boxes, 0), std::vector<std::uint64_t>(boxes, 0)};
    const int n = t.diagram().rank();
    for (std::size_t i = 0; i < boxes; ++i) {
      const Permutation &zb = seq.per_box[i];
      int prev              = n;
      for (int m : t.entries_at(i)) {
        auto &target = zb(prev) < zb(m) ? out.less : out.greater;
        target[i] |= std::uint64_t{1} << (m - 1);
        prev = m;
      }
    }
    return out;
  }

  TableauStatistics statistics(const Permutation &z, const SetValuedTableau &t) {
    const Diagram &d = t.diagram();
    TableauStatistics s;
    s.sequence           = z_sequence(z, t);
    s.folds              = classify_folds(s.sequence, t);
    s.size               = t.size();
    s.length_final       = length(s.sequence.final);
    s.length_initial_key = length(z * d.v().inverse());
    const int twice_half = s.length_final - s.length_initial_key - s.size;
    if (twice_half % 2 != 0)
      throw InternalConsistencyError("length difference " + std::to_string(s.length_final - s.length_initial_key) + " and |T| = " +
                                     std::to_string(s.size) + " have different parity");
    s.half_term = twice_half / 2;
    int ht_gt = 0, ht_lt = 0;
    for (std::size_t i = 0; i < d.box_count(); ++i) {
      for (int m : mask_entries(s.folds.greater[i])) {
        s.maj_gt += d.shift(i);
        ht_gt += d.height(i, m);
      }
      for (int m : mask_entries(s.folds.less[i])) {
        s.maj_lt += d.shift(i);
        ht_lt += d.height(i, m);
      }
    }
    s.cov_gt = ht_gt + s.half_term;
    s.cov_lt = ht_lt - (s.length_final - s.length_initial_key + s.size) / 2;
    return s;
  }

} // namespace macsvt
