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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace macsvt {

  /// Base class of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// A box (r,c) that does not belong to the shape it is used with.
  class InvalidBoxError : public Error {
   public:
    using Error::Error;
  };

  /// A tableau entry or inversion index outside {1, .., u_arm}.
  class InvalidEntryError : public Error {
   public:
    using Error::Error;
  };

  /// A fold subset that references a letter that cannot be crossed out.
  class InvalidSubsetError : public Error {
   public:
    using Error::Error;
  };

  class RankMismatchError : public Error {
   public:
    using Error::Error;
  };

  /// A substitution sends a denominator factor to zero (or the value has a pole at the limit point).
  class ZeroDenominatorError : public Error {
   public:
    using Error::Error;
  };

  /// Raised when an identity that must hold by construction fails; always indicates a bug.
  class InternalConsistencyError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  /// The number of tableaux 2^log2_count is larger than the configured term budget.
  class BudgetExceededError : public Error {
   public:
    BudgetExceededError(int log2_count, std::uint64_t budget)
       : Error("2^" + std::to_string(log2_count) + " terms exceeds budget of " + std::to_string(budget)),
         log2_count_(log2_count),
         budget_(budget) {}

    [[nodiscard]] int log2_count() const noexcept { return log2_count_; }
    [[nodiscard]] std::uint64_t budget() const noexcept { return budget_; }

   private:
    int log2_count_;
    std::uint64_t budget_;
  };

} // namespace macsvt
