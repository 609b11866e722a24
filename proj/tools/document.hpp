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
 * @brief JSON documents written by the command-line tool.
 *
 * Coefficients are {"num": [[qexp, texp, coeff], ..], "den": [[a, b, mult], ..]} with the
 * denominator meaning prod (1 - q^a t^b)^mult; integer coefficients are JSON numbers when they fit
 * in 64 bits and decimal strings otherwise.  Values at a rational point are {"rational": "p/q"}.
 * Tableaux are objects keyed "r,c" listing every box.  Objects have sorted keys, so the same
 * document always serializes to the same bytes.
 */

#pragma once

#include "macsvt/factored_rational.hpp"
#include "macsvt/macdonald.hpp"
#include "macsvt/walk.hpp"
#include "macsvt/x_polynomial.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace macsvt::cli {

  using json = nlohmann::json;

  inline constexpr const char *document_schema = "macsvt.document/1";
  inline constexpr const char *walk_schema     = "macsvt.walk/1";

  struct DocumentMetadata {
    std::string command;
    std::vector<int> mu;
    std::optional<std::vector<int>> z;
    std::optional<std::string> variant;
    std::optional<std::string> engine;
    std::optional<std::string> at;
    std::string version;

    friend bool operator==(const DocumentMetadata &, const DocumentMetadata &) = default;
  };

  struct DocumentTerm {
    std::map<std::string, std::vector<int>> tableau;
    std::vector<int> x;
    std::vector<int> x_word;
    int maj = 0;
    int cov = 0;
    std::vector<std::array<int, 2>> factors;
    FactoredRational coefficient;

    friend bool operator==(const DocumentTerm &, const DocumentTerm &) = default;
  };

  struct DocumentPolyTerm {
    std::vector<int> x;
    std::variant<FactoredRational, BigRational> coefficient;

    friend bool operator==(const DocumentPolyTerm &, const DocumentPolyTerm &) = default;
  };

  struct OutputDocument {
    std::string schema = document_schema;
    DocumentMetadata metadata;
    std::vector<DocumentTerm> terms;
    std::vector<DocumentPolyTerm> polynomial;

    friend bool operator==(const OutputDocument &, const OutputDocument &) = default;
  };

  [[nodiscard]] json coefficient_to_json(const FactoredRational &r);
  /// Throws ParseError on malformed input.
  [[nodiscard]] FactoredRational coefficient_from_json(const json &j);

  [[nodiscard]] json tableau_to_json(const SetValuedTableau &t);
  [[nodiscard]] DocumentTerm make_term(const TermRecord &rec);
  /// Terms in decreasing order of exponent vector.
  [[nodiscard]] std::vector<DocumentPolyTerm> make_polynomial(const XPolynomial &p);
  [[nodiscard]] std::vector<DocumentPolyTerm> make_polynomial(const RationalXPolynomial &p);

  void to_json(json &j, const OutputDocument &doc);
  /// Throws ParseError on a malformed document.
  void from_json(const json &j, OutputDocument &doc);

  /// Serialized form: two-space indentation and a trailing newline.
  [[nodiscard]] std::string dump_document(const OutputDocument &doc);
  [[nodiscard]] OutputDocument parse_document(const std::string &text);

  /// Every step window, residue window and fold of a walk.
  [[nodiscard]] json walk_trace(const Permutation &z, const Composition &mu, const AlcoveWalk &walk);

} // namespace macsvt::cli
