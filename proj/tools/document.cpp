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

#include "document.hpp"

#include "macsvt/error.hpp"

#include <limits>
#include <utility>

namespace macsvt::cli {

  namespace {

    json integer_to_json(const BigInt &c) {
      if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) return json(static_cast<std::int64_t>(c));
      return json(c.str());
    }

    BigInt integer_from_json(const json &j) {
      if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
      if (j.is_string()) {
        try {
          return BigInt(j.get<std::string>());
        } catch (const std::exception &) {
        }
      }
      throw ParseError("expected an integer coefficient, got " + j.dump());
    }

    std::string box_key(Box b) { return std::to_string(b.r) + "," + std::to_string(b.c); }

    std::vector<int> window_of(const Permutation &p) { return {p.window().begin(), p.window().end()}; }

    template <class T> T get_field(const json &j, const char *key) {
      if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
      try {
        return j.at(key).get<T>();
      } catch (const json::exception &e) {
        throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
      }
    }

  } // namespace

  json coefficient_to_json(const FactoredRational &r) {
    const BinomialForm form = r.binomial_form();
    json num                = json::array();
    for (const auto &term : form.numerator.terms()) num.push_back(json::array({term.q, term.t, integer_to_json(term.coeff)}));
    json den = json::array();
    for (const auto &f : form.denominator) den.push_back(json::array({f.a, f.b, f.multiplicity}));
    return json{{"num", std::move(num)}, {"den", std::move(den)}};
  }

  FactoredRational coefficient_from_json(const json &j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ParseError("coefficient needs \"num\" and \"den\"");
    std::vector<QTTerm> terms;
    for (const auto &entry : j.at("num")) {
      if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() || !entry[1].is_number_integer())
        throw ParseError("numerator terms are [qexp, texp, coeff]");
      terms.push_back({entry[0].get<int>(), entry[1].get<int>(), integer_from_json(entry[2])});
    }
    std::vector<BinomialFactor> den;
    for (const auto &entry : j.at("den")) {
      if (!entry.is_array() || entry.size() != 3) throw ParseError("denominator factors are [a, b, mult]");
      try {
        den.push_back({entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>()});
      } catch (const json::exception &e) {
        throw ParseError(std::string("bad denominator factor: ") + e.what());
      }
    }
    try {
      return FactoredRational::from_binomials(QTPolynomial::from_terms(std::move(terms)), den);
    } catch (const std::invalid_argument &e) {
      throw ParseError(e.what());
    }
  }

  json tableau_to_json(const SetValuedTableau &t) {
    json j = json::object();
    for (std::size_t i = 0; i < t.diagram().box_count(); ++i) j[box_key(t.diagram().boxes()[i])] = t.entries_at(i);
    return j;
  }

  DocumentTerm make_term(const TermRecord &rec) {
    DocumentTerm term;
    for (std::size_t i = 0; i < rec.tableau.diagram().box_count(); ++i) term.tableau[box_key(rec.tableau.diagram().boxes()[i])] = rec.tableau.entries_at(i);
    term.x      = {rec.x.exponents().begin(), rec.x.exponents().end()};
    term.x_word = rec.x_word;
    term.maj    = rec.maj;
    term.cov    = rec.cov;
    for (const auto &[sh, ht] : rec.factors) term.factors.push_back({sh, ht});
    term.coefficient = rec.coefficient;
    return term;
  }

  std::vector<DocumentPolyTerm> make_polynomial(const XPolynomial &p) {
    std::vector<DocumentPolyTerm> out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) out.push_back({{it->first.exponents().begin(), it->first.exponents().end()}, it->second});
    return out;
  }

  std::vector<DocumentPolyTerm> make_polynomial(const RationalXPolynomial &p) {
    std::vector<DocumentPolyTerm> out;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) out.push_back({{it->first.exponents().begin(), it->first.exponents().end()}, it->second});
    return out;
  }

  void to_json(json &j, const OutputDocument &doc) {
    json meta{{"command", doc.metadata.command}, {"mu", doc.metadata.mu}, {"version", doc.metadata.version}};
    if (doc.metadata.z) meta["z"] = *doc.metadata.z;
    if (doc.metadata.variant) meta["variant"] = *doc.metadata.variant;
    if (doc.metadata.engine) meta["engine"] = *doc.metadata.engine;
    if (doc.metadata.at) meta["at"] = *doc.metadata.at;

    json terms = json::array();
    for (const auto &term : doc.terms) {
      terms.push_back(json{{"tableau", term.tableau},
                           {"x", term.x},
                           {"x_word", term.x_word},
                           {"maj", term.maj},
                           {"cov", term.cov},
                           {"factors", term.factors},
                           {"coefficient", coefficient_to_json(term.coefficient)}});
    }
    json poly = json::array();
    for (const auto &term : doc.polynomial) {
      json c = std::holds_alternative<FactoredRational>(term.coefficient)
                   ? coefficient_to_json(std::get<FactoredRational>(term.coefficient))
                   : json{{"rational", std::get<BigRational>(term.coefficient).str()}};
      poly.push_back(json{{"x", term.x}, {"coefficient", std::move(c)}});
    }
    j = json{{"schema", doc.schema}, {"metadata", std::move(meta)}, {"terms", std::move(terms)}, {"polynomial", std::move(poly)}};
  }

  void from_json(const json &j, OutputDocument &doc) {
    doc.schema = get_field<std::string>(j, "schema");
    if (doc.schema != document_schema) throw ParseError("unsupported schema \"" + doc.schema + "\"");
    const json &meta      = j.at("metadata");
    doc.metadata.command  = get_field<std::string>(meta, "command");
    doc.metadata.mu       = get_field<std::vector<int>>(meta, "mu");
    doc.metadata.version  = get_field<std::string>(meta, "version");
    doc.metadata.z        = meta.contains("z") ? std::optional(get_field<std::vector<int>>(meta, "z")) : std::nullopt;
    doc.metadata.variant  = meta.contains("variant") ? std::optional(get_field<std::string>(meta, "variant")) : std::nullopt;
    doc.metadata.engine   = meta.contains("engine") ? std::optional(get_field<std::string>(meta, "engine")) : std::nullopt;
    doc.metadata.at       = meta.contains("at") ? std::optional(get_field<std::string>(meta, "at")) : std::nullopt;

    doc.terms.clear();
    for (const auto &t : get_field<json>(j, "terms")) {
      DocumentTerm term;
      term.tableau     = get_field<std::map<std::string, std::vector<int>>>(t, "tableau");
      term.x           = get_field<std::vector<int>>(t, "x");
      term.x_word      = get_field<std::vector<int>>(t, "x_word");
      term.maj         = get_field<int>(t, "maj");
      term.cov         = get_field<int>(t, "cov");
      term.factors     = get_field<std::vector<std::array<int, 2>>>(t, "factors");
      term.coefficient = coefficient_from_json(get_field<json>(t, "coefficient"));
      doc.terms.push_back(std::move(term));
    }
    doc.polynomial.clear();
    for (const auto &t : get_field<json>(j, "polynomial")) {
      DocumentPolyTerm term;
      term.x         = get_field<std::vector<int>>(t, "x");
      const json &c  = get_field<json>(t, "coefficient");
      if (c.is_object() && c.contains("rational")) {
        try {
          term.coefficient = BigRational(get_field<std::string>(c, "rational"));
        } catch (const std::runtime_error &e) {
          throw ParseError(std::string("bad rational coefficient: ") + e.what());
        }
      } else {
        term.coefficient = coefficient_from_json(c);
      }
      doc.polynomial.push_back(std::move(term));
    }
  }

  std::string dump_document(const OutputDocument &doc) { return json(doc).dump(2) + "\n"; }

  OutputDocument parse_document(const std::string &text) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error &e) {
      throw ParseError(e.what());
    }
    return j.get<OutputDocument>();
  }

  json walk_trace(const Permutation &z, const Composition &mu, const AlcoveWalk &walk) {
    json letters = json::array();
    for (std::size_t k = 0; k < walk.word.size(); ++k) {
      const Letter &letter = walk.word.letters[k];
      const auto &p        = walk.steps[k + 1];
      letters.push_back(json{{"k", k + 1},
                             {"letter", letter.is_pi() ? std::string("pi") : "s" + std::to_string(letter.index)},
                             {"box", box_key(letter.box)},
                             {"crossed", static_cast<bool>(walk.crossed[k])},
                             {"window", std::vector<std::int64_t>(p.window().begin(), p.window().end())},
                             {"residues", window_of(p.residues())}});
    }
    json fold_list = json::array();
    for (const Fold &f : folds(walk)) {
      fold_list.push_back(json{{"k", f.k},
                               {"box", box_key(f.box)},
                               {"m", f.m},
                               {"sign", f.sign == FoldSign::negative ? "negative" : "positive"},
                               {"inversion", json{{"i", f.inversion.i}, {"k", f.inversion.k}, {"j", f.inversion.j}, {"shift", f.inversion.shift()}, {"height", f.inversion.height()}}}});
    }
    return json{{"schema", walk_schema},
                {"mu", std::vector<int>(mu.parts().begin(), mu.parts().end())},
                {"z", window_of(z)},
                {"crossed", walk.crossed_letters()},
                {"start", std::vector<std::int64_t>(walk.steps.front().window().begin(), walk.steps.front().window().end())},
                {"steps", std::move(letters)},
                {"folds", std::move(fold_list)}};
  }

} // namespace macsvt::cli
