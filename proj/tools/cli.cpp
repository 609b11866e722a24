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

#include "cli.hpp"

#include "document.hpp"
#include "macsvt/error.hpp"
#include "macsvt/format.hpp"
#include "macsvt/macdonald.hpp"
#include "macsvt/walk.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef MACSVT_VERSION
#define MACSVT_VERSION "0.0.0"
#endif

namespace macsvt::cli {

  namespace {

    std::vector<int> parse_csv(const std::string &text, const std::string &what) {
      std::vector<int> out;
      std::stringstream in(text);
      std::string item;
      while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last  = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw ParseError(what + ": empty entry in \"" + text + "\"");
        item = item.substr(first, last - first + 1);
        std::size_t used = 0;
        int value        = 0;
        try {
          value = std::stoi(item, &used);
        } catch (const std::exception &) {
          used = 0;
        }
        if (used != item.size() || used == 0) throw ParseError(what + ": \"" + item + "\" is not an integer");
        out.push_back(value);
      }
      if (out.empty()) throw ParseError(what + ": expected a comma-separated list");
      return out;
    }

    Composition parse_composition(const std::string &text, const std::string &what) {
      auto parts = parse_csv(text, what);
      for (int p : parts)
        if (p < 0) throw ParseError(what + ": parts must be nonnegative");
      return Composition(std::move(parts));
    }

    Permutation parse_permutation(const std::string &text, int n) {
      if (text == "id") return Permutation::identity(n);
      Permutation z;
      try {
        z = Permutation(parse_csv(text, "--z"));
      } catch (const std::invalid_argument &) {
        throw ParseError("--z: \"" + text + "\" is not a permutation in one-line notation");
      }
      if (z.rank() != n) throw RankMismatchError("--z has rank " + std::to_string(z.rank()) + " but the shape has rank " + std::to_string(n));
      return z;
    }

    std::vector<int> to_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

    Variant parse_variant(const std::string &s) { return s == "neg" ? Variant::neg : Variant::pos; }
    Engine parse_engine(const std::string &s) { return s == "walks" ? Engine::walks : Engine::tableaux; }

    /// A parsed --at value: limits first, then evaluation at the given values.
    struct AtPoint {
      Substitution substitution;
      std::optional<BigRational> q_value;
      std::optional<BigRational> t_value;
    };

    BigRational parse_rational(const std::string &text) {
      const auto slash = text.find('/');
      auto integer     = [&](const std::string &s) {
        if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos) throw ParseError("--at: \"" + text + "\" is not a rational number");
        try {
          return BigInt(s);
        } catch (const std::exception &) {
          throw ParseError("--at: \"" + text + "\" is not a rational number");
        }
      };
      if (slash == std::string::npos) return BigRational(integer(text));
      const BigInt den = integer(text.substr(slash + 1));
      if (den == 0) throw ParseError("--at: zero denominator in \"" + text + "\"");
      return BigRational(integer(text.substr(0, slash)), den);
    }

    AtPoint parse_at(const std::string &text) {
      AtPoint point;
      std::stringstream in(text);
      std::string item;
      bool q_set = false, t_set = false;
      auto claim = [&](bool &flag, const char *var) {
        if (flag) throw ParseError(std::string("--at: ") + var + " is specified twice");
        flag = true;
      };
      while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("--at: expected name=value, got \"" + item + "\"");
        const std::string name = item.substr(0, eq), value = item.substr(eq + 1);
        if (name == "qinv" || name == "tinv") {
          if (value != "0") throw ParseError("--at: only " + name + "=0 is supported");
          claim(name == "qinv" ? q_set : t_set, name == "qinv" ? "q" : "t");
          (name == "qinv" ? point.substitution.q : point.substitution.t) = Substitution::Limit::infinity;
        } else if (name == "t" && value == "q") {
          claim(t_set, "t");
          point.substitution.t_equals_q = true;
        } else if (name == "q" || name == "t") {
          claim(name == "q" ? q_set : t_set, name.c_str());
          const BigRational v = parse_rational(value);
          if (v == 0) {
            (name == "q" ? point.substitution.q : point.substitution.t) = Substitution::Limit::zero;
          } else {
            (name == "q" ? point.q_value : point.t_value) = v;
          }
        } else {
          throw ParseError("--at: unknown variable \"" + name + "\"");
        }
      }
      if (!q_set && !t_set) throw ParseError("--at: nothing to substitute");
      const bool q_gone = point.substitution.q != Substitution::Limit::keep;
      const bool t_gone = point.substitution.t != Substitution::Limit::keep || point.substitution.t_equals_q;
      if ((point.q_value || point.t_value) && ((!q_gone && !point.q_value) || (!t_gone && !point.t_value)))
        throw ParseError("--at: a numeric value for one variable needs the other one fixed as well");
      return point;
    }

    class Output {
     public:
      Output(const std::string &path, std::ostream &fallback) {
        if (!path.empty()) {
          file_.open(path, std::ios::binary);
          if (!file_) throw ParseError("cannot open output file \"" + path + "\"");
        }
        stream_ = path.empty() ? &fallback : &file_;
      }
      std::ostream &stream() { return *stream_; }

     private:
      std::ofstream file_;
      std::ostream *stream_;
    };

    DocumentMetadata metadata(const std::string &command, const Composition &mu) {
      DocumentMetadata m;
      m.command = command;
      m.mu      = to_vector(mu.parts());
      m.version = MACSVT_VERSION;
      return m;
    }

    void write_polynomial(std::ostream &out, const std::string &format, const XPolynomial &p, OutputDocument doc) {
      if (format == "json") {
        doc.polynomial = make_polynomial(p);
        out << dump_document(doc);
      } else if (format == "latex") {
        out << to_latex(p) << "\n";
      } else {
        out << to_text(p) << "\n";
      }
    }

    std::string latex_rational(const RationalXPolynomial &p) {
      std::string out;
      bool first = true;
      for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto &[m, c] = *it;
        const bool negative = c < 0;
        const BigRational a = negative ? BigRational(-c) : c;
        const BigInt num = boost::multiprecision::numerator(a), den = boost::multiprecision::denominator(a);
        std::string coeff = den == 1 ? num.str() : "\\frac{" + num.str() + "}{" + den.str() + "}";
        std::string mono;
        for (int i = 1; i <= m.rank(); ++i) {
          if (m(i) == 0) continue;
          mono += "x_" + (i < 10 ? std::to_string(i) : "{" + std::to_string(i) + "}");
          if (m(i) > 1) mono += "^" + (m(i) < 10 ? std::to_string(m(i)) : "{" + std::to_string(m(i)) + "}");
        }
        if (!mono.empty() && coeff == "1") coeff.clear();
        out += (first ? (negative ? "-" : "") : (negative ? " - " : " + ")) + coeff + mono;
        first = false;
      }
      return first ? "0" : out;
    }

    struct Options {
      std::string output;

      std::string mu, z = "id", variant = "pos", engine = "tableaux", format = "text", lambda, at, crossed;
      bool terms                = false;
      std::uint64_t max_terms   = default_term_budget;
      std::uint64_t samples     = 0;
      std::uint64_t seed        = default_rng_seed;
    };

    int cmd_compute_e(const Options &o, std::ostream &out) {
      const Composition mu = parse_composition(o.mu, "--mu");
      MacdonaldQuery query{parse_permutation(o.z, mu.rank()), mu, parse_variant(o.variant), parse_engine(o.engine)};
      const EResult result = compute_E(query, {o.max_terms, o.terms});
      if (o.format == "json") {
        OutputDocument doc;
        doc.metadata         = metadata("compute-e", mu);
        doc.metadata.z       = to_vector(query.z.window());
        doc.metadata.variant = o.variant;
        doc.metadata.engine  = o.engine;
        for (const auto &rec : result.terms) doc.terms.push_back(make_term(rec));
        write_polynomial(out, o.format, result.polynomial, std::move(doc));
        return exit_ok;
      }
      for (std::size_t i = 0; i < result.terms.size(); ++i) {
        const TermRecord &rec = result.terms[i];
        if (o.format == "latex") {
          out << "x^T = " << latex_x_word(rec.x_word) << ", \\quad \\mathrm{wt}(T) = " << latex_weight(rec, query.variant) << " \\\\\n";
        } else {
          std::string word;
          for (int x : rec.x_word) word += "x" + std::to_string(x);
          out << "#" << (i + 1) << " T=" << to_text(rec.tableau) << " x=" << (word.empty() ? "1" : word) << " maj=" << rec.maj << " cov=" << rec.cov
              << " wt=" << to_text(rec.coefficient) << "\n";
        }
      }
      write_polynomial(out, o.format, result.polynomial, {});
      return exit_ok;
    }

    int cmd_compute_p(const Options &o, std::ostream &out, std::ostream &err) {
      const Composition lambda = parse_composition(o.lambda, "--lambda");
      if (!lambda.is_partition()) {
        err << "error: --lambda must be a partition (weakly decreasing)\n";
        return exit_usage;
      }
      const XPolynomial p = compute_P(lambda, o.max_terms);
      write_polynomial(out, o.format, p, OutputDocument{document_schema, metadata("compute-p", lambda), {}, {}});
      return exit_ok;
    }

    int cmd_specialize(const Options &o, std::ostream &out, std::ostream &err) {
      const AtPoint point = parse_at(o.at);
      if (o.mu.empty() == o.lambda.empty()) {
        err << "error: specialize needs exactly one of --mu or --lambda\n";
        return exit_usage;
      }
      XPolynomial p;
      OutputDocument doc;
      if (!o.mu.empty()) {
        const Composition mu = parse_composition(o.mu, "--mu");
        MacdonaldQuery query{parse_permutation(o.z, mu.rank()), mu, parse_variant(o.variant), parse_engine(o.engine)};
        p                    = compute_E(query, {o.max_terms, false}).polynomial;
        doc.metadata         = metadata("specialize", mu);
        doc.metadata.z       = to_vector(query.z.window());
        doc.metadata.variant = o.variant;
        doc.metadata.engine  = o.engine;
      } else {
        const Composition lambda = parse_composition(o.lambda, "--lambda");
        if (!lambda.is_partition()) {
          err << "error: --lambda must be a partition (weakly decreasing)\n";
          return exit_usage;
        }
        p            = compute_P(lambda, o.max_terms);
        doc.metadata = metadata("specialize", lambda);
      }
      doc.metadata.at = o.at;
      const XPolynomial limit = specialize(p, point.substitution);
      if (!point.q_value && !point.t_value) {
        write_polynomial(out, o.format, limit, std::move(doc));
        return exit_ok;
      }
      const RationalXPolynomial value = evaluate_at(limit, point.q_value.value_or(1), point.t_value.value_or(1));
      if (o.format == "json") {
        doc.polynomial = make_polynomial(value);
        out << dump_document(doc);
      } else {
        out << (o.format == "latex" ? latex_rational(value) : to_text(value)) << "\n";
      }
      return exit_ok;
    }

    int cmd_verify(const Options &o, std::ostream &out) {
      const Composition mu = parse_composition(o.mu, "--mu");
      const Permutation z  = parse_permutation(o.z, mu.rank());
      VerifyOptions options;
      options.seed      = o.seed;
      options.max_terms = o.max_terms;
      if (o.samples > 0) options.samples = o.samples;
      const VerifyReport r = verify_identities(mu, z, options);
      auto mark            = [](bool ok) { return ok ? "OK" : "FAIL"; };
      out << (r.checked - r.failed) << "/" << r.checked << (options.samples ? " sampled terms: " : " terms: ") << "pos≡neg " << mark(r.pos_neg)
          << ", walk≡tableau " << mark(r.walk_tableau) << "\n";
      out << "parity " << mark(r.parity) << ", fold-sign " << mark(r.fold_sign) << "\n";
      if (r.counterexample) out << "first counterexample: " << *r.counterexample << "\n";
      return r.ok() ? exit_ok : exit_verify_failed;
    }

    int cmd_enumerate(const Options &o, std::ostream &out) {
      const Composition mu = parse_composition(o.mu, "--mu");
      const auto diagram   = make_diagram(mu);
      const TableauEnumerator tableaux(diagram);
      if (tableaux.log2_count() >= 64 || tableaux.count() > o.max_terms) throw BudgetExceededError(tableaux.log2_count(), o.max_terms);
      for (std::uint64_t i = 0; i < tableaux.count(); ++i) out << json{{"index", i}, {"tableau", tableau_to_json(tableaux.at(i))}}.dump() << "\n";
      return exit_ok;
    }

    int cmd_walk(const Options &o, std::ostream &out) {
      const Composition mu = parse_composition(o.mu, "--mu");
      const Permutation z  = parse_permutation(o.z, mu.rank());
      std::vector<std::size_t> crossed;
      if (!o.crossed.empty())
        for (int k : parse_csv(o.crossed, "--crossed")) {
          if (k < 1) throw ParseError("--crossed: letter positions start at 1");
          crossed.push_back(static_cast<std::size_t>(k));
        }
      const AlcoveWalk walk = walk_from_subset(z, mu, crossed);
      out << walk_trace(z, mu, walk).dump(2) << "\n";
      return exit_ok;
    }

  } // namespace

  int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact relative and symmetric Macdonald polynomials from set-valued tableaux", "macsvt"};
    app.set_version_flag("--version", MACSVT_VERSION);
    app.require_subcommand(1);
    Options o;
    app.add_option("--output", o.output, "Write the result to FILE instead of standard output");

    const auto formats  = CLI::IsMember({"text", "latex", "json"});
    const auto variants = CLI::IsMember({"pos", "neg"});
    const auto engines  = CLI::IsMember({"tableaux", "walks"});

    auto *e = app.add_subcommand("compute-e", "Relative Macdonald polynomial E^z_mu");
    e->add_option("--mu", o.mu, "Composition, comma separated")->required();
    e->add_option("--z", o.z, "Permutation in one-line notation, or id")->capture_default_str();
    e->add_option("--variant", o.variant, "pos or neg powers of q, t")->check(variants)->capture_default_str();
    e->add_option("--engine", o.engine, "tableaux or walks")->check(engines)->capture_default_str();
    e->add_option("--format", o.format, "text, latex or json")->check(formats)->capture_default_str();
    e->add_flag("--terms", o.terms, "List every tableau term");
    e->add_option("--max-terms", o.max_terms, "Refuse shapes with more tableaux than this")->capture_default_str();

    auto *p = app.add_subcommand("compute-p", "Symmetric Macdonald polynomial P_lambda");
    p->add_option("--lambda", o.lambda, "Partition, comma separated")->required();
    p->add_option("--format", o.format, "text, latex or json")->check(formats)->capture_default_str();
    p->add_option("--max-terms", o.max_terms, "Refuse when n! times the tableau count exceeds this")->capture_default_str();

    auto *s = app.add_subcommand("specialize", "E^z_mu or P_lambda under a substitution");
    s->add_option("--mu", o.mu, "Composition, comma separated");
    s->add_option("--lambda", o.lambda, "Partition, comma separated");
    s->add_option("--z", o.z, "Permutation in one-line notation, or id")->capture_default_str();
    s->add_option("--variant", o.variant, "pos or neg")->check(variants)->capture_default_str();
    s->add_option("--engine", o.engine, "tableaux or walks")->check(engines)->capture_default_str();
    s->add_option("--at", o.at, "q=0, t=0, qinv=0, tinv=0, t=q, q=a/b, t=c/d, comma separated")->required();
    s->add_option("--format", o.format, "text, latex or json")->check(formats)->capture_default_str();
    s->add_option("--max-terms", o.max_terms, "Term budget")->capture_default_str();

    auto *v = app.add_subcommand("verify", "Check both expansions and the walk computation term by term");
    v->add_option("--mu", o.mu, "Composition, comma separated")->required();
    v->add_option("--z", o.z, "Permutation in one-line notation, or id")->capture_default_str();
    v->add_option("--samples", o.samples, "Check this many random tableaux instead of all");
    v->add_option("--rng-seed", o.seed, "Seed of the 64-bit Mersenne Twister used for sampling")->capture_default_str();
    v->add_option("--max-terms", o.max_terms, "Term budget for exhaustive runs")->capture_default_str();

    auto *n = app.add_subcommand("enumerate", "All set-valued tableaux of a shape as JSON lines");
    n->add_option("--mu", o.mu, "Composition, comma separated")->required();
    n->add_option("--max-terms", o.max_terms, "Term budget")->capture_default_str();

    auto *w = app.add_subcommand("walk", "Trace of one alcove walk as JSON");
    w->add_option("--mu", o.mu, "Composition, comma separated")->required();
    w->add_option("--z", o.z, "Permutation in one-line notation, or id")->capture_default_str();
    w->add_option("--crossed", o.crossed, "1-based positions of the crossed-out letters");

    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
      out << app.help();
      return exit_ok;
    } catch (const CLI::CallForVersion &) {
      out << MACSVT_VERSION << "\n";
      return exit_ok;
    } catch (const CLI::ParseError &ex) {
      err << "error: " << ex.what() << "\n";
      return exit_usage;
    }

    try {
      Output target(o.output, out);
      std::ostream &os = target.stream();
      if (e->parsed()) return cmd_compute_e(o, os);
      if (p->parsed()) return cmd_compute_p(o, os, err);
      if (s->parsed()) return cmd_specialize(o, os, err);
      if (v->parsed()) return cmd_verify(o, os);
      if (n->parsed()) return cmd_enumerate(o, os);
      return cmd_walk(o, os);
    } catch (const BudgetExceededError &ex) {
      err << "error: " << ex.what() << " (raise --max-terms to allow it)\n";
      return exit_budget;
    } catch (const InternalConsistencyError &ex) {
      err << "internal error: " << ex.what() << "\n";
      return exit_internal;
    } catch (const Error &ex) {
      err << "error: " << ex.what() << "\n";
      return exit_usage;
    } catch (const std::invalid_argument &ex) {
      err << "error: " << ex.what() << "\n";
      return exit_usage;
    } catch (const std::exception &ex) {
      err << "internal error: " << ex.what() << "\n";
      return exit_internal;
    }
  }

} // namespace macsvt::cli
