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

#include "cli.hpp"
#include "document.hpp"

#include "macsvt/error.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

  struct Result {
    int code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "macsvt");
    std::ostringstream out, err;
    const int code = macsvt::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
  }

} // namespace

TEST(Cli, Version) {
  const auto r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1.0.0\n");
}

TEST(Cli, GoldenTermsAsText) {
  const auto r = run({"compute-e", "--mu", "2,2,1,1,0,0", "--z", "id", "--terms"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 17u);
  EXPECT_EQ(ls[0], "#1 T={} x=x1x2x3x4x1x2 maj=0 cov=0 wt=1");
  EXPECT_EQ(ls[1], "#2 T={(2,2):{1}} x=x1x2x3x4x1x5 maj=1 cov=2 wt=(q*t^2 - q*t^3)/(1 - q*t^5)");
}

TEST(Cli, GoldenTermsAsLatex) {
  const auto r = run({"compute-e", "--mu", "2,2,1,1,0,0", "--terms", "--format", "latex"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::multiset<std::string> ours, expected;
  for (const auto &line : lines(r.out))
    if (line.rfind("x^T", 0) == 0) ours.insert(line);
  for (const auto &block : golden::blocks) {
    std::string word;
    for (const auto &z : block.z) word += "x_" + std::to_string(z.back());
    expected.insert("x^T = " + word + ", \\quad \\mathrm{wt}(T) = " + block.weight + " \\\\");
  }
  EXPECT_EQ(ours, expected);
}

TEST(Cli, SmallPolynomials) {
  EXPECT_EQ(run({"compute-e", "--mu", "0", "--z", "1"}).out, "1\n");
  EXPECT_EQ(run({"compute-p", "--lambda", "1,0"}).out, "x1 + x2\n");
  EXPECT_EQ(run({"specialize", "--lambda", "2,1,0", "--at", "t=q"}).out,
            "x1^2*x2 + x1^2*x3 + x1*x2^2 + 2*x1*x2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2\n");
  EXPECT_EQ(run({"specialize", "--lambda", "2,0", "--at", "q=1/2,t=1/3"}).out, "x1^2 + 6/5*x1*x2 + x2^2\n");
  EXPECT_EQ(run({"specialize", "--mu", "0,1", "--at", "q=0,t=0"}).out, "x1 + x2\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"compute-e"}).code, 1);
  EXPECT_EQ(run({"compute-e", "--mu", "1,0", "--z", "1,1"}).code, 1);
  EXPECT_EQ(run({"compute-p", "--lambda", "0,1"}).code, 1);
  EXPECT_EQ(run({"specialize", "--mu", "1,0", "--at", "x=1"}).code, 1);
  EXPECT_EQ(run({"walk", "--mu", "0,1", "--crossed", "2"}).code, 1);
  const auto budget = run({"compute-e", "--mu", "0,4,5,1,4"});
  EXPECT_EQ(budget.code, 2);
  EXPECT_NE(budget.err.find("2^23 terms exceeds budget of 1048576"), std::string::npos);
  EXPECT_EQ(run({"verify", "--mu", "2,2,1,1,0,0"}).code, 0);
  EXPECT_EQ(run({"verify", "--mu", "0,4,5,1,4", "--samples", "20"}).code, 0);
}

TEST(Cli, VerifyReport) {
  const auto r = run({"verify", "--mu", "2,2,1,1,0,0"});
  EXPECT_EQ(r.out, "16/16 terms: pos≡neg OK, walk≡tableau OK\nparity OK, fold-sign OK\n");
}

TEST(Cli, JsonRoundTrip) {
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"compute-e", "--mu", "2,2,1,1,0,0", "--terms", "--format", "json"},
           {"compute-e", "--mu", "1,0,2", "--z", "3,1,2", "--variant", "neg", "--engine", "walks", "--format", "json"},
           {"compute-p", "--lambda", "2,1,0", "--format", "json"},
           {"specialize", "--lambda", "2,0", "--at", "q=1/2,t=1/3", "--format", "json"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = macsvt::cli::parse_document(r.out);
    EXPECT_EQ(macsvt::cli::dump_document(doc), r.out);
    EXPECT_EQ(macsvt::cli::parse_document(macsvt::cli::dump_document(doc)), doc);
  }
}

TEST(Cli, JsonRejectsMalformed) {
  EXPECT_THROW((void)macsvt::cli::parse_document("{}"), macsvt::ParseError);
  EXPECT_THROW((void)macsvt::cli::parse_document("not json"), macsvt::ParseError);
  EXPECT_THROW((void)macsvt::cli::coefficient_from_json(nlohmann::json{{"num", 1}}), macsvt::ParseError);
}

TEST(Cli, EnumerateAndWalk) {
  EXPECT_EQ(run({"enumerate", "--mu", "0,1"}).out, "{\"index\":0,\"tableau\":{\"2,1\":[]}}\n{\"index\":1,\"tableau\":{\"2,1\":[1]}}\n");
  const auto walk = nlohmann::json::parse(run({"walk", "--mu", "0,1", "--crossed", "1"}).out);
  EXPECT_EQ(walk["schema"], "macsvt.walk/1");
  EXPECT_EQ(walk["folds"][0]["sign"], "positive");
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "macsvt_cli_output_test.txt";
  const auto r    = run({"--output", path.string(), "compute-p", "--lambda", "1,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  std::ifstream in(path);
  EXPECT_EQ(std::string(std::istreambuf_iterator<char>(in), {}), "x1 + x2\n");
  std::filesystem::remove(path);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"compute-e", "--mu", "1,2,0", "--z", "2,3,1", "--terms", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> verify{"verify", "--mu", "0,4,5,1,4", "--samples", "30", "--rng-seed", "9"};
  EXPECT_EQ(run(verify).out, run(verify).out);
}
