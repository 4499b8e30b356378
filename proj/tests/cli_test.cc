// Copyright 2026 The graphsens Authors
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


#include "cli.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"

namespace graphsens::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Invoke(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "graphsens");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, ComputeStar) {
  const CliRun r = Invoke({"compute", "star(6)"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("alpha: 6\n"), std::string::npos);
  EXPECT_NE(r.out.find("sigma: 6\n"), std::string::npos);
  EXPECT_NE(r.out.find("delta: 6\n"), std::string::npos);
}

TEST(CliTest, ComputeThagomizer) {
  const CliRun r = Invoke({"compute", "thagomizer(5)", "--format", "csv"});
  EXPECT_EQ(r.out, "expression,order,delta,alpha,sigma\nthagomizer(5),7,6,5,5\n");
}

TEST(CliTest, ComputeEmptyPrintsInf) {
  const CliRun r = Invoke({"compute", "empty(4)", "--format", "json-lines"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["sigma"], "inf");
  EXPECT_EQ(j["alpha"], 4);
}

TEST(CliTest, ComputeSigmaKVector) {
  const CliRun r = Invoke({"compute", "cycle(5)", "--sigma-k", "--format", "csv"});
  EXPECT_EQ(r.out,
            "expression,order,delta,alpha,sigma,sigma_k\ncycle(5),5,2,2,1,1;2;2\n");
}

TEST(CliTest, BudgetAndParseErrorsExitTwo) {
  CliRun r = Invoke({"compute", "complete(30)"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("30 vertices"), std::string::npos);
  EXPECT_EQ(Invoke({"compute", "complete(30)", "--max-vertices", "30"}).code, kExitOk);
  r = Invoke({"compute", "join(join(path(4), complete(3)"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("offset 30"), std::string::npos);
  EXPECT_EQ(Invoke({}).code, kExitInputError);
  EXPECT_EQ(Invoke({"compute"}).code, kExitInputError);
}

TEST(CliTest, VerifyAgreementTable) {
  const CliRun r = Invoke({"verify", "cone(7, cycle(5))"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("sigma=5 [agree]"), std::string::npos);
  EXPECT_NE(r.out.find("ncone_regular"), std::string::npos);
  EXPECT_EQ(r.out.find("DISAGREE"), std::string::npos);
}

TEST(CliTest, VerifyJsonLines) {
  const CliRun r = Invoke({"verify", "corona(complete(4), complete(3))", "--format",
                        "json-lines"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["sigma"], 1);
  EXPECT_TRUE(j["agree"].get<bool>());
  bool found = false;
  for (const auto& p : j["predictions"]) {
    if (p["predictor"] == "corona") {
      found = true;
      EXPECT_EQ(p["value"], 1);
    }
  }
  EXPECT_TRUE(found);
}

TEST(CliTest, VerifySuiteKeepsInputOrder) {
  const std::string path = ::testing::TempDir() + "cli_suite.txt";
  {
    std::ofstream f(path);
    f << "# comment line\n"
      << "join(empty(2), empty(5))\n\n"
      << "star(4)  # trailing comment\n"
      << "cycle(7)\n";
  }
  const CliRun r = Invoke({"verify", "--suite", path, "--threads", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto a = r.out.find("join(empty(2), empty(5))");
  const auto b = r.out.find("star(4)");
  const auto c = r.out.find("cycle(7)");
  ASSERT_NE(c, std::string::npos);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_NE(r.out.find("3 expressions, 0 disagreements, 0 errors"), std::string::npos);
}

TEST(CliTest, VerifySuiteWithBadLineExitsTwo) {
  const std::string path = ::testing::TempDir() + "cli_bad_suite.txt";
  {
    std::ofstream f(path);
    f << "star(4)\nstar(\n";
  }
  const CliRun r = Invoke({"verify", "--suite", path});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find(":2:"), std::string::npos);
  EXPECT_EQ(Invoke({"verify", "--suite", "/nonexistent/suite.txt"}).code,
            kExitInputError);
  EXPECT_EQ(Invoke({"verify"}).code, kExitInputError);
}

TEST(CliTest, SweepCsv) {
  const CliRun r = Invoke({"sweep", "hypercube(n)", "--range", "n=1..4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "params,order,delta,alpha,sigma,sigma_pred,agree,trend\n"
            "n=1,2,1,1,1,1,yes,sigma-grows\n"
            "n=2,4,2,2,2,2,yes,sigma-grows\n"
            "n=3,8,3,4,2,2,yes,sigma-grows\n"
            "n=4,16,4,8,2,2,yes,sigma-grows\n");
}

TEST(CliTest, SweepTwoRangesAndErrors) {
  const CliRun r = Invoke({"sweep", "windmill(m, n)", "--range", "m=1..2", "--range", "n=2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("m=2;n=2,"), std::string::npos);
  EXPECT_EQ(Invoke({"sweep", "windmill(m, n)", "--range", "m=1..2"}).code,
            kExitInputError);
  EXPECT_EQ(Invoke({"sweep", "cycle(n)", "--range", "n=a..b"}).code, kExitInputError);
}

TEST(CliTest, ExportDot) {
  const CliRun r = Invoke({"export-dot", "complete(3)"});
  EXPECT_EQ(r.out, "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
}

TEST(CliTest, Graph6DecodeAndEncode) {
  CliRun r = Invoke({"graph6", "--format", "csv"}, "Bw\n\nBg\n@\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "expression,order,delta,alpha,sigma\n"
            "Bw,3,2,1,1\nBg,3,2,2,2\n@,1,0,1,inf\n");
  r = Invoke({"graph6"}, "Bw\nB!\n");
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  r = Invoke({"graph6", "--encode", "path(3)"});
  EXPECT_EQ(r.out, "Bg\n");
}

TEST(CliTest, FamiliesListing) {
  const CliRun r = Invoke({"families"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("windmill(int, int)"), std::string::npos);
}

}  // namespace
}  // namespace graphsens::cli
