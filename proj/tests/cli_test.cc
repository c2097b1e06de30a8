// Copyright 2026 The Authors.
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

#include "bfm_cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace bfm::cli {
namespace {

namespace fs = std::filesystem;

constexpr char kK1[] =
    R"({"budget": "10", "agents": [{"id": 0, "cost": 2, "value": 6},
        {"id": 1, "cost": 3, "value": 5}, {"id": 2, "cost": 5, "value": 4}],
        "valuation": {"kind": "additive"}})";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bfm");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  fs::path dir_;
};

TEST_F(CliTest, RunMechK) {
  const Result r = Invoke({"run", "mech-k", Write("k1.json", kK1)});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("\"winners\""), std::string::npos);
  EXPECT_NE(r.out.find("\"10\""), std::string::npos);
}

TEST_F(CliTest, RunGreKPayments) {
  const Result r = Invoke({"run", "gre-k", Write("k1.json", kK1)});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("60/11"), std::string::npos);
  EXPECT_NE(r.out.find("50/11"), std::string::npos);
}

TEST_F(CliTest, SampleIsReproducible) {
  const std::string f = Write("k1.json", kK1);
  const Result a = Invoke({"run", "rm-k", f, "--sample", "--seed", "3"});
  const Result b = Invoke({"run", "rm-k", f, "--sample", "--seed", "3"});
  EXPECT_EQ(a.code, kExitPass) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("# sample seed=3", 0), 0u);
}

TEST_F(CliTest, VerifyDirectory) {
  Write("k1.json", kK1);
  Write("notes.txt", "ignored");
  const Result r = Invoke({"verify", dir_.string()});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  EXPECT_EQ(r.out.rfind("instance,mechanism,value,opt,ratio,pass,witness\n", 0), 0u);
  EXPECT_EQ(r.out.find(",fail,"), std::string::npos);
}

TEST_F(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(Invoke({"run", "mech-k", Write("bad.json", "{\"budget\": ")}).code,
            kExitInputError);
  EXPECT_EQ(Invoke({"run", "nope", Write("k1.json", kK1)}).code, kExitInputError);
  EXPECT_EQ(Invoke({"run", "mech-k", (dir_ / "missing.json").string()}).code,
            kExitInputError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitInputError);
  const Result dup = Invoke(
      {"run", "mech-k",
       Write("dup.json", R"({"budget": 5, "agents": [{"id": 0, "cost": 1, "value": 1},
           {"id": 0, "cost": 1, "value": 1}], "valuation": {"kind": "additive"}})")});
  EXPECT_EQ(dup.code, kExitInputError);
  EXPECT_NE(dup.err.find("duplicate agent id"), std::string::npos);
}

TEST_F(CliTest, KnapsackMechanismOnCoverageIsAnInputError) {
  const Result r = Invoke(
      {"run", "mech-k",
       Write("cov.json", R"({"budget": 3, "agents": [{"id": 0, "cost": 1}, {"id": 1, "cost": 1}],
           "valuation": {"kind": "coverage", "weights": [1, 1], "covers": [[0], [1]]}})")});
  EXPECT_EQ(r.code, kExitInputError);
}

TEST_F(CliTest, BenchIsDeterministic) {
  const Result a = Invoke({"bench", "--seed", "7", "--count", "15"});
  const Result b = Invoke({"bench", "--seed", "7", "--count", "15"});
  EXPECT_EQ(a.code, kExitPass) << a.err;
  EXPECT_EQ(a.out, b.out);
  // 15 additive instances, 9 mechanisms each, plus the header.
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 1 + 15 * 9);
}

TEST_F(CliTest, ProbeYao) {
  const Result r = Invoke({"probe-yao", "--n", "10", "--eps", "1/10"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("expected_ratio="), std::string::npos);
}

TEST_F(CliTest, ProbeLb3) {
  const Result r = Invoke({"probe-lb3", "--grid", "16"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("max_ratio=1 + 1*sqrt2"), std::string::npos) << r.out;
  EXPECT_EQ(Invoke({"probe-lb3", "--grid", "8"}).code, kExitInputError);
}

}  // namespace
}  // namespace bfm::cli
