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

// Runs the built command-line tool as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "rainbow/io/json_io.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {
namespace {

using io::Json;

constexpr const char* kUniform = R"({
  "ground": ["a", "b", "c"],
  "matroid_M": {"type": "uniform", "rank": 2},
  "matroid_N": {"type": "uniform", "rank": 2},
  "n": 2,
  "family": [["a", "b"], ["a", "c"], ["b", "c"]]
})";

class CliTest : public ::testing::Test {
 protected:
  std::string Path(const std::string& name) const {
    return ::testing::TempDir() + "cli_" + ::testing::UnitTest::GetInstance()->current_test_info()->name() + "_" + name;
  }

  static int Run(const std::string& args, const std::string& capture = "/dev/null") {
    const std::string cmd = std::string(RAINBOW_CLI_PATH) + " " + args + " > " + capture + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string Read(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static void Write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }
};

TEST_F(CliTest, SolveMatchesLibrary) {
  Write(Path("inst.json"), kUniform);
  ASSERT_EQ(Run("solve --in " + Path("inst.json") + " --out " + Path("result.json")), 0);
  const Json result = Json::parse(Read(Path("result.json")));
  EXPECT_EQ(result["size"], 2);
  const auto ni = io::parse_instance(kUniform);
  EXPECT_EQ(result, io::result_json(ni, solve(ni.instance)));
}

TEST_F(CliTest, CounterexampleIsInfeasible) {
  ASSERT_EQ(Run("counterexample --n 3 --out " + Path("ce.json")), 0);
  EXPECT_EQ(Run("solve --in " + Path("ce.json") + " --out " + Path("r.json")), 2);
  const Json result = Json::parse(Read(Path("r.json")));
  EXPECT_EQ(result["status"], "infeasible");
  EXPECT_EQ(result["size"], 2);
}

TEST_F(CliTest, StressReportsAgreement) {
  ASSERT_EQ(Run("stress --species partition,graphic --n 3 --m 5 --count 100 --seed 42 --out " + Path("s.jsonl")), 0);
  std::istringstream lines(Read(Path("s.jsonl")));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const Json report = Json::parse(line);
    EXPECT_EQ(report["agreement"], true) << line;
    EXPECT_EQ(report["seed"], 42 + count);
    ++count;
  }
  EXPECT_EQ(count, 100);
}

TEST_F(CliTest, StressOutputIndependentOfJobs) {
  ASSERT_EQ(Run("stress --species linear --n 3 --count 30 --seed 5 --out " + Path("one.jsonl")), 0);
  ASSERT_EQ(Run("stress --species linear --n 3 --count 30 --seed 5 --jobs 4 --out " + Path("four.jsonl")), 0);
  EXPECT_EQ(Read(Path("one.jsonl")), Read(Path("four.jsonl")));
}

TEST_F(CliTest, GenerateIsDeterministic) {
  ASSERT_EQ(Run("generate --species graphic,linear --n 3 --seed 9 --out " + Path("a.json")), 0);
  ASSERT_EQ(Run("generate --species graphic,linear --n 3 --seed 9 --out " + Path("b.json")), 0);
  EXPECT_EQ(Read(Path("a.json")), Read(Path("b.json")));
  ASSERT_EQ(Run("solve --in " + Path("a.json") + " --out " + Path("ra.json")), 0);
  ASSERT_EQ(Run("solve --in " + Path("b.json") + " --out " + Path("rb.json")), 0);
  EXPECT_EQ(Read(Path("ra.json")), Read(Path("rb.json")));
  EXPECT_EQ(Json::parse(Read(Path("a.json")))["family"].size(), 5u);
}

TEST_F(CliTest, EncodeLatinThenSolve) {
  ASSERT_EQ(Run("encode-latin --rows '1,2;2,1;1,2' --out " + Path("l.json")), 0);
  const Json doc = Json::parse(Read(Path("l.json")));
  EXPECT_EQ(doc["ground"].front(), "r1c1");
  EXPECT_EQ(Run("solve --in " + Path("l.json")), 0);
}

TEST_F(CliTest, VerifyAgrees) {
  Write(Path("inst.json"), kUniform);
  ASSERT_EQ(Run("verify --in " + Path("inst.json"), Path("v.json")), 0);
  EXPECT_EQ(Json::parse(Read(Path("v.json")))["agreement"], true);
}

TEST_F(CliTest, Selftest) { EXPECT_EQ(Run("selftest --quota 20 --seed 3"), 0); }

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(Run("solve --bogus"), 1);
  EXPECT_EQ(Run(""), 1);
  EXPECT_EQ(Run("frobnicate"), 1);
}

TEST_F(CliTest, InvalidInstanceReportsError) {
  Json doc = Json::parse(kUniform);
  doc["family"][1] = Json::array({"a"});
  Write(Path("bad.json"), doc.dump());
  EXPECT_EQ(Run("solve --in " + Path("bad.json"), Path("err.json")), 1);
  const Json err = Json::parse(Read(Path("err.json")));
  EXPECT_EQ(err["status"], "error");
  EXPECT_NE(err["message"].get<std::string>().find("$.family[1]"), std::string::npos);
}

}  // namespace
}  // namespace rainbow
