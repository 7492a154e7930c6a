// Copyright 2026 The Shadowgraph Authors
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct CliRun {
  std::string out;
  int code = -1;
};

CliRun Cli(const std::string& args) {
  const std::string command =
      std::string(SHADOWGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun run;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return run;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    run.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

void ExpectDeterministic(const std::string& args) {
  const CliRun a = Cli(args);
  const CliRun b = Cli(args);
  EXPECT_EQ(a.code, 0) << args;
  EXPECT_FALSE(a.out.empty()) << args;
  EXPECT_EQ(a.out, b.out) << args;
}

TEST(CliTest, RepeatedRunsAreByteIdentical) {
  ExpectDeterministic("generate --model complete-k --n 12 --k 3 --p 0.2 --seed 9");
  ExpectDeterministic("generate --model uniform-hk --n 12 --k 4 --m 40 --p 0.5 --seed 9");
  ExpectDeterministic("mc --n 10 --k 3 --p 0.05,0.1 --property connected --trials 500 --seed 3");
  ExpectDeterministic(
      "scan --property no-isolated --scale lognk1 --c-list 0.5,2 --n-list 15,25 "
      "--trials 300 --seed 4 --threads 2");
  ExpectDeterministic("couple --n 10 --k 3 --p1 0.1 --p2 0.3 --trials 300 --seed 5");
  ExpectDeterministic("exact --quantity degree-law --n 7 --k 3 --p 0.5 --json");
  ExpectDeterministic("oracle --quantity triangles --n 5 --k 3 --p 0.5 --json");
}

TEST(CliTest, SeedChangesSample) {
  EXPECT_NE(Cli("generate --n 12 --k 3 --p 0.3 --seed 1").out,
            Cli("generate --n 12 --k 3 --p 0.3 --seed 2").out);
}

TEST(CliTest, GenerateWritesMultigraph) {
  const CliRun r = Cli("generate --n 5 --k 3 --p 1 --seed 1");
  EXPECT_EQ(r.out.substr(0, 4), "n=5\n");
  const CliRun empty = Cli("generate --n 5 --k 3 --p 0 --seed 1");
  EXPECT_EQ(empty.out, "n=5\n");
}

TEST(CliTest, ExactOutputFormats) {
  EXPECT_EQ(Cli("exact --quantity triangles-c4 --n 4 --p 0.5").out, "0\n");
  EXPECT_EQ(Cli("exact --quantity empty-prob --n 5 --k 3 --p 0.5").out,
            "0.0009765625\n");
  const CliRun json = Cli("exact --quantity expected-isolated --n 10 --k 3 --p 0.1 --json");
  EXPECT_EQ(json.out.rfind("{\"quantity\":\"expected-isolated\",\"params\":", 0), 0u);
  EXPECT_NE(json.out.find("\"value\":"), std::string::npos);
  const CliRun u3 = Cli("exact --quantity triangles-u3 --n 6 --p 0.5 --m 10");
  EXPECT_EQ(u3.out, "0.397440083813\n");
}

TEST(CliTest, OracleReportsStates) {
  const CliRun r = Cli("oracle --quantity prob --predicate has-edge --n 4 --k 3 --p 0.5 --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"enumerated_states\":1296"), std::string::npos) << r.out;
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Cli("mc --n 5 --k 3 --p 1.5").code, 2);
  EXPECT_EQ(Cli("mc --n 5 --k 3 --p 0.5 --property planar").code, 2);
  EXPECT_EQ(Cli("exact --quantity nonsense --p 0.5").code, 2);
  EXPECT_EQ(Cli("generate --n 5 --k 3").code, 2);
  EXPECT_EQ(Cli("oracle --quantity triangles --n 7 --k 3 --p 0.5 --budget 1000").code, 3);
  EXPECT_EQ(Cli("couple --n 8 --k 3 --p1 0.5 --p2 0.2").code, 2);
  EXPECT_EQ(Cli("--help").code, 0);
}

TEST(CliTest, ConfigFile) {
  const std::string path = ::testing::TempDir() + "/cli_config.json";
  {
    std::ofstream out(path);
    out << R"({"model": "complete-k", "n": 8, "k": 3, "p": [0.1],
               "property": "has-edge", "trials": 100, "seed": 2})";
  }
  const CliRun a = Cli("mc --config " + path);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, Cli("mc --n 8 --k 3 --p 0.1 --property has-edge --trials 100 --seed 2").out);
  {
    std::ofstream out(path);
    out << R"({"n": 8, "p": 0.1, "extra": true})";
  }
  EXPECT_EQ(Cli("mc --config " + path).code, 2);
}

}  // namespace
