// Copyright 2026 The kgon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the kgon binary end to end.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;

struct Result {
  int status = -1;
  std::string out;
};

Result RunKgon(const std::string& args) {
  const std::string command = std::string(KGON_CLI_PATH) + " " + args + " 2>/dev/null";
  Result result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  std::size_t read = 0;
  while ((read = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), read);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string Data(const std::string& name) { return std::string(KGON_TEST_DATA_DIR) + "/" + name; }

TEST(Cli, SolveSquare) {
  const Result r = RunKgon("solve --k 4 --algo sweep " + Data("square.txt"));
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["solution"]["indices"], json::array({0, 1, 2, 3}));
  EXPECT_EQ(doc["solution"]["twice_area"], 8);
  EXPECT_EQ(doc["input"]["n"], 4);
}

TEST(Cli, SolveAlgorithmsAgreeOnPaperPolygon) {
  std::string first;
  for (const char* algo : {"brute", "sweep", "dp"}) {
    const Result r = RunKgon(std::string("solve --k 4 --algo ") + algo + " " + Data("paper16.txt"));
    ASSERT_EQ(r.status, 0) << algo;
    const json doc = json::parse(r.out);
    EXPECT_EQ(doc["solution"]["indices"], json::array({3, 7, 11, 15}));
    if (first.empty()) first = doc["solution"].dump();
    EXPECT_EQ(doc["solution"].dump(), first);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(RunKgon("solve --k 4 " + Data("collinear.txt")).status, 1);
  EXPECT_EQ(RunKgon("solve --k 9 " + Data("square.txt")).status, 1);
  EXPECT_EQ(RunKgon("solve --k 3 --algo sweep " + Data("square.txt")).status, 1);
  EXPECT_EQ(RunKgon("solve " + Data("square.txt")).status, 2);
  EXPECT_EQ(RunKgon("").status, 2);
  EXPECT_EQ(RunKgon("bogus").status, 2);
  EXPECT_EQ(RunKgon("solve --k 4 --algo quantum " + Data("square.txt")).status, 2);
  EXPECT_EQ(RunKgon("ds --root 1 --all-roots " + Data("square.txt")).status, 2);
  EXPECT_EQ(RunKgon("stability " + Data("square.txt")).status, 2);
  EXPECT_EQ(RunKgon("solve --k 4 /nonexistent/file.txt").status, 1);
  EXPECT_EQ(RunKgon("--help").status, 0);
}

TEST(Cli, DomainErrorIsJson) {
  const Result r = RunKgon("solve --k 4 " + Data("collinear.txt"));
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["error"]["code"], "NotStrictlyConvex");
  EXPECT_EQ(doc["error"]["where"], json::array({0, 1, 2}));
}

TEST(Cli, DsSingleRootWithTrace) {
  const Result r = RunKgon("ds --variant literal --root 0 --trace " + Data("paper16.txt"));
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["run"]["best"]["indices"], json::array({0, 3, 7, 11}));
  EXPECT_TRUE(doc["run"]["trace"].is_array());
  EXPECT_FALSE(doc["run"]["trace"].empty());
}

TEST(Cli, DsAllRoots) {
  const Result r = RunKgon("ds --variant prose --all-roots " + Data("hexagon.json"));
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["runs"].size(), 6u);
  EXPECT_EQ(doc["best"]["twice_area"], 16);
}

TEST(Cli, Stability) {
  Result r = RunKgon("stability --indices 0,3,7,11 " + Data("paper16.txt"));
  ASSERT_EQ(r.status, 0);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["stable_count"], 3);
  EXPECT_FALSE(doc["k_stable"].get<bool>());
  EXPECT_FALSE(doc["positions"][0]["stable"].get<bool>());

  r = RunKgon("stability --k 4 " + Data("paper16.txt"));
  ASSERT_EQ(r.status, 0);
  doc = json::parse(r.out);
  EXPECT_EQ(doc["count"], 1);
  EXPECT_EQ(doc["stable_polygons"][0]["indices"], json::array({3, 7, 11, 15}));

  r = RunKgon("stability --k 3 --indices 0,1,3 --strict " + Data("hexagon.json"));
  ASSERT_EQ(r.status, 0);
  doc = json::parse(r.out);
  EXPECT_EQ(doc["strictness"], "strict");
  EXPECT_FALSE(doc["positions"][1]["stable"].get<bool>());

  EXPECT_EQ(RunKgon("stability --k 4 --indices 0,1,3 " + Data("hexagon.json")).status, 1);
  EXPECT_EQ(RunKgon("stability --indices 0,3,1 " + Data("hexagon.json")).status, 1);
  EXPECT_EQ(RunKgon("stability --indices 0,x,1 " + Data("hexagon.json")).status, 2);
}

TEST(Cli, FuzzIsDeterministic) {
  const std::string args = "fuzz --n-min 5 --n-max 14 --trials 40 --seed 9 --bound 1000";
  const Result a = RunKgon(args);
  const Result b = RunKgon(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const json doc = json::parse(a.out);
  EXPECT_EQ(doc["report"]["summary"]["trials"], 40);
  EXPECT_EQ(doc["report"]["config"]["variants"], json::array({"literal", "prose"}));
  EXPECT_EQ(RunKgon("fuzz --n-min 3 --n-max 5 --trials 1 --seed 1 --bound 100").status, 1);
}

TEST(Cli, Repro) {
  const Result r = RunKgon("repro");
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  EXPECT_TRUE(doc["report"]["confirmed"].get<bool>());
  EXPECT_EQ(doc["report"]["optimal"]["indices"], json::array({3, 7, 11, 15}));
  EXPECT_EQ(RunKgon("repro --variant prose").status, 0);
}

TEST(Cli, Render) {
  const auto out = std::filesystem::temp_directory_path() / "kgon_cli_test.svg";
  const Result r = RunKgon("render " + Data("paper16.txt") + " --overlay 3,7,11,15 --overlay " +
                       "0,3,7,11:reported --out " + out.string());
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["overlays"][0]["label"], "a_4 a_8 a_12 a_16");
  EXPECT_EQ(doc["overlays"][1]["label"], "reported");
  std::ifstream in(out);
  std::stringstream svg;
  svg << in.rdbuf();
  EXPECT_EQ(svg.str().rfind("<svg", 0), 0u);
  EXPECT_EQ(doc["bytes"], svg.str().size());
  std::filesystem::remove(out);
  EXPECT_EQ(RunKgon("render " + Data("square.txt") + " --overlay 0,1,9 --out " + out.string()).status,
            1);
}

}  // namespace
