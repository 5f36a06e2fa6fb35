// Copyright 2026 The hkstar Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hkstar/cli.hpp"

using hkstar::CommandResult;
using hkstar::run_command;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(HKSTAR_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("count and profile") {
  const auto r = run_command({"count", "--tree", "perfect:2:3", "--vertex", "3", "--k", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "5\n");
  CHECK(run_command({"profile", "--tree", "perfect:2:2"}).out == "[1, 3, 1]\n");
  CHECK(run_command({"profile", "--tree", "perfect:2:2", "--vertex", "0"}).out == "[0, 1, 0]\n");
  CHECK(run_command({"classes", "--tree", "perfect:2:3", "--v", "0", "--leaf", "3", "--k", "2"}).out ==
        "a=3 b=4 c=1\n");
}

TEST_CASE("map prints the set then the trace") {
  const auto r = run_command({"map", "--tree", "perfect:2:4", "--v", "0", "--set", "0,3", "--trace"});
  CHECK(r.exit_code == 0);
  const auto out = lines(r.out);
  REQUIRE(out.size() >= 2);
  CHECK(out[0] == "2,7");
  CHECK(out.back().find("\"terminate\"") != std::string::npos);
  CHECK(run_command({"map", "--tree", "perfect:2:4", "--v", "0", "--set", "0,3"}).out == "2,7\n");
}

TEST_CASE("cas reproduces the golden trace") {
  const auto r = run_command({"cas", "--td", "perfect:2:3", "--tu", "perfect:2:4", "--set",
                              "u0,u3,u4,u11,u12,u13,u14,d1,d5", "--trace"});
  CHECK(r.exit_code == 0);
  const auto first_newline = r.out.find('\n');
  CHECK(r.out.substr(0, first_newline) == "d0,d3,d4,d5,u1,u11,u12,u13,u14");
  CHECK(r.out.substr(first_newline + 1) == read_golden("cas_example_trace.jsonl"));
}

TEST_CASE("best-leaf") {
  CHECK(run_command({"best-leaf", "--forest", "perfect:3:3+perfect:3:4"}).out == "tree=0 leaf=4 rule=shortest-odd\n");
  const std::string path = "hkstar_cli_test_forest.txt";
  {
    std::ofstream f(path);
    f << "perfect:2:2\n\nperfect:2:4\n";
  }
  const auto r = run_command({"best-leaf", "--forest", path});
  std::remove(path.c_str());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "tree=1 leaf=10 rule=all-even-tallest\n");
}

TEST_CASE("verify emits one verdict per line") {
  const auto r = run_command({"verify", "main", "--tree", "perfect:2:4"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"check\":\"theorem-main\",\"passed\":true,\"instances\":150,\"witness\":null}\n");
  const auto hk = run_command({"verify", "hk", "--n-max", "6", "--k-max", "3", "--workers", "2", "--all"});
  CHECK(hk.exit_code == 0);
  CHECK(lines(hk.out).size() > 6);
  const auto f = run_command({"verify", "forest", "--forest", "perfect:2:2+perfect:3:2"});
  CHECK(f.exit_code == 0);
  CHECK(lines(f.out).size() == 1);
  const auto pool = run_command({"verify", "forest", "--max-vertices", "12", "--lemmas"});
  CHECK(pool.exit_code == 0);
  CHECK(lines(pool.out).size() >= 2);
  CHECK(pool.out.find("lemma") != std::string::npos);
}

TEST_CASE("enum-trees") {
  const auto r = run_command({"enum-trees", "--n", "6"});
  CHECK(r.exit_code == 0);
  CHECK(lines(r.out).size() == 6);
}

TEST_CASE("errors map to exit codes") {
  const auto bad = run_command({"count", "--tree", "perfect:1:3", "--vertex", "0", "--k", "1"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("arity") != std::string::npos);
  CHECK(run_command({}).exit_code == 2);
  CHECK(run_command({"frobnicate"}).exit_code == 2);
  CHECK(run_command({"map", "--tree", "perfect:2:4", "--v", "0", "--set", "0,1"}).exit_code == 2);
  CHECK(run_command({"map", "--tree", "perfect:2:4", "--v", "7", "--set", "7"}).exit_code == 2);
  CHECK(run_command({"count", "--tree", "/no/such/file", "--vertex", "0", "--k", "1"}).exit_code == 2);
  CHECK(run_command({"verify", "bogus"}).exit_code == 2);
}
