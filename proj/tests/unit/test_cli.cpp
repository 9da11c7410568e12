// Copyright 2026 The corruption-bench Authors
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

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

namespace fs = std::filesystem;
using cbench::testing::TempDir;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(CBENCH_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit codes of the command-line tool") {
  TempDir tmp("cli");
  const std::string d = tmp.path().string();
  REQUIRE(run("make-corpus " + d + "/src --count 2 --size 32 --classes 4") == 0);
  REQUIRE(run("gen-c " + d + "/src " + d + "/ds --kinds fog,snow --format png") == 0);
  REQUIRE(run("predict " + d + "/ds --classifier constant --out " + d + "/log.jsonl") == 0);
  CHECK(run("validate " + d + "/ds --log " + d + "/log.jsonl") == 0);
  CHECK(run("eval " + d + "/ds " + d + "/log.jsonl --labels " + d + "/src/labels.tsv --out " + d + "/r.json") == 0);
  CHECK(run("report " + d + "/r.json --format csv --out " + d + "/r.csv") == 0);
  CHECK(run("report " + d + "/r.csv --format json --out " + d + "/r2.json") == 0);
  CHECK(slurp(d + "/r.json") == slurp(d + "/r2.json"));
  CHECK(run("profiles list") == 0);

  // validation failures
  {
    const std::string log = slurp(d + "/log.jsonl");
    std::ofstream(d + "/short.jsonl") << log.substr(0, log.find('\n') + 1);
  }
  CHECK(run("validate " + d + "/ds --log " + d + "/short.jsonl") == 1);
  CHECK(run("eval " + d + "/ds " + d + "/short.jsonl --labels " + d + "/src/labels.tsv") == 1);
  std::ofstream(d + "/ds/fog/1/img_000.png", std::ios::app) << "x";
  CHECK(run("validate " + d + "/ds") == 1);
  CHECK(run("validate " + d + "/ds --skip-files") == 0);
  std::ofstream(d + "/bad.jsonl") << "{\"id\": \n";
  CHECK(run("eval " + d + "/ds " + d + "/bad.jsonl --labels " + d + "/src/labels.tsv") == 1);

  // I/O and format failures
  CHECK(run("validate " + d + "/missing") == 2);
  CHECK(run("eval " + d + "/ds " + d + "/log.jsonl --labels " + d + "/nolabels.tsv") == 2);
  std::ofstream(d + "/bad.json") << "{}";
  CHECK(run("report " + d + "/bad.json") == 2);

  // usage and parameter errors
  CHECK(run("") == 3);
  CHECK(run("gen-c") == 3);
  CHECK(run("frobnicate") == 3);
  CHECK(run("gen-c " + d + "/src " + d + "/x --kinds fog --severities 6") == 3);
  CHECK(run("eval " + d + "/ds " + d + "/log.jsonl --labels " + d + "/src/labels.tsv --stride 3") == 3);
  CHECK(run("profiles show nonexistent") != 0);
}
