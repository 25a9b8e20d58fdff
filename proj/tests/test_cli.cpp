/*
 * Copyright 2026 The discdm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <json.hpp>

#include "support/reference_tables.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and returns its exit code and stdout.
Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" DISCDM_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / ("discdm_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("solve prints a JSON document") {
  const Run r = cli("solve " + quoted(ref::kSolarProblem));
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["command"] == "solve");
  CHECK(j["result"]["alternatives"].size() == 5);
  CHECK(j["result"]["provenance"]["config"]["family"] == "q");
}

TEST_CASE("solve can write CSV") {
  const Run r = cli("solve --family p --format csv " + quoted(ref::kSolarProblem));
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("alternative,rank,", 0) == 0);
}

TEST_CASE("compare reports the same CASPAS result as solve") {
  const Run s = cli("solve --epsilon 0.4 " + quoted(ref::kSolarProblem));
  const Run c = cli("compare --epsilon 0.4 " + quoted(ref::kSolarProblem));
  REQUIRE(s.status == 0);
  REQUIRE(c.status == 0);
  const Json cj = Json::parse(c.out);
  CHECK(cj["results"]["caspas"] == Json::parse(s.out)["result"]);
  CHECK(cj["results"]["topsis"]["beta"] == 3);
  CHECK(cj["results"].contains("wsmwpm"));
}

TEST_CASE("sweep and validate succeed on the example") {
  const Run s = cli("sweep --axis xi --grid 0.1:0.9:0.1 " + quoted(ref::kSolarProblem));
  REQUIRE(s.status == 0);
  CHECK(Json::parse(s.out)["result"]["grid"].size() == 9);

  const Run v = cli("validate --xi 0.5 --replacement " + quoted(ref::kSolarReplacement) + " " +
                    quoted(ref::kSolarProblem));
  REQUIRE(v.status == 0);
  const Json j = Json::parse(v.out);
  CHECK(j["condition1"]["pass"] == true);
  CHECK(j["conditions_2_3"]["condition2"]["pass"] == true);
}

TEST_CASE("measure prints every subset") {
  const Run r = cli("measure --lambda 0.5 --weights 0.326,0.258,0.232,0.184");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["measure"].size() == 16);
  CHECK(std::abs(j["measure"]["{T1,T2,T3}"].get<double>() - 0.784329) <= 1e-5);
}

TEST_CASE("input problems exit with code 2 and print nothing") {
  const fs::path dir = scratch_dir();
  write_file(dir / "broken.json", "{\"criteria\": [");
  Run r = cli("solve " + quoted((dir / "broken.json").string()));
  CHECK(r.status == 2);
  CHECK(r.out.empty());

  r = cli("sweep --grid 0.9:0.1:0.1 " + quoted(ref::kSolarProblem));
  CHECK(r.status == 2);
  CHECK(r.out.empty());

  r = cli("measure --weights 0.5,0.6");
  CHECK(r.status == 2);
  CHECK(cli("measure --renormalize --weights 0.5,0.6").status == 0);

  CHECK(cli("solve --epsilon 1.5 " + quoted(ref::kSolarProblem)).status == 2);
  CHECK(cli("solve --family z " + quoted(ref::kSolarProblem)).status == 2);
  CHECK(cli("solve").status == 2);
  CHECK(cli("compare --methods caspas,ahp " + quoted(ref::kSolarProblem)).status == 2);
  fs::remove_all(dir);
}

TEST_CASE("replacing the best alternative exits with code 3") {
  const fs::path dir = scratch_dir();
  write_file(dir / "p1.json", R"({"target": "P1", "assessments": {
    "E1": {"T1": "M", "T2": "M", "T3": "M", "T4": "M"},
    "E2": {"T1": "M", "T2": "M", "T3": "M", "T4": "M"},
    "E3": {"T1": "M", "T2": "M", "T3": "M", "T4": "M"}}})");
  const Run r = cli("validate --replacement " + quoted((dir / "p1.json").string()) + " " + quoted(ref::kSolarProblem));
  CHECK(r.status == 3);
  CHECK(r.out.empty());
  fs::remove_all(dir);
}

TEST_CASE("relative --out paths resolve against DISCDM_OUTPUT_DIR") {
  const fs::path dir = scratch_dir();
  const Run r = cli("solve --out result.json " + quoted(ref::kSolarProblem), "DISCDM_OUTPUT_DIR=" + quoted(dir.string()));
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  REQUIRE(fs::exists(dir / "result.json"));
  CHECK(Json::parse(read_file(dir / "result.json"))["command"] == "solve");

  const Run bad = cli("solve --epsilon 2 --out fail.json " + quoted(ref::kSolarProblem),
                      "DISCDM_OUTPUT_DIR=" + quoted(dir.string()));
  CHECK(bad.status == 2);
  CHECK_FALSE(fs::exists(dir / "fail.json"));
  fs::remove_all(dir);
}
