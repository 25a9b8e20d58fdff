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

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "discdm/error.hpp"
#include "discdm/io.hpp"
#include "support/reference_tables.hpp"

using namespace discdm;

namespace {

const DecisionProblem& solar() {
  static const DecisionProblem p = load_problem(ref::kSolarProblem);
  return p;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

Json solar_json() { return problem_to_json(solar()); }

}  // namespace

TEST_CASE("the solar problem loads with its declared shape") {
  const DecisionProblem& p = solar();
  CHECK(p.alternatives.size() == 5);
  CHECK(p.criteria.size() == 4);
  CHECK(p.criteria[1].kind == CriterionKind::Cost);
  CHECK(p.experts == std::vector<std::string>{"E1", "E2", "E3"});
  CHECK(p.expert_weights[2] == 0.2);
  CHECK(p.scale == LinguisticScale::standard());
}

TEST_CASE("canonical serialisation round-trips") {
  const Json once = solar_json();
  const DecisionProblem back = problem_from_json(once);
  CHECK(back == solar());
  CHECK(problem_to_json(back).dump() == once.dump());
  CHECK(parse_problem(once.dump(2)) == solar());
}

TEST_CASE("scale overrides are read and written back") {
  Json j = solar_json();
  j["scale"] = {{"VH", {0.85, 0.1, 0.9}}, {"XT", {0.2, 0.2, 0.2}}};
  const DecisionProblem p = problem_from_json(j);
  CHECK(p.scale.lookup("VH") == Difv::make(0.85, 0.1, 0.9));
  CHECK(p.scale.lookup("M") == Difv::make(0.5, 0.5, 0.5));
  const Json out = problem_to_json(p);
  CHECK(out["scale"].size() == 2);
  CHECK(problem_from_json(out) == p);
}

TEST_CASE("schema errors name the offending node") {
  Json j = solar_json();
  j["criteria"][1]["kind"] = "neutral";
  CHECK_THROWS_WITH_AS(problem_from_json(j), doctest::Contains("/criteria/1/kind"), InputError);

  j = solar_json();
  j["assessments"]["E2"]["P3"]["T1"] = 7;
  CHECK_THROWS_WITH_AS(problem_from_json(j), doctest::Contains("/assessments/E2/P3/T1"), InputError);

  j = solar_json();
  j["extra"] = true;
  CHECK_THROWS_WITH_AS(problem_from_json(j), doctest::Contains("/extra"), InputError);

  j = solar_json();
  j["scale"] = {{"VH", {0.8, 0.3, 0.9}}};
  CHECK_THROWS_WITH_AS(problem_from_json(j), doctest::Contains("/scale/VH"), InputError);

  j = solar_json();
  j["assessments"]["E1"].erase("P4");
  CHECK_THROWS_WITH_AS(problem_from_json(j), doctest::Contains("P4"), InputError);

  j = solar_json();
  j["experts"][0]["weight"] = 0.9;
  CHECK_THROWS_AS(problem_from_json(j), InputError);
}

TEST_CASE("malformed JSON reports line and column") {
  const std::string text = "{\n  \"criteria\": [\n    {\"name\": \"T1\",, }\n  ]\n}";
  CHECK_THROWS_WITH_AS(parse_problem(text), doctest::Contains("<input>:3:"), InputError);
  CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), InputError);
}

TEST_CASE("replacement files") {
  const Replacement r = load_replacement(ref::kSolarReplacement, solar());
  CHECK(r.target == "P3");
  CHECK(r.name == "P'3");
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0] == std::vector<std::string>{"M", "L", "L", "ML"});
  CHECK(r.rows[2] == std::vector<std::string>{"L", "EL", "L", "VL"});

  Json j = {{"target", "P3"}, {"assessments", {{"E1", {{"T1", "M"}}}}}};
  CHECK_THROWS_AS(replacement_from_json(j, solar()), InputError);
  j = {{"target", "P8"}, {"assessments", Json::object()}};
  CHECK_THROWS_AS(replacement_from_json(j, solar()), InputError);
}

TEST_CASE("subset lists") {
  const auto s = parse_subsets("P1,P2, P3;P4,P5");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == std::vector<std::string>{"P1", "P2", "P3"});
  CHECK(s[1] == std::vector<std::string>{"P4", "P5"});
  CHECK_THROWS_AS(parse_subsets(""), InputError);
  CHECK_THROWS_AS(parse_subsets("P1,,P2"), InputError);
}

TEST_CASE("result JSON carries provenance") {
  const RankingResult r = run_caspas(solar(), CaspasConfig{});
  const Json j = to_json(r);
  CHECK(j["order"] == r.order_label());
  CHECK(j["alternatives"].size() == 5);
  CHECK(j["alternatives"][0]["rank"] == 1);
  CHECK(j["provenance"]["config"]["epsilon"] == 0.3);
  CHECK(j["provenance"]["measure"].size() == 16);
  CHECK(j["provenance"]["measure"].contains("{T1,T3}"));
  CHECK(j["provenance"]["measure"]["{}"] == 0.0);
  CHECK(j["provenance"]["aggregated_matrix"]["P2"]["T4"]["mu"].is_number());
  CHECK_NOTHROW(require_finite(j));
}

TEST_CASE("CSV numbers are the JSON numbers at six decimals") {
  const RankingResult r = run_caspas(solar(), CaspasConfig{});
  const Json j = to_json(r);
  const auto rows = csv_rows(to_csv(r));
  REQUIRE(rows.size() == 6);
  CHECK(rows[0][0] == "alternative");
  for (std::size_t i = 0; i < 5; ++i) {
    const Json& a = j["alternatives"][i];
    CHECK(rows[i + 1][0] == a["name"]);
    CHECK(rows[i + 1][8] == format_fixed6(a["sd"]["mu"].get<double>()));
    CHECK(rows[i + 1][11] == format_fixed6(a["score"].get<double>()));
    CHECK(std::abs(std::stod(rows[i + 1][11]) - a["score"].get<double>()) <= 5e-7);
  }
}

TEST_CASE("measure CSV lists every subset") {
  const FuzzyMeasure m = build_lambda_measure(LambdaParams(0.5, WeightVector({0.326, 0.258, 0.232, 0.184})));
  const auto rows = csv_rows(measure_to_csv(m, {"T1", "T2", "T3", "T4"}));
  CHECK(rows.size() == 17);
}

TEST_CASE("non-finite numbers are refused") {
  Json j = {{"a", {1.0, std::numeric_limits<double>::quiet_NaN()}}};
  CHECK_THROWS_WITH_AS(require_finite(j), doctest::Contains("/a/1"), ComputationError);
  CHECK_THROWS_AS(format_fixed6(INFINITY), ComputationError);
  CHECK(format_fixed6(-1e-9) == "0.000000");
  CHECK(format_fixed6(0.5961234567) == "0.596123");
}
