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
#pragma once

// JSON problem files and JSON/CSV result documents.

#include <string>
#include <vector>

#include <json.hpp>

#include "discdm/analysis.hpp"
#include "discdm/caspas.hpp"
#include "discdm/comparators.hpp"
#include "discdm/fuzzy_measure.hpp"

namespace discdm {

using Json = nlohmann::json;

/// Parses a problem document. Syntax errors report line and column, schema
/// errors the JSON pointer of the offending node; both as InputError.
DecisionProblem parse_problem(const std::string& text);
DecisionProblem problem_from_json(const Json& j);
DecisionProblem load_problem(const std::string& path);

/// Canonical form: object keys sorted, lists in declaration order, and only
/// scale terms that differ from the standard table.
Json problem_to_json(const DecisionProblem& p);

/// {"target": "P3", "name": "P'3", "assessments": {expert: {criterion: term}}}
Replacement replacement_from_json(const Json& j, const DecisionProblem& p);
Replacement load_replacement(const std::string& path, const DecisionProblem& p);

/// "P1,P2,P3;P2,P4,P5" -> two subsets.
std::vector<std::vector<std::string>> parse_subsets(const std::string& spec);

Json to_json(const Difv& v);
Json config_to_json(const CaspasConfig& c);
Json measure_to_json(const FuzzyMeasure& m, const std::vector<std::string>& names);
Json to_json(const RankingResult& r);
Json to_json(const BaselineResult& r);
Json to_json(const ClosenessResult& r);
Json to_json(const SweepReport& r);
Json to_json(const Condition1Report& r);
Json to_json(const Condition23Report& r);

/// Throws ComputationError naming the first non-finite number.
void require_finite(const Json& j);

/// One header row, then one row per alternative (or grid point, check,
/// subset); numbers with six decimals.
std::string to_csv(const RankingResult& r);
std::string to_csv(const BaselineResult& r);
std::string to_csv(const ClosenessResult& r);
std::string to_csv(const SweepReport& r);
/// Rows for every method present: method,alternative,rank,value,mu,nu,r where
/// value is the score, or the closeness for TOPSIS.
std::string compare_to_csv(const RankingResult* caspas, const BaselineResult* baseline,
                           const ClosenessResult* topsis);
/// One row per check: check,subject,order,pass.
std::string validity_to_csv(const Condition1Report* c1, const Condition23Report* c23);
std::string measure_to_csv(const FuzzyMeasure& m, const std::vector<std::string>& names);

std::string format_fixed6(double x);

}  // namespace discdm
