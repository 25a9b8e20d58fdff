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

// Parameter sweeps and ranking-validity checks built on run_caspas.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discdm/caspas.hpp"

namespace discdm {

enum class SweepAxis { Epsilon, Xi };

std::string to_string(SweepAxis a);
SweepAxis parse_axis(const std::string& s);

/// Inclusive grid from..to in steps of `step`, values snapped to 1e-12 so
/// 0.1:0.9:0.1 yields nine points. Throws InputError when the grid is empty
/// or leaves [0, 1].
std::vector<double> make_grid(double from, double to, double step);

/// Parses "a:b:step".
std::vector<double> parse_grid(const std::string& spec);

struct SweepPoint {
  double value = 0.0;
  RankingResult q;
  RankingResult p;
};

/// Maximal run of consecutive grid points with the same ranking label.
struct SweepSegment {
  double from = 0.0;
  double to = 0.0;
  std::string order;
};

struct SweepReport {
  SweepAxis axis = SweepAxis::Epsilon;
  std::vector<double> grid;
  std::vector<SweepPoint> points;
  std::vector<SweepSegment> segments_q;
  std::vector<SweepSegment> segments_p;
};

/// Runs the pipeline at each grid point for both families; the config's
/// own family is ignored. Throws InputError unless the grid is strictly
/// increasing within [0, 1].
SweepReport sweep(const DecisionProblem& problem, const CaspasConfig& config, SweepAxis axis,
                  const std::vector<double>& grid);

std::vector<SweepSegment> segments_of(const std::vector<double>& grid, const std::vector<std::string>& orders);

struct Replacement {
  std::string target;
  /// Name the replaced alternative takes; the target name when empty.
  std::string name;
  /// [expert][criterion] term codes.
  TermMatrix rows;
};

struct Condition1Report {
  std::string target;
  std::string replacement_name;
  std::string best_before;
  std::string best_after;
  std::string order_before;
  std::string order_after;
  bool pass = false;
};

/// Reruns the pipeline with the target's assessments replaced. Throws
/// ComputationError when the target is the current best, or when its
/// replaced aggregated row is strictly better than the original (the
/// replacement must not improve the alternative).
Condition1Report validity_condition1(const DecisionProblem& problem, const CaspasConfig& config,
                                     const Replacement& replacement);

struct SubRanking {
  std::vector<std::string> alternatives;
  std::string order;
  Ranking ranking;
};

struct Condition23Report {
  std::string full_order;
  std::vector<SubRanking> subs;
  /// The union of pairwise verdicts from all sub-rankings is acyclic.
  bool condition2 = false;
  /// A cycle witness when condition2 fails, first name repeated at the end.
  std::vector<std::string> cycle;
  /// Copeland merge of the sub-ranking verdicts, ties as "=".
  std::string merged_order;
  std::map<std::string, int> copeland;
  bool condition3 = false;
  /// Criteria weights and measure were identical in every sub-problem.
  bool weights_invariant = false;
};

/// Every subset leaving out one alternative, in alternative order.
std::vector<std::vector<std::string>> leave_one_out(const DecisionProblem& problem);

/// Throws InputError for subsets with fewer than two alternatives or unknown names.
Condition23Report validity_conditions_2_3(const DecisionProblem& problem, const CaspasConfig& config,
                                          const std::vector<std::vector<std::string>>& subsets);

}  // namespace discdm
