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

// Group decision pipeline: linguistic assessments are normalised, merged
// across experts, and each alternative is scored by blending a Choquet sum
// model (CSM) with a Choquet product model (CPM) over a lambda-measure built
// from expert-rated criteria importance.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "discdm/aggregation.hpp"
#include "discdm/difv.hpp"
#include "discdm/fuzzy_measure.hpp"
#include "discdm/weights.hpp"

namespace discdm {

enum class CriterionKind { Benefit, Cost };

std::string to_string(CriterionKind k);
CriterionKind parse_criterion_kind(const std::string& s);

struct CriterionSpec {
  std::string name;
  CriterionKind kind = CriterionKind::Benefit;

  friend bool operator==(const CriterionSpec&, const CriterionSpec&) = default;
};

/// Term codes for one expert: [alternative][criterion].
using TermMatrix = std::vector<std::vector<std::string>>;

struct DecisionProblem {
  std::vector<std::string> alternatives;
  std::vector<CriterionSpec> criteria;
  std::vector<std::string> experts;
  WeightVector expert_weights;
  /// [expert][alternative][criterion]
  std::vector<TermMatrix> assessments;
  /// [expert][criterion]
  TermMatrix criteria_importance;
  LinguisticScale scale = LinguisticScale::standard();

  /// Checks names, dimensions and that every code resolves. Throws InputError.
  void validate() const;

  std::size_t alternative_index(const std::string& name) const;
  std::vector<std::string> criterion_names() const;

  /// Same problem restricted to `names`, kept in the given order.
  DecisionProblem subproblem(const std::vector<std::string>& names) const;

  /// Replaces the assessments of alternative `target`. `rows` is
  /// [expert][criterion]. The alternative is renamed to `new_name` if given.
  DecisionProblem with_replacement(const std::string& target, const TermMatrix& rows,
                                   const std::optional<std::string>& new_name = std::nullopt) const;

  friend bool operator==(const DecisionProblem&, const DecisionProblem&) = default;
};

struct CaspasConfig {
  double epsilon = 0.3;
  double xi = 0.8;
  double lambda = 0.5;
  /// Radius family of the CSM/CPM/SD stages.
  Family family = Family::Q;
  /// Operator and family used to merge experts, both for assessments and for
  /// criteria importance.
  Operator expert_aggregator = Operator::Arithmetic;
  Family expert_family = Family::Q;

  /// Throws InputError on out-of-range parameters.
  void validate() const;
  ScoreParams score_params() const { return ScoreParams(xi); }
};

using DifvMatrix = std::vector<std::vector<Difv>>;
using DifvTensor = std::vector<DifvMatrix>;

/// [expert][alternative][criterion]; cost cells are complemented.
DifvTensor normalize(const DecisionProblem& problem);

/// Merges the expert axis cell by cell.
DifvMatrix aggregate_experts(const DifvTensor& tensor, const WeightVector& expert_weights,
                             const CaspasConfig& config);

/// Merged importance value for each criterion.
std::vector<Difv> aggregate_importance(const DecisionProblem& problem, const CaspasConfig& config);

/// w_j = S_j / sum S over the merged importance values. Throws
/// ComputationError when every score is zero.
WeightVector derive_criteria_weights(const DecisionProblem& problem, const CaspasConfig& config);

Difv compute_csm(std::span<const Difv> row, const FuzzyMeasure& m, const CaspasConfig& config);
Difv compute_cpm(std::span<const Difv> row, const FuzzyMeasure& m, const CaspasConfig& config);

/// epsilon*CSM (+) (1-epsilon)*CPM in family f; returns CPM at epsilon = 0 and
/// CSM at epsilon = 1.
Difv significance_degree(const Difv& csm, const Difv& cpm, double epsilon, Family f);

/// Descending order with explicit ties. `order[i]` is an input index and
/// `tier[i]` its 0-based rank group; equal tiers mean compare() found a tie.
struct Ranking {
  std::vector<std::size_t> order;
  std::vector<std::size_t> tier;

  std::size_t best() const { return order.front(); }
  /// "P1>P4>P2=P3" style label.
  std::string label(const std::vector<std::string>& names) const;

  friend bool operator==(const Ranking&, const Ranking&) = default;
};

/// Ranks by compare() on the given values; ties keep input order.
Ranking rank(std::span<const Difv> values, const ScoreParams& p);

/// Ranks plain numbers, larger first. Values are quantised to 1e-12 before
/// comparison so rounding noise does not split ties.
Ranking rank_scalars(std::span<const double> values);

struct AlternativeResult {
  std::string name;
  Difv csm;
  Difv cpm;
  Difv sd;
  double score = 0.0;
  double accuracy = 0.0;
};

struct Provenance {
  CaspasConfig config;
  std::vector<std::string> criteria;
  std::vector<Difv> aggregated_importance;
  WeightVector criteria_weights;
  FuzzyMeasure measure;
  DifvTensor normalized;
  DifvMatrix aggregated;
};

struct RankingResult {
  std::vector<AlternativeResult> alternatives;
  Ranking ranking;
  Provenance provenance;

  std::vector<std::string> names() const;
  std::string order_label() const { return ranking.label(names()); }
  const AlternativeResult& best() const { return alternatives[ranking.best()]; }
};

/// Full pipeline. Errors carry the name of the failing stage.
RankingResult run_caspas(const DecisionProblem& problem, const CaspasConfig& config);

}  // namespace discdm
