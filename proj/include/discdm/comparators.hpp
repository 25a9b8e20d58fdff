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

// Reference methods run on the same problem: the weighted sum / product
// models (WSM/WPM) in place of CSM/CPM, and a TOPSIS variant with a
// Minkowski-type distance between disc values.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "discdm/caspas.hpp"

namespace discdm {

Difv wsm(std::span<const Difv> row, const WeightVector& w, Family f);
Difv wpm(std::span<const Difv> row, const WeightVector& w, Family f);

struct BaselineAlternative {
  std::string name;
  Difv wsm;
  Difv wpm;
  Difv sd;
  double score = 0.0;
  double accuracy = 0.0;
};

struct BaselineResult {
  std::vector<BaselineAlternative> alternatives;
  Ranking ranking;
  WeightVector criteria_weights;

  std::vector<std::string> names() const;
  std::string order_label() const { return ranking.label(names()); }
};

/// WSM/WPM blended with the configured epsilon and family, using the
/// derived criteria weights.
BaselineResult run_weighted_baseline(const DecisionProblem& problem, const CaspasConfig& config);

class TopsisParams {
 public:
  /// Throws InputError unless beta >= 1.
  explicit TopsisParams(int beta = 3);
  int beta() const { return beta_; }

 private:
  int beta_;
};

/// (1/2) * ( |ra - rb| / sqrt2 + [ (|dmu|^beta + |dnu|^beta) / 2 ]^(1/beta) )
double minkowski_distance(const Difv& a, const Difv& b, const TopsisParams& p);

struct ClosenessEntry {
  std::string name;
  Difv aggregate;
  double distance_to_ideal = 0.0;
  double distance_to_anti_ideal = 0.0;
  /// Empty when both distances vanish.
  std::optional<double> closeness;
};

struct ClosenessResult {
  std::vector<ClosenessEntry> entries;
  Difv ideal;
  Difv anti_ideal;
  Ranking ranking;
  /// Every alternative shares the same (mu, nu): the ideal and anti-ideal
  /// coincide and all alternatives are reported as one tie.
  bool degenerate = false;

  std::vector<std::string> names() const;
  std::string order_label() const { return ranking.label(names()); }
};

/// Rows are aggregated with the weighted geometric operator in `f`. The
/// ideal is <(max mu, min nu); max r>, the anti-ideal <(min mu, max nu); max r>.
ClosenessResult cif_topsis(const DifvMatrix& matrix, const WeightVector& w, const TopsisParams& p,
                           Family f, const std::vector<std::string>& names = {});

/// Runs the shared front end (normalise, merge experts, derive weights) and
/// then cif_topsis.
ClosenessResult run_topsis(const DecisionProblem& problem, const CaspasConfig& config,
                           const TopsisParams& p, Family f = Family::Q);

}  // namespace discdm
