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
#include "discdm/comparators.hpp"

#include <algorithm>
#include <cmath>

#include "discdm/error.hpp"

namespace discdm {

Difv wsm(std::span<const Difv> row, const WeightVector& w, Family f) { return weighted_arithmetic(row, w, f); }

Difv wpm(std::span<const Difv> row, const WeightVector& w, Family f) { return weighted_geometric(row, w, f); }

std::vector<std::string> BaselineResult::names() const {
  std::vector<std::string> out;
  for (const auto& a : alternatives) out.push_back(a.name);
  return out;
}

BaselineResult run_weighted_baseline(const DecisionProblem& problem, const CaspasConfig& config) {
  in_stage("config", [&] { config.validate(); });
  BaselineResult res;
  const DifvMatrix matrix = in_stage("aggregate_experts", [&] {
    return aggregate_experts(normalize(problem), problem.expert_weights, config);
  });
  res.criteria_weights = in_stage("criteria_weights", [&] { return derive_criteria_weights(problem, config); });
  const ScoreParams sp = config.score_params();
  std::vector<Difv> sds;
  for (std::size_t a = 0; a < matrix.size(); ++a) {
    BaselineAlternative r;
    r.name = problem.alternatives[a];
    r.wsm = wsm(matrix[a], res.criteria_weights, config.family);
    r.wpm = wpm(matrix[a], res.criteria_weights, config.family);
    r.sd = significance_degree(r.wsm, r.wpm, config.epsilon, config.family);
    r.score = score(r.sd, sp);
    r.accuracy = accuracy(r.sd, sp);
    sds.push_back(r.sd);
    res.alternatives.push_back(std::move(r));
  }
  res.ranking = rank(sds, sp);
  return res;
}

TopsisParams::TopsisParams(int beta) : beta_(beta) {
  if (beta < 1) throw InputError("beta = " + std::to_string(beta) + " must be a positive integer");
}

double minkowski_distance(const Difv& a, const Difv& b, const TopsisParams& p) {
  const double beta = p.beta();
  const double dm = std::pow(std::abs(a.mu() - b.mu()), beta);
  const double dn = std::pow(std::abs(a.nu() - b.nu()), beta);
  return 0.5 * (std::abs(a.r() - b.r()) / kSqrt2 + std::pow(0.5 * (dm + dn), 1.0 / beta));
}

std::vector<std::string> ClosenessResult::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.name);
  return out;
}

ClosenessResult cif_topsis(const DifvMatrix& matrix, const WeightVector& w, const TopsisParams& p,
                           Family f, const std::vector<std::string>& names) {
  if (matrix.empty()) throw InputError("TOPSIS needs at least one alternative");
  if (!names.empty() && names.size() != matrix.size()) {
    throw InputError("got " + std::to_string(names.size()) + " names for " + std::to_string(matrix.size()) +
                     " alternatives");
  }
  ClosenessResult res;
  for (std::size_t a = 0; a < matrix.size(); ++a) {
    ClosenessEntry e;
    e.name = names.empty() ? std::to_string(a) : names[a];
    e.aggregate = weighted_geometric(matrix[a], w, f);
    res.entries.push_back(std::move(e));
  }

  double mu_hi = 0.0, mu_lo = 1.0, nu_hi = 0.0, nu_lo = 1.0, r_hi = 0.0;
  for (const auto& e : res.entries) {
    mu_hi = std::max(mu_hi, e.aggregate.mu());
    mu_lo = std::min(mu_lo, e.aggregate.mu());
    nu_hi = std::max(nu_hi, e.aggregate.nu());
    nu_lo = std::min(nu_lo, e.aggregate.nu());
    r_hi = std::max(r_hi, e.aggregate.r());
  }
  // Componentwise extremes of valid values stay valid: mu_hi + nu_lo is at
  // most the mu + nu of whichever alternative holds mu_hi.
  res.ideal = Difv::from_computed(mu_hi, nu_lo, r_hi);
  res.anti_ideal = Difv::from_computed(mu_lo, nu_hi, r_hi);
  res.degenerate = mu_hi == mu_lo && nu_hi == nu_lo;

  std::vector<double> closeness;
  for (auto& e : res.entries) {
    e.distance_to_ideal = minkowski_distance(e.aggregate, res.ideal, p);
    e.distance_to_anti_ideal = minkowski_distance(e.aggregate, res.anti_ideal, p);
    const double denom = e.distance_to_ideal + e.distance_to_anti_ideal;
    if (!res.degenerate && denom > 0.0) e.closeness = e.distance_to_anti_ideal / denom;
    closeness.push_back(e.closeness.value_or(0.0));
  }
  if (res.degenerate) std::fill(closeness.begin(), closeness.end(), 0.0);
  res.ranking = rank_scalars(closeness);
  return res;
}

ClosenessResult run_topsis(const DecisionProblem& problem, const CaspasConfig& config, const TopsisParams& p,
                           Family f) {
  in_stage("config", [&] { config.validate(); });
  const DifvMatrix matrix = in_stage("aggregate_experts", [&] {
    return aggregate_experts(normalize(problem), problem.expert_weights, config);
  });
  const WeightVector w = in_stage("criteria_weights", [&] { return derive_criteria_weights(problem, config); });
  return in_stage("topsis", [&] { return cif_topsis(matrix, w, p, f, problem.alternatives); });
}

}  // namespace discdm
