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
#include "discdm/caspas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

#include "discdm/error.hpp"

namespace discdm {

std::string to_string(CriterionKind k) { return k == CriterionKind::Benefit ? "benefit" : "cost"; }

CriterionKind parse_criterion_kind(const std::string& s) {
  if (s == "benefit") return CriterionKind::Benefit;
  if (s == "cost") return CriterionKind::Cost;
  throw InputError("unknown criterion kind '" + s + "' (expected benefit or cost)");
}

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) throw InputError(std::string("no ") + what + " declared");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError(std::string(what) + " name must not be empty");
    if (!seen.insert(n).second) throw InputError(std::string("duplicate ") + what + " name '" + n + "'");
  }
}

void require_code(const LinguisticScale& scale, const std::string& code, const std::string& where) {
  if (!scale.contains(code)) throw InputError("unknown linguistic term '" + code + "' at " + where);
}

}  // namespace

void DecisionProblem::validate() const {
  require_unique(alternatives, "alternative");
  require_unique(criterion_names(), "criterion");
  require_unique(experts, "expert");
  if (expert_weights.size() != experts.size()) {
    throw InputError("expected " + std::to_string(experts.size()) + " expert weights, got " +
                     std::to_string(expert_weights.size()));
  }
  if (assessments.size() != experts.size()) {
    throw InputError("assessments cover " + std::to_string(assessments.size()) + " experts, expected " +
                     std::to_string(experts.size()));
  }
  for (std::size_t e = 0; e < experts.size(); ++e) {
    if (assessments[e].size() != alternatives.size()) {
      throw InputError("expert " + experts[e] + " rates " + std::to_string(assessments[e].size()) +
                       " alternatives, expected " + std::to_string(alternatives.size()));
    }
    for (std::size_t a = 0; a < alternatives.size(); ++a) {
      if (assessments[e][a].size() != criteria.size()) {
        throw InputError("expert " + experts[e] + ", alternative " + alternatives[a] + ": " +
                         std::to_string(assessments[e][a].size()) + " ratings, expected " +
                         std::to_string(criteria.size()));
      }
      for (std::size_t c = 0; c < criteria.size(); ++c) {
        require_code(scale, assessments[e][a][c],
                     "assessments[" + experts[e] + "][" + alternatives[a] + "][" + criteria[c].name + "]");
      }
    }
  }
  if (criteria_importance.size() != experts.size()) {
    throw InputError("criteria importance covers " + std::to_string(criteria_importance.size()) +
                     " experts, expected " + std::to_string(experts.size()));
  }
  for (std::size_t e = 0; e < experts.size(); ++e) {
    if (criteria_importance[e].size() != criteria.size()) {
      throw InputError("expert " + experts[e] + " rates the importance of " +
                       std::to_string(criteria_importance[e].size()) + " criteria, expected " +
                       std::to_string(criteria.size()));
    }
    for (std::size_t c = 0; c < criteria.size(); ++c) {
      require_code(scale, criteria_importance[e][c],
                   "criteria_importance[" + experts[e] + "][" + criteria[c].name + "]");
    }
  }
  if (criteria.size() > kMaxCriteria) {
    throw InputError("at most " + std::to_string(kMaxCriteria) + " criteria are supported");
  }
}

std::size_t DecisionProblem::alternative_index(const std::string& name) const {
  auto it = std::find(alternatives.begin(), alternatives.end(), name);
  if (it == alternatives.end()) throw InputError("unknown alternative '" + name + "'");
  return static_cast<std::size_t>(it - alternatives.begin());
}

std::vector<std::string> DecisionProblem::criterion_names() const {
  std::vector<std::string> out;
  out.reserve(criteria.size());
  for (const auto& c : criteria) out.push_back(c.name);
  return out;
}

DecisionProblem DecisionProblem::subproblem(const std::vector<std::string>& names) const {
  if (names.empty()) throw InputError("sub-problem needs at least one alternative");
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(alternative_index(n));
  DecisionProblem out = *this;
  out.alternatives = names;
  require_unique(out.alternatives, "alternative");
  for (std::size_t e = 0; e < assessments.size(); ++e) {
    out.assessments[e].clear();
    for (std::size_t i : idx) out.assessments[e].push_back(assessments[e][i]);
  }
  return out;
}

DecisionProblem DecisionProblem::with_replacement(const std::string& target, const TermMatrix& rows,
                                                  const std::optional<std::string>& new_name) const {
  const std::size_t a = alternative_index(target);
  if (rows.size() != experts.size()) {
    throw InputError("replacement covers " + std::to_string(rows.size()) + " experts, expected " +
                     std::to_string(experts.size()));
  }
  DecisionProblem out = *this;
  for (std::size_t e = 0; e < experts.size(); ++e) {
    if (rows[e].size() != criteria.size()) {
      throw InputError("replacement row for expert " + experts[e] + " has " +
                       std::to_string(rows[e].size()) + " ratings, expected " +
                       std::to_string(criteria.size()));
    }
    out.assessments[e][a] = rows[e];
  }
  if (new_name) {
    out.alternatives[a] = *new_name;
    require_unique(out.alternatives, "alternative");
  }
  out.validate();
  return out;
}

void CaspasConfig::validate() const {
  auto unit = [](const char* name, double x) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
      std::ostringstream os;
      os << name << " = " << x << " is outside [0, 1]";
      throw InputError(os.str());
    }
  };
  unit("epsilon", epsilon);
  unit("xi", xi);
  if (!std::isfinite(lambda) || lambda <= -1.0) {
    std::ostringstream os;
    os << "lambda = " << lambda << " must be finite and greater than -1";
    throw InputError(os.str());
  }
}

DifvTensor normalize(const DecisionProblem& problem) {
  problem.validate();
  DifvTensor out(problem.experts.size());
  for (std::size_t e = 0; e < out.size(); ++e) {
    out[e].resize(problem.alternatives.size());
    for (std::size_t a = 0; a < problem.alternatives.size(); ++a) {
      auto& row = out[e][a];
      row.reserve(problem.criteria.size());
      for (std::size_t c = 0; c < problem.criteria.size(); ++c) {
        row.push_back(from_linguistic(problem.assessments[e][a][c], problem.scale,
                                      problem.criteria[c].kind == CriterionKind::Cost));
      }
    }
  }
  return out;
}

DifvMatrix aggregate_experts(const DifvTensor& tensor, const WeightVector& expert_weights,
                             const CaspasConfig& config) {
  if (tensor.empty()) throw InputError("no expert matrices to aggregate");
  if (tensor.size() != expert_weights.size()) {
    throw InputError("got " + std::to_string(tensor.size()) + " expert matrices but " +
                     std::to_string(expert_weights.size()) + " expert weights");
  }
  const std::size_t n_alt = tensor.front().size();
  const std::size_t n_crit = n_alt ? tensor.front().front().size() : 0;
  for (const auto& m : tensor) {
    if (m.size() != n_alt) throw InputError("expert matrices have different numbers of alternatives");
    for (const auto& row : m) {
      if (row.size() != n_crit) throw InputError("expert matrices have different numbers of criteria");
    }
  }
  DifvMatrix out(n_alt, std::vector<Difv>(n_crit));
  std::vector<Difv> cell(tensor.size());
  for (std::size_t a = 0; a < n_alt; ++a) {
    for (std::size_t c = 0; c < n_crit; ++c) {
      for (std::size_t e = 0; e < tensor.size(); ++e) cell[e] = tensor[e][a][c];
      out[a][c] = weighted(cell, expert_weights, config.expert_aggregator, config.expert_family);
    }
  }
  return out;
}

std::vector<Difv> aggregate_importance(const DecisionProblem& problem, const CaspasConfig& config) {
  problem.validate();
  std::vector<Difv> out;
  std::vector<Difv> cell(problem.experts.size());
  for (std::size_t c = 0; c < problem.criteria.size(); ++c) {
    for (std::size_t e = 0; e < problem.experts.size(); ++e) {
      cell[e] = problem.scale.lookup(problem.criteria_importance[e][c]);
    }
    out.push_back(weighted(cell, problem.expert_weights, config.expert_aggregator, config.expert_family));
  }
  return out;
}

WeightVector derive_criteria_weights(const DecisionProblem& problem, const CaspasConfig& config) {
  const ScoreParams sp = config.score_params();
  std::vector<double> s;
  for (const Difv& v : aggregate_importance(problem, config)) s.push_back(score(v, sp));
  const double sum = std::accumulate(s.begin(), s.end(), 0.0);
  if (!(sum > 0.0)) throw ComputationError("criteria importance scores sum to zero");
  for (double& x : s) x /= sum;
  return WeightVector(std::move(s));
}

Difv compute_csm(std::span<const Difv> row, const FuzzyMeasure& m, const CaspasConfig& config) {
  return choquet_arithmetic(row, m, config.score_params(), config.family);
}

Difv compute_cpm(std::span<const Difv> row, const FuzzyMeasure& m, const CaspasConfig& config) {
  return choquet_geometric(row, m, config.score_params(), config.family);
}

Difv significance_degree(const Difv& csm, const Difv& cpm, double epsilon, Family f) {
  if (!std::isfinite(epsilon) || epsilon < 0.0 || epsilon > 1.0) {
    std::ostringstream os;
    os << "epsilon = " << epsilon << " is outside [0, 1]";
    throw InputError(os.str());
  }
  if (epsilon == 0.0) return cpm;
  if (epsilon == 1.0) return csm;
  return oplus(scale(epsilon, csm, f), scale(1.0 - epsilon, cpm, f), f);
}

std::string Ranking::label(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += tier[i] == tier[i - 1] ? "=" : ">";
    out += order[i] < names.size() ? names[order[i]] : std::to_string(order[i]);
  }
  return out;
}

namespace {

template <class Cmp>
Ranking rank_by(std::size_t n, Cmp cmp) {
  Ranking r;
  r.order.resize(n);
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](std::size_t a, std::size_t b) { return cmp(a, b) > 0; });
  r.tier.resize(n);
  for (std::size_t i = 1; i < n; ++i) {
    r.tier[i] = cmp(r.order[i - 1], r.order[i]) == 0 ? r.tier[i - 1] : r.tier[i - 1] + 1;
  }
  return r;
}

}  // namespace

Ranking rank(std::span<const Difv> values, const ScoreParams& p) {
  return rank_by(values.size(), [&](std::size_t a, std::size_t b) { return compare(values[a], values[b], p); });
}

Ranking rank_scalars(std::span<const double> values) {
  return rank_by(values.size(), [&](std::size_t a, std::size_t b) {
    return std::llround(values[a] * 1e12) <=> std::llround(values[b] * 1e12);
  });
}

std::vector<std::string> RankingResult::names() const {
  std::vector<std::string> out;
  for (const auto& a : alternatives) out.push_back(a.name);
  return out;
}

RankingResult run_caspas(const DecisionProblem& problem, const CaspasConfig& config) {
  in_stage("config", [&] { config.validate(); });
  in_stage("problem", [&] { problem.validate(); });

  RankingResult res;
  Provenance& prov = res.provenance;
  prov.config = config;
  prov.criteria = problem.criterion_names();
  prov.normalized = in_stage("normalize", [&] { return normalize(problem); });
  prov.aggregated = in_stage("aggregate_experts", [&] {
    return aggregate_experts(prov.normalized, problem.expert_weights, config);
  });
  prov.aggregated_importance = in_stage("criteria_weights", [&] { return aggregate_importance(problem, config); });
  prov.criteria_weights = in_stage("criteria_weights", [&] { return derive_criteria_weights(problem, config); });
  prov.measure = in_stage("fuzzy_measure", [&] {
    return build_lambda_measure(LambdaParams(config.lambda, prov.criteria_weights));
  });

  const ScoreParams sp = config.score_params();
  std::vector<Difv> sds;
  for (std::size_t a = 0; a < problem.alternatives.size(); ++a) {
    AlternativeResult r;
    r.name = problem.alternatives[a];
    const auto& row = prov.aggregated[a];
    r.csm = in_stage("csm", [&] { return compute_csm(row, prov.measure, config); });
    r.cpm = in_stage("cpm", [&] { return compute_cpm(row, prov.measure, config); });
    r.sd = in_stage("significance_degree",
                    [&] { return significance_degree(r.csm, r.cpm, config.epsilon, config.family); });
    r.score = score(r.sd, sp);
    r.accuracy = accuracy(r.sd, sp);
    sds.push_back(r.sd);
    res.alternatives.push_back(std::move(r));
  }
  res.ranking = rank(sds, sp);
  return res;
}

}  // namespace discdm
