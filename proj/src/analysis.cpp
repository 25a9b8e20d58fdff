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
#include "discdm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "discdm/error.hpp"

namespace discdm {

std::string to_string(SweepAxis a) { return a == SweepAxis::Epsilon ? "epsilon" : "xi"; }

SweepAxis parse_axis(const std::string& s) {
  if (s == "epsilon") return SweepAxis::Epsilon;
  if (s == "xi") return SweepAxis::Xi;
  throw InputError("unknown sweep axis '" + s + "' (expected epsilon or xi)");
}

std::vector<double> make_grid(double from, double to, double step) {
  if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step) || step <= 0.0) {
    throw InputError("grid needs finite bounds and a positive step");
  }
  if (from > to) throw InputError("grid is empty: start exceeds end");
  const auto n = static_cast<long long>(std::floor((to - from) / step + 1e-9));
  std::vector<double> out;
  for (long long i = 0; i <= n; ++i) {
    const double x = std::round((from + static_cast<double>(i) * step) * 1e12) / 1e12;
    if (x < 0.0 || x > 1.0) throw InputError("grid value " + std::to_string(x) + " is outside [0, 1]");
    out.push_back(x);
  }
  return out;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("bad grid '" + spec + "': '" + item + "' is not a number");
    }
  }
  if (parts.size() != 3) throw InputError("bad grid '" + spec + "', expected start:end:step");
  return make_grid(parts[0], parts[1], parts[2]);
}

std::vector<SweepSegment> segments_of(const std::vector<double>& grid, const std::vector<std::string>& orders) {
  std::vector<SweepSegment> out;
  for (std::size_t i = 0; i < grid.size() && i < orders.size(); ++i) {
    if (!out.empty() && out.back().order == orders[i]) {
      out.back().to = grid[i];
    } else {
      out.push_back({grid[i], grid[i], orders[i]});
    }
  }
  return out;
}

SweepReport sweep(const DecisionProblem& problem, const CaspasConfig& config, SweepAxis axis,
                  const std::vector<double>& grid) {
  if (grid.empty()) throw InputError("sweep grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || grid[i] < 0.0 || grid[i] > 1.0) {
      throw InputError("sweep grid value " + std::to_string(grid[i]) + " is outside [0, 1]");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) throw InputError("sweep grid must be strictly increasing");
  }
  SweepReport rep;
  rep.axis = axis;
  rep.grid = grid;
  std::vector<std::string> orders_q, orders_p;
  for (double x : grid) {
    CaspasConfig c = config;
    (axis == SweepAxis::Epsilon ? c.epsilon : c.xi) = x;
    SweepPoint pt;
    pt.value = x;
    c.family = Family::Q;
    pt.q = run_caspas(problem, c);
    c.family = Family::P;
    pt.p = run_caspas(problem, c);
    orders_q.push_back(pt.q.order_label());
    orders_p.push_back(pt.p.order_label());
    rep.points.push_back(std::move(pt));
  }
  rep.segments_q = segments_of(grid, orders_q);
  rep.segments_p = segments_of(grid, orders_p);
  return rep;
}

Condition1Report validity_condition1(const DecisionProblem& problem, const CaspasConfig& config,
                                     const Replacement& replacement) {
  const RankingResult before = run_caspas(problem, config);
  const std::size_t idx = problem.alternative_index(replacement.target);
  if (before.ranking.best() == idx) {
    throw ComputationError("replacement targets " + replacement.target +
                           ", the current best alternative; only a non-optimal alternative may be replaced");
  }
  const std::string new_name = replacement.name.empty() ? replacement.target : replacement.name;
  const DecisionProblem changed = problem.with_replacement(replacement.target, replacement.rows, new_name);
  const RankingResult after = run_caspas(changed, config);

  Difs orig_row, new_row;
  const auto crit = problem.criterion_names();
  for (std::size_t c = 0; c < crit.size(); ++c) {
    orig_row.emplace(crit[c], before.provenance.aggregated[idx][c]);
    new_row.emplace(crit[c], after.provenance.aggregated[idx][c]);
  }
  if (set_subset(orig_row, new_row) && !set_equal(orig_row, new_row)) {
    throw ComputationError("replacement for " + replacement.target +
                           " improves it on every criterion; the replacement must be a worse alternative");
  }

  Condition1Report rep;
  rep.target = replacement.target;
  rep.replacement_name = new_name;
  rep.best_before = before.best().name;
  rep.best_after = after.best().name;
  rep.order_before = before.order_label();
  rep.order_after = after.order_label();
  rep.pass = rep.best_before == rep.best_after;
  return rep;
}

std::vector<std::vector<std::string>> leave_one_out(const DecisionProblem& problem) {
  std::vector<std::vector<std::string>> out;
  const auto& alts = problem.alternatives;
  if (alts.size() < 3) throw InputError("leave-one-out sub-problems need at least three alternatives");
  for (std::size_t skip = 0; skip < alts.size(); ++skip) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < alts.size(); ++i) {
      if (i != skip) s.push_back(alts[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

// Restricts a ranking to `keep` (indices into the full list), preserving ties.
std::string restricted_label(const Ranking& r, const std::vector<std::string>& names, const std::set<std::size_t>& keep) {
  std::string out;
  std::size_t prev_tier = 0;
  bool first = true;
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    if (!keep.contains(r.order[i])) continue;
    if (!first) out += r.tier[i] == prev_tier ? "=" : ">";
    out += names[r.order[i]];
    prev_tier = r.tier[i];
    first = false;
  }
  return out;
}

std::vector<std::size_t> find_cycle(const std::vector<std::vector<bool>>& beats) {
  const std::size_t n = beats.size();
  std::vector<int> state(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> cycle;
  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    state[u] = 1;
    stack.push_back(u);
    for (std::size_t v = 0; v < n; ++v) {
      if (!beats[u][v]) continue;
      if (state[v] == 1) {
        auto it = std::find(stack.begin(), stack.end(), v);
        cycle.assign(it, stack.end());
        cycle.push_back(v);
        return true;
      }
      if (state[v] == 0 && dfs(v)) return true;
    }
    stack.pop_back();
    state[u] = 2;
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    if (state[u] == 0 && dfs(u)) return cycle;
  }
  return {};
}

}  // namespace

Condition23Report validity_conditions_2_3(const DecisionProblem& problem, const CaspasConfig& config,
                                          const std::vector<std::vector<std::string>>& subsets) {
  if (subsets.empty()) throw InputError("no sub-problems given");
  for (const auto& s : subsets) {
    if (s.size() < 2) throw InputError("every sub-problem needs at least two alternatives");
    for (const auto& n : s) problem.alternative_index(n);
  }

  const RankingResult full = run_caspas(problem, config);
  const auto& names = problem.alternatives;
  const std::size_t n = names.size();

  Condition23Report rep;
  rep.full_order = full.order_label();
  rep.weights_invariant = true;

  std::vector<std::vector<int>> votes(n, std::vector<int>(n, 0));
  std::set<std::size_t> covered;
  for (const auto& s : subsets) {
    const RankingResult sub = run_caspas(problem.subproblem(s), config);
    rep.weights_invariant = rep.weights_invariant &&
                            sub.provenance.criteria_weights == full.provenance.criteria_weights &&
                            sub.provenance.measure == full.provenance.measure;
    const Ranking& r = sub.ranking;
    for (std::size_t i = 0; i < r.order.size(); ++i) {
      for (std::size_t j = i + 1; j < r.order.size(); ++j) {
        if (r.tier[i] == r.tier[j]) continue;
        const std::size_t a = problem.alternative_index(s[r.order[i]]);
        const std::size_t b = problem.alternative_index(s[r.order[j]]);
        ++votes[a][b];
      }
    }
    for (const auto& name : s) covered.insert(problem.alternative_index(name));
    rep.subs.push_back({s, sub.order_label(), sub.ranking});
  }

  std::vector<std::vector<bool>> beats(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) beats[a][b] = votes[a][b] > 0;
  }
  const auto cycle = find_cycle(beats);
  rep.condition2 = cycle.empty();
  for (std::size_t i : cycle) rep.cycle.push_back(names[i]);

  std::vector<std::size_t> members(covered.begin(), covered.end());
  std::vector<double> copeland;
  std::vector<std::string> member_names;
  for (std::size_t a : members) {
    int score = 0;
    for (std::size_t b : members) {
      if (votes[a][b] > votes[b][a]) ++score;
      if (votes[a][b] < votes[b][a]) --score;
    }
    rep.copeland[names[a]] = score;
    copeland.push_back(score);
    member_names.push_back(names[a]);
  }
  rep.merged_order = rank_scalars(copeland).label(member_names);
  rep.condition3 = rep.merged_order == restricted_label(full.ranking, names, covered);
  return rep;
}

}  // namespace discdm
