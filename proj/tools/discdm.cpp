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
// discdm: command-line front end for the decision pipeline.
//
// Exit codes: 0 success, 2 input or schema error, 3 computation error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "discdm/analysis.hpp"
#include "discdm/caspas.hpp"
#include "discdm/comparators.hpp"
#include "discdm/error.hpp"
#include "discdm/fuzzy_measure.hpp"
#include "discdm/io.hpp"

namespace {

using namespace discdm;

constexpr int kExitInput = 2;
constexpr int kExitComputation = 3;

struct Common {
  double epsilon = 0.3;
  double xi = 0.8;
  double lambda = 0.5;
  std::string family = "q";
  std::string expert_operator = "arithmetic";
  std::string expert_family = "q";
  std::string format = "json";
  std::string out;

  CaspasConfig config() const {
    CaspasConfig c;
    c.epsilon = epsilon;
    c.xi = xi;
    c.lambda = lambda;
    c.family = parse_family(family);
    c.expert_aggregator = parse_operator(expert_operator);
    c.expert_family = parse_family(expert_family);
    c.validate();
    return c;
  }
};

void add_output_flags(CLI::App* cmd, Common& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out,
                  "Write output to this file instead of stdout; relative paths resolve against "
                  "$DISCDM_OUTPUT_DIR when it is set");
}

void add_config_flags(CLI::App* cmd, Common& o) {
  cmd->add_option("--epsilon", o.epsilon, "CSM/CPM blend threshold in [0,1]");
  cmd->add_option("--xi", o.xi, "Score blend in [0,1]");
  cmd->add_option("--lambda", o.lambda, "Interaction index (> -1)");
  cmd->add_option("--family", o.family, "Radius family")->check(CLI::IsMember({"q", "p"}));
  cmd->add_option("--expert-operator", o.expert_operator, "Operator merging expert opinions")
      ->check(CLI::IsMember({"arithmetic", "geometric"}));
  cmd->add_option("--expert-family", o.expert_family, "Radius family used when merging experts")
      ->check(CLI::IsMember({"q", "p"}));
  add_output_flags(cmd, o);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_numbers(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split(s, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("'" + item + "' is not a number");
    }
  }
  if (out.empty()) throw InputError("no numbers in '" + s + "'");
  return out;
}

// Output is rendered completely before anything is written, so a failure
// never leaves a partial document behind.
void emit(const Common& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::filesystem::path path(o.out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("DISCDM_OUTPUT_DIR"); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path.string() + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string render(const Json& j) {
  require_finite(j);
  return j.dump(2);
}

int run(int argc, char** argv) {
  CLI::App app{"Disc intuitionistic fuzzy group decision analysis"};
  app.require_subcommand(1);

  Common o;
  std::string problem_path;

  auto* solve = app.add_subcommand("solve", "Rank the alternatives of a problem");
  solve->add_option("problem", problem_path, "Problem JSON file")->required();
  add_config_flags(solve, o);

  std::string axis = "epsilon";
  std::string grid = "0.1:0.9:0.1";
  auto* sweep_cmd = app.add_subcommand("sweep", "Rank over a grid of epsilon or xi values");
  sweep_cmd->add_option("problem", problem_path, "Problem JSON file")->required();
  sweep_cmd->add_option("--axis", axis, "Swept parameter")->check(CLI::IsMember({"epsilon", "xi"}));
  sweep_cmd->add_option("--grid", grid, "Grid as start:end:step");
  add_config_flags(sweep_cmd, o);

  std::string methods = "caspas,wsmwpm,topsis";
  int beta = 3;
  std::string topsis_family = "q";
  auto* compare_cmd = app.add_subcommand("compare", "Run comparison methods side by side");
  compare_cmd->add_option("problem", problem_path, "Problem JSON file")->required();
  compare_cmd->add_option("--methods", methods, "Comma list of caspas, wsmwpm, topsis");
  compare_cmd->add_option("--beta", beta, "Minkowski parameter for TOPSIS (>= 1)");
  compare_cmd->add_option("--topsis-family", topsis_family, "Radius family of the TOPSIS aggregation")
      ->check(CLI::IsMember({"q", "p"}));
  add_config_flags(compare_cmd, o);

  std::string replacement_path;
  std::string subsets;
  auto* validate_cmd = app.add_subcommand("validate", "Check ranking validity conditions");
  validate_cmd->add_option("problem", problem_path, "Problem JSON file")->required();
  validate_cmd->add_option("--replacement", replacement_path, "Replacement assessments JSON (condition 1)");
  validate_cmd->add_option("--subsets", subsets,
                           "Sub-problems as 'P1,P2,P3;P2,P3,P4' (conditions 2 and 3); default leave-one-out");
  add_config_flags(validate_cmd, o);

  double m_lambda = 0.5;
  std::string weights;
  std::string names;
  bool renormalize = false;
  auto* measure_cmd = app.add_subcommand("measure", "Print a lambda fuzzy measure");
  measure_cmd->add_option("--lambda", m_lambda, "Interaction index (> -1)");
  measure_cmd->add_option("--weights", weights, "Comma list of criterion weights")->required();
  measure_cmd->add_option("--names", names, "Comma list of criterion names (default T1..Tk)");
  measure_cmd->add_flag("--renormalize", renormalize, "Scale weights to sum to 1");
  add_output_flags(measure_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const bool csv = o.format == "csv";

  if (*solve) {
    const CaspasConfig cfg = o.config();
    const RankingResult r = run_caspas(load_problem(problem_path), cfg);
    emit(o, csv ? to_csv(r) : render({{"command", "solve"}, {"result", to_json(r)}}));
  } else if (*sweep_cmd) {
    const CaspasConfig cfg = o.config();
    const SweepReport rep = discdm::sweep(load_problem(problem_path), cfg, parse_axis(axis), parse_grid(grid));
    emit(o, csv ? to_csv(rep)
                : render({{"command", "sweep"}, {"config", config_to_json(cfg)}, {"result", to_json(rep)}}));
  } else if (*compare_cmd) {
    const CaspasConfig cfg = o.config();
    const TopsisParams tp(beta);
    const Family tf = parse_family(topsis_family);
    std::set<std::string> wanted;
    for (const auto& m : split(methods, ',')) {
      if (m != "caspas" && m != "wsmwpm" && m != "topsis") throw InputError("unknown method '" + m + "'");
      wanted.insert(m);
    }
    if (wanted.empty()) throw InputError("no methods selected");
    const DecisionProblem p = load_problem(problem_path);
    std::optional<RankingResult> cs;
    std::optional<BaselineResult> bl;
    std::optional<ClosenessResult> tc;
    Json results = Json::object();
    if (wanted.contains("caspas")) results["caspas"] = to_json(cs.emplace(run_caspas(p, cfg)));
    if (wanted.contains("wsmwpm")) results["wsmwpm"] = to_json(bl.emplace(run_weighted_baseline(p, cfg)));
    if (wanted.contains("topsis")) {
      results["topsis"] = to_json(tc.emplace(run_topsis(p, cfg, tp, tf)));
      results["topsis"]["beta"] = tp.beta();
      results["topsis"]["family"] = to_string(tf);
    }
    emit(o, csv ? compare_to_csv(cs ? &*cs : nullptr, bl ? &*bl : nullptr, tc ? &*tc : nullptr)
                : render({{"command", "compare"}, {"config", config_to_json(cfg)}, {"results", results}}));
  } else if (*validate_cmd) {
    const CaspasConfig cfg = o.config();
    const DecisionProblem p = load_problem(problem_path);
    std::optional<Condition1Report> c1;
    Json doc = {{"command", "validate"}, {"config", config_to_json(cfg)}};
    if (!replacement_path.empty()) {
      doc["condition1"] = to_json(c1.emplace(validity_condition1(p, cfg, load_replacement(replacement_path, p))));
    }
    const auto subs = subsets.empty() ? leave_one_out(p) : parse_subsets(subsets);
    const Condition23Report c23 = validity_conditions_2_3(p, cfg, subs);
    doc["conditions_2_3"] = to_json(c23);
    emit(o, csv ? validity_to_csv(c1 ? &*c1 : nullptr, &c23) : render(doc));
  } else if (*measure_cmd) {
    const WeightVector w(parse_numbers(weights), renormalize);
    std::vector<std::string> labels = split(names, ',');
    if (labels.empty()) {
      for (std::size_t i = 0; i < w.size(); ++i) labels.push_back("T" + std::to_string(i + 1));
    }
    if (labels.size() != w.size()) throw InputError("--names and --weights differ in length");
    const FuzzyMeasure m = build_lambda_measure(LambdaParams(m_lambda, w));
    emit(o, csv ? measure_to_csv(m, labels)
                : render({{"command", "measure"},
                          {"lambda", m_lambda},
                          {"weights", w.values()},
                          {"measure", measure_to_json(m, labels)}}));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const discdm::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const discdm::ComputationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
