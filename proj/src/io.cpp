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
#include "discdm/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "discdm/error.hpp"

namespace discdm {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw InputError("schema error at " + (path.empty() ? std::string("/") : path) + ": " + msg);
}

const char* type_name(const Json& j) { return j.type_name(); }

void require_object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) schema_error(path, std::string("expected an object, got ") + type_name(j));
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) schema_error(path + "/" + key, "unexpected key");
  }
}

const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing key '" + key + "'");
  return *it;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, std::string("expected a string, got ") + type_name(j));
  return j.get<std::string>();
}

double as_number(const Json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, std::string("expected a number, got ") + type_name(j));
  return j.get<double>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, std::string("expected an array, got ") + type_name(j));
  return j;
}

// Object keyed exactly by `names`.
const Json& keyed_by(const Json& obj, const std::vector<std::string>& names, const std::string& path,
                     const char* what) {
  if (!obj.is_object()) schema_error(path, std::string("expected an object, got ") + type_name(obj));
  for (const auto& [key, _] : obj.items()) {
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      schema_error(path + "/" + key, std::string("unknown ") + what);
    }
  }
  for (const auto& n : names) {
    if (!obj.contains(n)) schema_error(path, std::string("missing ") + what + " '" + n + "'");
  }
  return obj;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON (" +
                     e.what() + ")");
  }
}

std::vector<std::string> name_list(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) {
    out.push_back(as_string(j[i], path + "/" + std::to_string(i)));
  }
  return out;
}

}  // namespace

DecisionProblem problem_from_json(const Json& j) {
  require_object(j, "", {"criteria", "alternatives", "experts", "scale", "assessments", "criteria_importance"});
  DecisionProblem p;

  const Json& crit = as_array(member(j, "criteria", ""), "/criteria");
  for (std::size_t i = 0; i < crit.size(); ++i) {
    const std::string path = "/criteria/" + std::to_string(i);
    require_object(crit[i], path, {"name", "kind"});
    CriterionSpec c;
    c.name = as_string(member(crit[i], "name", path), path + "/name");
    const std::string kind = as_string(member(crit[i], "kind", path), path + "/kind");
    try {
      c.kind = parse_criterion_kind(kind);
    } catch (const InputError& e) {
      schema_error(path + "/kind", e.what());
    }
    p.criteria.push_back(std::move(c));
  }

  p.alternatives = name_list(member(j, "alternatives", ""), "/alternatives");

  const Json& experts = as_array(member(j, "experts", ""), "/experts");
  std::vector<double> weights;
  for (std::size_t i = 0; i < experts.size(); ++i) {
    const std::string path = "/experts/" + std::to_string(i);
    require_object(experts[i], path, {"name", "weight"});
    p.experts.push_back(as_string(member(experts[i], "name", path), path + "/name"));
    weights.push_back(as_number(member(experts[i], "weight", path), path + "/weight"));
  }
  try {
    p.expert_weights = WeightVector(weights);
  } catch (const InputError& e) {
    schema_error("/experts", e.what());
  }

  if (auto it = j.find("scale"); it != j.end()) {
    if (!it->is_object()) schema_error("/scale", "expected an object");
    for (const auto& [code, triple] : it->items()) {
      const std::string path = "/scale/" + code;
      if (!triple.is_array() || triple.size() != 3) schema_error(path, "expected [mu, nu, r]");
      try {
        p.scale.set(code, Difv::make(as_number(triple[0], path + "/0"), as_number(triple[1], path + "/1"),
                                     as_number(triple[2], path + "/2")));
      } catch (const InputError& e) {
        schema_error(path, e.what());
      }
    }
  }

  const auto crit_names = p.criterion_names();
  const Json& ass = keyed_by(member(j, "assessments", ""), p.experts, "/assessments", "expert");
  for (const auto& e : p.experts) {
    const std::string epath = "/assessments/" + e;
    const Json& by_alt = keyed_by(ass.at(e), p.alternatives, epath, "alternative");
    TermMatrix m;
    for (const auto& a : p.alternatives) {
      const std::string apath = epath + "/" + a;
      const Json& by_crit = keyed_by(by_alt.at(a), crit_names, apath, "criterion");
      std::vector<std::string> row;
      for (const auto& c : crit_names) row.push_back(as_string(by_crit.at(c), apath + "/" + c));
      m.push_back(std::move(row));
    }
    p.assessments.push_back(std::move(m));
  }

  const Json& imp = keyed_by(member(j, "criteria_importance", ""), p.experts, "/criteria_importance", "expert");
  for (const auto& e : p.experts) {
    const std::string epath = "/criteria_importance/" + e;
    const Json& by_crit = keyed_by(imp.at(e), crit_names, epath, "criterion");
    std::vector<std::string> row;
    for (const auto& c : crit_names) row.push_back(as_string(by_crit.at(c), epath + "/" + c));
    p.criteria_importance.push_back(std::move(row));
  }

  p.validate();
  return p;
}

DecisionProblem parse_problem(const std::string& text) { return problem_from_json(parse_text(text, "<input>")); }

DecisionProblem load_problem(const std::string& path) {
  const Json j = parse_text(read_file(path), path);
  try {
    return problem_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json problem_to_json(const DecisionProblem& p) {
  Json j;
  j["criteria"] = Json::array();
  for (const auto& c : p.criteria) j["criteria"].push_back({{"name", c.name}, {"kind", to_string(c.kind)}});
  j["alternatives"] = p.alternatives;
  j["experts"] = Json::array();
  for (std::size_t e = 0; e < p.experts.size(); ++e) {
    j["experts"].push_back({{"name", p.experts[e]}, {"weight", p.expert_weights[e]}});
  }
  const auto& standard = LinguisticScale::standard().terms();
  Json scale = Json::object();
  for (const auto& [code, v] : p.scale.terms()) {
    auto it = standard.find(code);
    if (it == standard.end() || !(it->second == v)) scale[code] = {v.mu(), v.nu(), v.r()};
  }
  if (!scale.empty()) j["scale"] = scale;
  j["assessments"] = Json::object();
  j["criteria_importance"] = Json::object();
  for (std::size_t e = 0; e < p.experts.size(); ++e) {
    Json by_alt = Json::object();
    for (std::size_t a = 0; a < p.alternatives.size(); ++a) {
      Json by_crit = Json::object();
      for (std::size_t c = 0; c < p.criteria.size(); ++c) by_crit[p.criteria[c].name] = p.assessments[e][a][c];
      by_alt[p.alternatives[a]] = by_crit;
    }
    j["assessments"][p.experts[e]] = by_alt;
    Json imp = Json::object();
    for (std::size_t c = 0; c < p.criteria.size(); ++c) imp[p.criteria[c].name] = p.criteria_importance[e][c];
    j["criteria_importance"][p.experts[e]] = imp;
  }
  return j;
}

Replacement replacement_from_json(const Json& j, const DecisionProblem& p) {
  require_object(j, "", {"target", "name", "assessments"});
  Replacement r;
  r.target = as_string(member(j, "target", ""), "/target");
  p.alternative_index(r.target);
  if (j.contains("name")) r.name = as_string(j.at("name"), "/name");
  const auto crit_names = p.criterion_names();
  const Json& ass = keyed_by(member(j, "assessments", ""), p.experts, "/assessments", "expert");
  for (const auto& e : p.experts) {
    const std::string epath = "/assessments/" + e;
    const Json& by_crit = keyed_by(ass.at(e), crit_names, epath, "criterion");
    std::vector<std::string> row;
    for (const auto& c : crit_names) {
      row.push_back(as_string(by_crit.at(c), epath + "/" + c));
      if (!p.scale.contains(row.back())) schema_error(epath + "/" + c, "unknown linguistic term '" + row.back() + "'");
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

Replacement load_replacement(const std::string& path, const DecisionProblem& p) {
  const Json j = parse_text(read_file(path), path);
  try {
    return replacement_from_json(j, p);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::vector<std::string>> parse_subsets(const std::string& spec) {
  std::vector<std::vector<std::string>> out;
  std::stringstream groups(spec);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<std::string> names;
    std::stringstream items(group);
    std::string name;
    while (std::getline(items, name, ',')) {
      const auto b = name.find_first_not_of(" \t");
      const auto e = name.find_last_not_of(" \t");
      if (b == std::string::npos) throw InputError("empty alternative name in subsets '" + spec + "'");
      names.push_back(name.substr(b, e - b + 1));
    }
    if (names.empty()) throw InputError("empty subset in '" + spec + "'");
    out.push_back(std::move(names));
  }
  if (out.empty()) throw InputError("no subsets in '" + spec + "'");
  return out;
}

Json to_json(const Difv& v) { return {{"mu", v.mu()}, {"nu", v.nu()}, {"r", v.r()}}; }

Json config_to_json(const CaspasConfig& c) {
  return {{"epsilon", c.epsilon},
          {"xi", c.xi},
          {"lambda", c.lambda},
          {"family", to_string(c.family)},
          {"expert_aggregator", to_string(c.expert_aggregator)},
          {"expert_family", to_string(c.expert_family)}};
}

Json measure_to_json(const FuzzyMeasure& m, const std::vector<std::string>& names) {
  Json j = Json::object();
  for (std::size_t s = 0; s < m.values().size(); ++s) {
    j[describe_subset(static_cast<CriteriaSet>(s), names)] = m.values()[s];
  }
  return j;
}

namespace {

Json weights_json(const WeightVector& w, const std::vector<std::string>& names) {
  Json j = Json::object();
  for (std::size_t i = 0; i < w.size(); ++i) j[names[i]] = w[i];
  return j;
}

std::vector<std::size_t> rank_positions(const Ranking& r) {
  std::vector<std::size_t> pos(r.order.size());
  for (std::size_t i = 0; i < r.order.size(); ++i) pos[r.order[i]] = r.tier[i] + 1;
  return pos;
}

}  // namespace

Json to_json(const RankingResult& r) {
  const Provenance& pv = r.provenance;
  Json j;
  j["order"] = r.order_label();
  const auto pos = rank_positions(r.ranking);
  j["alternatives"] = Json::array();
  for (std::size_t i = 0; i < r.alternatives.size(); ++i) {
    const auto& a = r.alternatives[i];
    j["alternatives"].push_back({{"name", a.name},
                                 {"rank", pos[i]},
                                 {"csm", to_json(a.csm)},
                                 {"cpm", to_json(a.cpm)},
                                 {"sd", to_json(a.sd)},
                                 {"score", a.score},
                                 {"accuracy", a.accuracy}});
  }
  Json prov;
  prov["config"] = config_to_json(pv.config);
  prov["criteria_weights"] = weights_json(pv.criteria_weights, pv.criteria);
  prov["aggregated_importance"] = Json::object();
  for (std::size_t c = 0; c < pv.criteria.size() && c < pv.aggregated_importance.size(); ++c) {
    prov["aggregated_importance"][pv.criteria[c]] = to_json(pv.aggregated_importance[c]);
  }
  prov["measure"] = measure_to_json(pv.measure, pv.criteria);
  prov["aggregated_matrix"] = Json::object();
  for (std::size_t a = 0; a < r.alternatives.size(); ++a) {
    Json row = Json::object();
    for (std::size_t c = 0; c < pv.criteria.size(); ++c) row[pv.criteria[c]] = to_json(pv.aggregated[a][c]);
    prov["aggregated_matrix"][r.alternatives[a].name] = row;
  }
  j["provenance"] = prov;
  return j;
}

Json to_json(const BaselineResult& r) {
  Json j;
  j["order"] = r.order_label();
  const auto pos = rank_positions(r.ranking);
  j["alternatives"] = Json::array();
  for (std::size_t i = 0; i < r.alternatives.size(); ++i) {
    const auto& a = r.alternatives[i];
    j["alternatives"].push_back({{"name", a.name},
                                 {"rank", pos[i]},
                                 {"wsm", to_json(a.wsm)},
                                 {"wpm", to_json(a.wpm)},
                                 {"sd", to_json(a.sd)},
                                 {"score", a.score},
                                 {"accuracy", a.accuracy}});
  }
  j["criteria_weights"] = r.criteria_weights.values();
  return j;
}

Json to_json(const ClosenessResult& r) {
  Json j;
  j["order"] = r.order_label();
  j["degenerate"] = r.degenerate;
  j["ideal"] = to_json(r.ideal);
  j["anti_ideal"] = to_json(r.anti_ideal);
  const auto pos = rank_positions(r.ranking);
  j["alternatives"] = Json::array();
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& e = r.entries[i];
    j["alternatives"].push_back({{"name", e.name},
                                 {"rank", pos[i]},
                                 {"aggregate", to_json(e.aggregate)},
                                 {"distance_to_ideal", e.distance_to_ideal},
                                 {"distance_to_anti_ideal", e.distance_to_anti_ideal},
                                 {"closeness", e.closeness ? Json(*e.closeness) : Json(nullptr)}});
  }
  return j;
}

Json to_json(const SweepReport& r) {
  auto segs = [](const std::vector<SweepSegment>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back({{"from", s.from}, {"to", s.to}, {"order", s.order}});
    return a;
  };
  Json j;
  j["axis"] = to_string(r.axis);
  j["grid"] = r.grid;
  j["points"] = Json::array();
  for (const auto& pt : r.points) {
    Json scores_q = Json::object(), scores_p = Json::object();
    for (const auto& a : pt.q.alternatives) scores_q[a.name] = a.score;
    for (const auto& a : pt.p.alternatives) scores_p[a.name] = a.score;
    j["points"].push_back({{"value", pt.value},
                           {"order_q", pt.q.order_label()},
                           {"order_p", pt.p.order_label()},
                           {"scores_q", scores_q},
                           {"scores_p", scores_p}});
  }
  j["segments_q"] = segs(r.segments_q);
  j["segments_p"] = segs(r.segments_p);
  return j;
}

Json to_json(const Condition1Report& r) {
  return {{"target", r.target},         {"replacement_name", r.replacement_name},
          {"best_before", r.best_before}, {"best_after", r.best_after},
          {"order_before", r.order_before}, {"order_after", r.order_after},
          {"pass", r.pass}};
}

Json to_json(const Condition23Report& r) {
  Json subs = Json::array();
  for (const auto& s : r.subs) subs.push_back({{"alternatives", s.alternatives}, {"order", s.order}});
  return {{"full_order", r.full_order},
          {"subproblems", subs},
          {"condition2", {{"pass", r.condition2}, {"cycle", r.cycle}}},
          {"condition3", {{"pass", r.condition3}, {"merged_order", r.merged_order}, {"copeland", r.copeland}}},
          {"weights_invariant", r.weights_invariant}};
}

void require_finite(const Json& j) {
  auto walk = [](const auto& self, const Json& node, const std::string& path) -> void {
    if (node.is_number_float() && !std::isfinite(node.get<double>())) {
      throw ComputationError("non-finite number in output at " + path);
    }
    if (node.is_object()) {
      for (const auto& [k, v] : node.items()) self(self, v, path + "/" + k);
    } else if (node.is_array()) {
      for (std::size_t i = 0; i < node.size(); ++i) self(self, node[i], path + "/" + std::to_string(i));
    }
  };
  walk(walk, j, "");
}

std::string format_fixed6(double x) {
  if (!std::isfinite(x)) throw ComputationError("non-finite number in CSV output");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

namespace {

std::string difv_cells(const Difv& v) {
  return format_fixed6(v.mu()) + "," + format_fixed6(v.nu()) + "," + format_fixed6(v.r());
}

}  // namespace

std::string to_csv(const RankingResult& r) {
  std::ostringstream os;
  os << "alternative,rank,csm_mu,csm_nu,csm_r,cpm_mu,cpm_nu,cpm_r,sd_mu,sd_nu,sd_r,score,accuracy\n";
  const auto pos = rank_positions(r.ranking);
  for (std::size_t i = 0; i < r.alternatives.size(); ++i) {
    const auto& a = r.alternatives[i];
    os << a.name << ',' << pos[i] << ',' << difv_cells(a.csm) << ',' << difv_cells(a.cpm) << ','
       << difv_cells(a.sd) << ',' << format_fixed6(a.score) << ',' << format_fixed6(a.accuracy) << '\n';
  }
  return os.str();
}

std::string to_csv(const BaselineResult& r) {
  std::ostringstream os;
  os << "alternative,rank,wsm_mu,wsm_nu,wsm_r,wpm_mu,wpm_nu,wpm_r,sd_mu,sd_nu,sd_r,score,accuracy\n";
  const auto pos = rank_positions(r.ranking);
  for (std::size_t i = 0; i < r.alternatives.size(); ++i) {
    const auto& a = r.alternatives[i];
    os << a.name << ',' << pos[i] << ',' << difv_cells(a.wsm) << ',' << difv_cells(a.wpm) << ','
       << difv_cells(a.sd) << ',' << format_fixed6(a.score) << ',' << format_fixed6(a.accuracy) << '\n';
  }
  return os.str();
}

std::string to_csv(const ClosenessResult& r) {
  std::ostringstream os;
  os << "alternative,rank,mu,nu,r,distance_to_ideal,distance_to_anti_ideal,closeness\n";
  const auto pos = rank_positions(r.ranking);
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& e = r.entries[i];
    os << e.name << ',' << pos[i] << ',' << difv_cells(e.aggregate) << ',' << format_fixed6(e.distance_to_ideal)
       << ',' << format_fixed6(e.distance_to_anti_ideal) << ','
       << (e.closeness ? format_fixed6(*e.closeness) : std::string()) << '\n';
  }
  return os.str();
}

std::string to_csv(const SweepReport& r) {
  std::ostringstream os;
  os << to_string(r.axis) << ",order_q,order_p";
  if (!r.points.empty()) {
    for (const auto& a : r.points.front().q.alternatives) os << ",score_q_" << a.name;
    for (const auto& a : r.points.front().p.alternatives) os << ",score_p_" << a.name;
  }
  os << '\n';
  for (const auto& pt : r.points) {
    os << format_fixed6(pt.value) << ',' << pt.q.order_label() << ',' << pt.p.order_label();
    for (const auto& a : pt.q.alternatives) os << ',' << format_fixed6(a.score);
    for (const auto& a : pt.p.alternatives) os << ',' << format_fixed6(a.score);
    os << '\n';
  }
  return os.str();
}

std::string compare_to_csv(const RankingResult* caspas, const BaselineResult* baseline,
                           const ClosenessResult* topsis) {
  std::ostringstream os;
  os << "method,alternative,rank,value,mu,nu,r\n";
  if (caspas) {
    const auto pos = rank_positions(caspas->ranking);
    for (std::size_t i = 0; i < caspas->alternatives.size(); ++i) {
      const auto& a = caspas->alternatives[i];
      os << "caspas," << a.name << ',' << pos[i] << ',' << format_fixed6(a.score) << ',' << difv_cells(a.sd) << '\n';
    }
  }
  if (baseline) {
    const auto pos = rank_positions(baseline->ranking);
    for (std::size_t i = 0; i < baseline->alternatives.size(); ++i) {
      const auto& a = baseline->alternatives[i];
      os << "wsmwpm," << a.name << ',' << pos[i] << ',' << format_fixed6(a.score) << ',' << difv_cells(a.sd) << '\n';
    }
  }
  if (topsis) {
    const auto pos = rank_positions(topsis->ranking);
    for (std::size_t i = 0; i < topsis->entries.size(); ++i) {
      const auto& e = topsis->entries[i];
      os << "topsis," << e.name << ',' << pos[i] << ','
         << (e.closeness ? format_fixed6(*e.closeness) : std::string()) << ',' << difv_cells(e.aggregate) << '\n';
    }
  }
  return os.str();
}

std::string validity_to_csv(const Condition1Report* c1, const Condition23Report* c23) {
  std::ostringstream os;
  os << "check,subject,order,pass\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  if (c1) {
    os << "condition1,before," << c1->order_before << ",\n";
    os << "condition1," << c1->target << "->" << c1->replacement_name << ',' << c1->order_after << ','
       << flag(c1->pass) << '\n';
  }
  if (c23) {
    os << "full,all," << c23->full_order << ",\n";
    for (const auto& s : c23->subs) {
      std::string subject;
      for (const auto& n : s.alternatives) subject += (subject.empty() ? "" : " ") + n;
      os << "subproblem," << subject << ',' << s.order << ",\n";
    }
    std::string cyc;
    for (const auto& n : c23->cycle) cyc += (cyc.empty() ? "" : ">") + n;
    os << "condition2,pairwise," << cyc << ',' << flag(c23->condition2) << '\n';
    os << "condition3,merged," << c23->merged_order << ',' << flag(c23->condition3) << '\n';
  }
  return os.str();
}

std::string measure_to_csv(const FuzzyMeasure& m, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "subset,value\n";
  for (std::size_t s = 0; s < m.values().size(); ++s) {
    os << '"' << describe_subset(static_cast<CriteriaSet>(s), names) << "\"," << format_fixed6(m.values()[s]) << '\n';
  }
  return os.str();
}

}  // namespace discdm
