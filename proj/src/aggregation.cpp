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
#include "discdm/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "discdm/error.hpp"

namespace discdm {

std::string to_string(Operator op) { return op == Operator::Arithmetic ? "arithmetic" : "geometric"; }

Operator parse_operator(const std::string& s) {
  if (s == "arithmetic") return Operator::Arithmetic;
  if (s == "geometric") return Operator::Geometric;
  throw InputError("unknown operator '" + s + "' (expected arithmetic or geometric)");
}

Difv aggregate_terms(std::span<const WeightedTerm> terms, Operator op, Family f) {
  if (terms.empty()) throw InputError("cannot aggregate an empty list");
  // A single unit-exponent term is returned as is, matching scale/power at 1.
  const auto active = std::count_if(terms.begin(), terms.end(), [](const WeightedTerm& t) { return t.exponent != 0.0; });
  if (active == 1) {
    const auto it = std::find_if(terms.begin(), terms.end(), [](const WeightedTerm& t) { return t.exponent != 0.0; });
    if (it->exponent == 1.0) return it->value;
  }
  double p_mu = 1.0;
  double p_nu = 1.0;
  double p_r = 1.0;
  for (const auto& [v, c] : terms) {
    if (c == 0.0) continue;
    if (op == Operator::Arithmetic) {
      p_mu *= std::pow(1.0 - v.mu(), c);
      p_nu *= std::pow(v.nu(), c);
    } else {
      p_mu *= std::pow(v.mu(), c);
      p_nu *= std::pow(1.0 - v.nu(), c);
    }
    p_r *= f == Family::Q ? std::pow(v.r(), c) : std::pow(kSqrt2 - v.r(), c);
  }
  const double r = f == Family::Q ? p_r : kSqrt2 - p_r;
  if (op == Operator::Arithmetic) return Difv::from_computed(1.0 - p_mu, p_nu, r);
  return Difv::from_computed(p_mu, 1.0 - p_nu, r);
}

Difv weighted(std::span<const Difv> values, const WeightVector& w, Operator op, Family f) {
  if (values.empty()) throw InputError("cannot aggregate an empty list");
  if (values.size() != w.size()) {
    std::ostringstream os;
    os << "got " << values.size() << " values but " << w.size() << " weights";
    throw InputError(os.str());
  }
  std::vector<WeightedTerm> terms;
  terms.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) terms.push_back({values[i], w[i]});
  return aggregate_terms(terms, op, f);
}

Difv weighted_arithmetic(std::span<const Difv> values, const WeightVector& w, Family f) {
  return weighted(values, w, Operator::Arithmetic, f);
}

Difv weighted_geometric(std::span<const Difv> values, const WeightVector& w, Family f) {
  return weighted(values, w, Operator::Geometric, f);
}

ChoquetTerms choquet_terms(std::span<const Difv> values, const FuzzyMeasure& m, const ScoreParams& p) {
  const std::size_t n = values.size();
  if (n == 0) throw InputError("cannot aggregate an empty list");
  if (n != m.k()) {
    std::ostringstream os;
    os << "got " << n << " values for a measure over " << m.k() << " criteria";
    throw InputError(os.str());
  }
  if (std::abs(m(0)) > kBoundaryTolerance || std::abs(m(full_set(n)) - 1.0) > kBoundaryTolerance) {
    throw InputError("measure violates tau(empty) = 0 / tau(full) = 1");
  }

  ChoquetTerms t;
  t.order.resize(n);
  std::iota(t.order.begin(), t.order.end(), std::size_t{0});
  std::stable_sort(t.order.begin(), t.order.end(), [&](std::size_t a, std::size_t b) {
    return compare(values[a], values[b], p) < 0;
  });

  t.exponents.resize(n);
  CriteriaSet upper = 0;  // F_{k+1}
  double tau_upper = m(0);
  for (std::size_t k = n; k-- > 0;) {
    const CriteriaSet cur = upper | singleton(t.order[k]);
    const double tau_cur = m(cur);
    const double c = tau_cur - tau_upper;
    if (c < -kMonotoneTolerance) {
      std::ostringstream os;
      os.precision(12);
      os << "measure is not monotone: tau(" << describe_subset(cur) << ") = " << tau_cur << " < tau("
         << describe_subset(upper) << ") = " << tau_upper;
      throw InputError(os.str());
    }
    t.exponents[k] = std::max(c, 0.0);
    upper = cur;
    tau_upper = tau_cur;
  }
  return t;
}

Difv choquet(std::span<const Difv> values, const FuzzyMeasure& m, const ScoreParams& p, Operator op,
             Family f) {
  const ChoquetTerms t = choquet_terms(values, m, p);
  std::vector<WeightedTerm> terms;
  terms.reserve(values.size());
  for (std::size_t k = 0; k < t.order.size(); ++k) terms.push_back({values[t.order[k]], t.exponents[k]});
  return aggregate_terms(terms, op, f);
}

Difv choquet_arithmetic(std::span<const Difv> values, const FuzzyMeasure& m, const ScoreParams& p,
                        Family f) {
  return choquet(values, m, p, Operator::Arithmetic, f);
}

Difv choquet_geometric(std::span<const Difv> values, const FuzzyMeasure& m, const ScoreParams& p,
                       Family f) {
  return choquet(values, m, p, Operator::Geometric, f);
}

}  // namespace discdm
