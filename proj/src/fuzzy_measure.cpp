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
#include "discdm/fuzzy_measure.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <utility>

#include "discdm/error.hpp"

namespace discdm {

std::string describe_subset(CriteriaSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 32; ++i) {
    if (!((s >> i) & 1u)) continue;
    if (!first) out += ',';
    first = false;
    out += i < names.size() ? names[i] : std::to_string(i);
  }
  return out + "}";
}

FuzzyMeasure FuzzyMeasure::from_values(std::size_t k, std::vector<double> values) {
  if (k > kMaxCriteria) {
    throw InputError("fuzzy measure over " + std::to_string(k) + " criteria exceeds the limit of " +
                     std::to_string(kMaxCriteria));
  }
  const std::size_t n = std::size_t{1} << k;
  if (values.size() != n) {
    throw InputError("fuzzy measure over " + std::to_string(k) + " criteria needs " +
                     std::to_string(n) + " values, got " + std::to_string(values.size()));
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (!std::isfinite(values[s])) {
      throw InputError("fuzzy measure value for subset " +
                       describe_subset(static_cast<CriteriaSet>(s)) + " is not finite");
    }
  }
  FuzzyMeasure m;
  m.k_ = k;
  m.values_ = std::move(values);
  return m;
}

double FuzzyMeasure::operator()(CriteriaSet s) const {
  if ((s & ~full_set(k_)) != 0) {
    throw InputError("subset " + describe_subset(s) + " is outside a measure over " +
                     std::to_string(k_) + " criteria");
  }
  return values_[s];
}

std::vector<MeasureViolation> validate_measure(const FuzzyMeasure& m,
                                               const std::vector<std::string>& names) {
  std::vector<MeasureViolation> out;
  const auto& v = m.values();
  const CriteriaSet full = full_set(m.k());
  auto boundary = [&](CriteriaSet s, double expected) {
    if (std::abs(v[s] - expected) > kBoundaryTolerance) {
      std::ostringstream os;
      os.precision(12);
      os << "tau(" << describe_subset(s, names) << ") = " << v[s] << ", expected " << expected;
      out.push_back({MeasureViolation::Kind::Boundary, s, s, os.str()});
    }
  };
  boundary(0, 0.0);
  boundary(full, 1.0);
  for (CriteriaSet a = 0; a <= full && a < v.size(); ++a) {
    for (std::size_t i = 0; i < m.k(); ++i) {
      const CriteriaSet bit = singleton(i);
      if (a & bit) continue;
      const CriteriaSet b = a | bit;
      if (v[a] > v[b] + kMonotoneTolerance) {
        std::ostringstream os;
        os.precision(12);
        os << "tau(" << describe_subset(a, names) << ") = " << v[a] << " exceeds tau("
           << describe_subset(b, names) << ") = " << v[b];
        out.push_back({MeasureViolation::Kind::Monotonicity, a, b, os.str()});
      }
    }
    if (a == full) break;
  }
  return out;
}

LambdaParams::LambdaParams(double lambda, WeightVector weights)
    : lambda_(lambda), weights_(std::move(weights)) {
  if (!std::isfinite(lambda) || lambda <= -1.0) {
    std::ostringstream os;
    os << "lambda = " << lambda << " must be finite and greater than -1";
    throw InputError(os.str());
  }
  if (weights_.empty()) throw InputError("lambda measure needs at least one weight");
}

FuzzyMeasure additive_measure(const WeightVector& w) {
  const std::size_t k = w.size();
  if (k == 0) throw InputError("additive measure needs at least one weight");
  if (k > kMaxCriteria) return FuzzyMeasure::from_values(k, {});
  std::vector<double> v(std::size_t{1} << k, 0.0);
  for (std::size_t s = 1; s < v.size(); ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    v[s] = v[s & (s - 1)] + w[low];
  }
  return FuzzyMeasure::from_values(k, std::move(v));
}

FuzzyMeasure build_lambda_measure(const LambdaParams& p) {
  const double lambda = p.lambda();
  const WeightVector& w = p.weights();
  if (lambda == 0.0) return additive_measure(w);
  const std::size_t k = w.size();
  if (k > kMaxCriteria) return FuzzyMeasure::from_values(k, {});

  // log(1 + lambda*g_i) = w_i * log(1 + lambda), so tau(A) is
  // expm1(log1p(lambda) * sum_{i in A} w_i) / lambda. Accumulating the
  // exponent keeps precision for lambda near 0.
  const double l1p = std::log1p(lambda);
  std::vector<double> expo(std::size_t{1} << k, 0.0);
  std::vector<double> v(expo.size(), 0.0);
  for (std::size_t s = 1; s < v.size(); ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    expo[s] = expo[s & (s - 1)] + l1p * w[low];
    v[s] = std::expm1(expo[s]) / lambda;
  }
  return FuzzyMeasure::from_values(k, std::move(v));
}

}  // namespace discdm
