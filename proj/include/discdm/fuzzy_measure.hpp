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

// Set functions over criterion index sets, stored densely over all 2^k
// subsets. Subsets are bitmasks: bit i set means criterion i is present.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "discdm/weights.hpp"

namespace discdm {

using CriteriaSet = std::uint32_t;

inline constexpr std::size_t kMaxCriteria = 24;
inline constexpr double kBoundaryTolerance = 1e-9;
inline constexpr double kMonotoneTolerance = 1e-12;

constexpr CriteriaSet full_set(std::size_t k) {
  return k == 0 ? 0u : static_cast<CriteriaSet>((std::uint64_t{1} << k) - 1);
}

constexpr CriteriaSet singleton(std::size_t i) { return CriteriaSet{1} << i; }

/// "{T1,T3}" style label, members listed in criterion order. Without names
/// the zero-based indices are used.
std::string describe_subset(CriteriaSet s, const std::vector<std::string>& names = {});

class FuzzyMeasure {
 public:
  /// `values[s]` is the value of subset s; the vector must hold 2^k finite
  /// entries. No monotonicity check here, see validate_measure.
  static FuzzyMeasure from_values(std::size_t k, std::vector<double> values);

  std::size_t k() const { return k_; }
  /// Throws InputError if `s` has bits at or above k.
  double operator()(CriteriaSet s) const;
  const std::vector<double>& values() const { return values_; }

  friend bool operator==(const FuzzyMeasure&, const FuzzyMeasure&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<double> values_{0.0};
};

inline double measure_of(const FuzzyMeasure& m, CriteriaSet s) { return m(s); }

struct MeasureViolation {
  enum class Kind { Boundary, Monotonicity };
  Kind kind;
  CriteriaSet smaller;  // for Boundary, the offending set itself
  CriteriaSet larger;
  std::string message;
};

/// Checks tau(empty) = 0 and tau(full) = 1 within 1e-9, and tau(A) <= tau(B)
/// + 1e-12 for every A subset of B. Monotonicity is tested on covering pairs
/// (B = A plus one element), which implies it for all pairs.
std::vector<MeasureViolation> validate_measure(const FuzzyMeasure& m,
                                               const std::vector<std::string>& names = {});

class LambdaParams {
 public:
  /// Throws InputError when lambda <= -1 or is not finite.
  LambdaParams(double lambda, WeightVector weights);

  double lambda() const { return lambda_; }
  const WeightVector& weights() const { return weights_; }

 private:
  double lambda_;
  WeightVector weights_;
};

/// Sugeno lambda-measure whose densities g_i = ((1+lambda)^{w_i} - 1)/lambda
/// make tau(full) = 1 exactly in exact arithmetic. lambda = 0 gives the
/// additive measure.
FuzzyMeasure build_lambda_measure(const LambdaParams& p);

FuzzyMeasure additive_measure(const WeightVector& w);

}  // namespace discdm
