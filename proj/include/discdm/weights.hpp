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

#include <cstddef>
#include <vector>

namespace discdm {

inline constexpr double kWeightSumTolerance = 1e-6;

/// Non-negative weights summing to 1 within 1e-6. Weights are used as given;
/// renormalisation happens only on explicit request.
class WeightVector {
 public:
  WeightVector() = default;
  /// Throws InputError on empty input, entries outside [0, 1] or a bad sum.
  /// With `renormalize`, any positive finite sum is accepted and divided out.
  explicit WeightVector(std::vector<double> weights, bool renormalize = false);

  static WeightVector uniform(std::size_t n);

  std::size_t size() const { return w_.size(); }
  bool empty() const { return w_.empty(); }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::vector<double>& values() const { return w_; }
  auto begin() const { return w_.begin(); }
  auto end() const { return w_.end(); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> w_;
};

}  // namespace discdm
