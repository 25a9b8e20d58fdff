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
#include "discdm/weights.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "discdm/error.hpp"

namespace discdm {

WeightVector::WeightVector(std::vector<double> weights, bool renormalize) : w_(std::move(weights)) {
  if (w_.empty()) throw InputError("weight vector is empty");
  for (std::size_t i = 0; i < w_.size(); ++i) {
    const double x = w_[i];
    if (!std::isfinite(x) || x < 0.0 || (!renormalize && x > 1.0)) {
      std::ostringstream os;
      os << "weight[" << i << "] = " << x << " is outside [0, 1]";
      throw InputError(os.str());
    }
  }
  const double sum = std::accumulate(w_.begin(), w_.end(), 0.0);
  if (renormalize) {
    if (!(sum > 0.0) || !std::isfinite(sum)) throw InputError("weights have no positive sum to normalise by");
    for (double& x : w_) x /= sum;
    return;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream os;
    os.precision(12);
    os << "weights sum to " << sum << ", expected 1 within " << kWeightSumTolerance;
    throw InputError(os.str());
  }
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) throw InputError("weight vector is empty");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

}  // namespace discdm
