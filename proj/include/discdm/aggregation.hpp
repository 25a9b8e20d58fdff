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

// Weighted and Choquet aggregation of disc intuitionistic fuzzy values, via
// closed forms. Arithmetic operators combine with oplus/scale, geometric ones
// with otimes/power; the Family picks the radius rule.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "discdm/difv.hpp"
#include "discdm/fuzzy_measure.hpp"
#include "discdm/weights.hpp"

namespace discdm {

enum class Operator { Arithmetic, Geometric };

std::string to_string(Operator op);
Operator parse_operator(const std::string& s);

/// One term of a closed-form aggregation: the value raised to (or scaled by)
/// its exponent. Zero exponents contribute nothing.
struct WeightedTerm {
  Difv value;
  double exponent;
};

/// Closed form shared by every operator in this header:
///   arithmetic: mu = 1 - prod (1-mu)^c, nu = prod nu^c
///   geometric:  mu = prod mu^c,         nu = 1 - prod (1-nu)^c
///   radius:     q: prod r^c,  p: sqrt2 - prod (sqrt2 - r)^c
/// Exponents are expected to sum to 1.
Difv aggregate_terms(std::span<const WeightedTerm> terms, Operator op, Family f);

/// Weighted arithmetic / geometric operators. Throws InputError on empty
/// input or a length mismatch.
Difv weighted_arithmetic(std::span<const Difv> values, const WeightVector& w, Family f);
Difv weighted_geometric(std::span<const Difv> values, const WeightVector& w, Family f);
Difv weighted(std::span<const Difv> values, const WeightVector& w, Operator op, Family f);

/// Ascending permutation of the inputs under compare(), ties kept in input
/// order, with Choquet exponents c_k = tau(F_k) - tau(F_{k+1}) where F_k
/// holds the k-th smallest element and everything above it.
struct ChoquetTerms {
  std::vector<std::size_t> order;
  std::vector<double> exponents;
};

/// Throws InputError on a dimension mismatch, and when the measure is not a
/// capacity along the sorted chain (boundary off by more than 1e-9 or an
/// exponent below -1e-12).
ChoquetTerms choquet_terms(std::span<const Difv> values, const FuzzyMeasure& m, const ScoreParams& p);

Difv choquet_arithmetic(std::span<const Difv> values, const FuzzyMeasure& m, const ScoreParams& p,
                        Family f);
Difv choquet_geometric(std::span<const Difv> values, const FuzzyMeasure& m, const ScoreParams& p,
                       Family f);
Difv choquet(std::span<const Difv> values, const FuzzyMeasure& m, const ScoreParams& p, Operator op,
             Family f);

}  // namespace discdm
