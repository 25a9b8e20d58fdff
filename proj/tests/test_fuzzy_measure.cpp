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
#include <doctest.h>

#include <bit>
#include <cmath>
#include <vector>

#include "discdm/error.hpp"
#include "discdm/fuzzy_measure.hpp"
#include "support/oracle.hpp"
#include "support/reference_tables.hpp"

using namespace discdm;

namespace {

WeightVector rounded_weights() {
  return WeightVector({ref::kCriteriaWeights.begin(), ref::kCriteriaWeights.end()});
}

}  // namespace

TEST_CASE("weight vectors check their sum unless renormalisation is requested") {
  CHECK_NOTHROW(WeightVector({0.5, 0.5}));
  CHECK_NOTHROW(WeightVector({0.3333333, 0.3333333, 0.3333334}));
  CHECK_THROWS_AS(WeightVector({0.326, 0.258, 0.232, 0.181}), InputError);
  CHECK_THROWS_AS(WeightVector(std::vector<double>{}), InputError);
  CHECK_THROWS_AS(WeightVector({1.2, -0.2}), InputError);
  const WeightVector r({2.0, 6.0}, true);
  CHECK(r[0] == doctest::Approx(0.25));
  CHECK(r[1] == doctest::Approx(0.75));
  CHECK_THROWS_AS(WeightVector({0.0, 0.0}, true), InputError);
}

TEST_CASE("lambda measure reproduces the reference capacity table") {
  const FuzzyMeasure m = build_lambda_measure(LambdaParams(0.5, rounded_weights()));
  REQUIRE(m.k() == 4);
  for (const auto& [set, value] : ref::kMeasure) {
    INFO("subset " << describe_subset(set));
    CHECK(std::abs(m(set) - value) <= 1e-5);
  }
  CHECK(validate_measure(m).empty());
}

TEST_CASE("lambda measure agrees with the product-of-densities definition") {
  oracle::Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, 7));
    const auto w = rng.weights(k);
    const double lambda = rng.uniform(-0.95, 6.0);
    const FuzzyMeasure m = build_lambda_measure(LambdaParams(lambda, WeightVector(w)));
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
      CHECK(std::abs(m(s) - oracle::lambda_measure_value(lambda, w, s)) <= 1e-12);
    }
  }
}

TEST_CASE("measure lookup") {
  const FuzzyMeasure m = build_lambda_measure(LambdaParams(0.5, rounded_weights()));
  CHECK(measure_of(m, 0) == 0.0);
  CHECK(std::abs(measure_of(m, 0b0101) - 0.507777) <= 1e-5);
  CHECK_THROWS_AS(m(0b10000), InputError);
  const FuzzyMeasure a = additive_measure(rounded_weights());
  for (std::size_t i = 0; i < 4; ++i) CHECK(a(singleton(i)) == ref::kCriteriaWeights[i]);
}

TEST_CASE("additive measures") {
  const FuzzyMeasure a = additive_measure(WeightVector({0.5, 0.5}));
  CHECK(a(0b01) == 0.5);
  CHECK(a(0b11) == 1.0);
  CHECK(additive_measure(WeightVector({1.0}))(0b1) == 1.0);
  CHECK(additive_measure(rounded_weights())(0b0011) == doctest::Approx(0.584));
  CHECK(build_lambda_measure(LambdaParams(0.0, rounded_weights())) == additive_measure(rounded_weights()));
}

TEST_CASE("lambda must exceed -1") {
  CHECK_THROWS_AS(LambdaParams(-1.0, WeightVector({1.0})), InputError);
  CHECK_THROWS_AS(LambdaParams(-3.0, WeightVector({1.0})), InputError);
  CHECK_THROWS_AS(LambdaParams(INFINITY, WeightVector({1.0})), InputError);
  CHECK_NOTHROW(LambdaParams(-0.999, WeightVector({1.0})));
}

TEST_CASE("validate_measure reports boundary and monotonicity violations by subset") {
  // {0}: 0.6 but {0,1}: 0.5.
  const FuzzyMeasure bad = FuzzyMeasure::from_values(3, {0.0, 0.6, 0.2, 0.5, 0.1, 0.7, 0.3, 1.0});
  const auto v = validate_measure(bad, {"T1", "T2", "T3"});
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == MeasureViolation::Kind::Monotonicity);
  CHECK(v[0].smaller == 0b001);
  CHECK(v[0].larger == 0b011);
  CHECK(v[0].message.find("{T1}") != std::string::npos);
  CHECK(v[0].message.find("{T1,T2}") != std::string::npos);

  const FuzzyMeasure short_top = FuzzyMeasure::from_values(2, {0.0, 0.4, 0.3, 0.9});
  const auto w = validate_measure(short_top);
  REQUIRE(w.size() == 1);
  CHECK(w[0].kind == MeasureViolation::Kind::Boundary);
  CHECK(w[0].smaller == 0b11);
}

TEST_CASE("dense storage is limited") {
  CHECK_THROWS_AS(FuzzyMeasure::from_values(25, {}), InputError);
  CHECK_THROWS_AS(FuzzyMeasure::from_values(2, {0.0, 1.0}), InputError);
  CHECK_THROWS_AS(FuzzyMeasure::from_values(1, {0.0, NAN}), InputError);
}

TEST_CASE("subset labels") {
  CHECK(describe_subset(0) == "{}");
  CHECK(describe_subset(0b101) == "{0,2}");
  CHECK(describe_subset(0b110, {"T1", "T2", "T3"}) == "{T2,T3}");
}

TEST_CASE("property: lambda measures are valid capacities") {
  oracle::Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, 8));
    const double lambda = rng.integer(0, 9) == 0 ? -0.999 : rng.uniform(-0.999, 20.0);
    const FuzzyMeasure m = build_lambda_measure(LambdaParams(lambda, WeightVector(rng.weights(k))));
    CHECK(validate_measure(m).empty());
    CHECK(std::abs(m(full_set(k)) - 1.0) <= 1e-9);
  }
}

TEST_CASE("property: lambda identity over disjoint pairs") {
  oracle::Rng rng(29);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, 6));
    const double lambda = rng.uniform(-0.9, 5.0);
    const FuzzyMeasure m = build_lambda_measure(LambdaParams(lambda, WeightVector(rng.weights(k))));
    const CriteriaSet full = full_set(k);
    for (CriteriaSet a = 0; a <= full; ++a) {
      // Enumerate subsets b of the complement of a.
      const CriteriaSet rest = full & ~a;
      for (CriteriaSet b = rest;; b = (b - 1) & rest) {
        CHECK(std::abs(m(a | b) - m(a) - m(b) - lambda * m(a) * m(b)) <= 1e-10);
        if (b == 0) break;
      }
    }
  }
}

TEST_CASE("property: continuity at lambda = 0") {
  oracle::Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, 6));
    const WeightVector w(rng.weights(k));
    const FuzzyMeasure add = additive_measure(w);
    for (double lambda : {1e-8, -1e-8}) {
      const FuzzyMeasure m = build_lambda_measure(LambdaParams(lambda, w));
      for (std::size_t s = 0; s < add.values().size(); ++s) CHECK(std::abs(m.values()[s] - add.values()[s]) <= 1e-6);
    }
  }
}

TEST_CASE("property: equal weights give a symmetric measure") {
  for (std::size_t k = 1; k <= 6; ++k) {
    for (double lambda : {-0.7, 0.0, 0.5, 3.0}) {
      const FuzzyMeasure m = build_lambda_measure(LambdaParams(lambda, WeightVector::uniform(k)));
      std::vector<double> by_size(k + 1, -1.0);
      for (CriteriaSet s = 0; s <= full_set(k); ++s) {
        const auto n = static_cast<std::size_t>(std::popcount(s));
        if (by_size[n] < 0) by_size[n] = m(s);
        CHECK(std::abs(m(s) - by_size[n]) <= 1e-12);
      }
    }
  }
}
