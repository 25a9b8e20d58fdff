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

// Independent reference implementations and random generators for tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "discdm/aggregation.hpp"
#include "discdm/difv.hpp"
#include "discdm/fuzzy_measure.hpp"

namespace oracle {

using discdm::Difv;
using discdm::Family;
using discdm::FuzzyMeasure;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Difv difv() {
    const double mu = uniform();
    const double nu = uniform(0.0, 1.0 - mu);
    return Difv::make(mu, nu, uniform(0.0, discdm::kSqrt2));
  }

  std::vector<Difv> difvs(std::size_t n) {
    std::vector<Difv> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(difv());
    return out;
  }

  // Exponential spacings give a uniform draw on the simplex.
  std::vector<double> weights(std::size_t n) {
    std::vector<double> w(n);
    std::exponential_distribution<double> e(1.0);
    for (double& x : w) x = e(gen_);
    const double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w) x /= s;
    return w;
  }

  // Random capacity: each set gets its largest immediate subset's value plus
  // a random increment, then everything is scaled so the full set is 1.
  FuzzyMeasure capacity(std::size_t k) {
    std::vector<double> v(std::size_t{1} << k, 0.0);
    for (std::size_t s = 1; s < v.size(); ++s) {
      double base = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        if (s & (std::size_t{1} << i)) base = std::max(base, v[s & ~(std::size_t{1} << i)]);
      }
      v[s] = base + (uniform() < 0.2 ? 0.0 : uniform());
    }
    const double top = v.back();
    if (top > 0.0) {
      for (double& x : v) x /= top;
    }
    v.back() = 1.0;
    return FuzzyMeasure::from_values(k, std::move(v));
  }

 private:
  std::mt19937_64 gen_;
};

inline double score(const Difv& v, double xi) {
  return xi * (v.mu() - v.nu() + 1.0) / 2.0 + (1.0 - xi) * v.r() / std::sqrt(2.0);
}

inline double accuracy(const Difv& v, double xi) {
  return xi * (v.mu() + v.nu()) + (1.0 - xi) * v.r() / std::sqrt(2.0);
}

// Choquet integral evaluated step by step with the binary operations: sort
// ascending by (score, accuracy, index), take marginal capacities of the
// survivor sets, then fold scale-then-oplus (or power-then-otimes).
inline Difv brute_choquet(std::span<const Difv> values, const FuzzyMeasure& m, double xi,
                          discdm::Operator op, Family f) {
  const std::size_t n = values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const double sa = score(values[a], xi), sb = score(values[b], xi);
    if (sa != sb) return sa < sb;
    const double ha = accuracy(values[a], xi), hb = accuracy(values[b], xi);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  bool started = false;
  Difv acc;
  for (std::size_t k = 0; k < n; ++k) {
    std::uint32_t survivors = 0, above = 0;
    for (std::size_t j = k; j < n; ++j) survivors |= std::uint32_t{1} << idx[j];
    for (std::size_t j = k + 1; j < n; ++j) above |= std::uint32_t{1} << idx[j];
    const double c = m(survivors) - m(above);
    if (c <= 0.0) continue;
    const Difv term = op == discdm::Operator::Arithmetic ? discdm::scale(c, values[idx[k]], f)
                                                         : discdm::power(values[idx[k]], c, f);
    if (!started) {
      acc = term;
      started = true;
    } else {
      acc = op == discdm::Operator::Arithmetic ? discdm::oplus(acc, term, f) : discdm::otimes(acc, term, f);
    }
  }
  return acc;
}

// Lambda-measure straight from the density definition.
inline double lambda_measure_value(double lambda, const std::vector<double>& w, std::uint32_t set) {
  if (lambda == 0.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (set & (1u << i)) s += w[i];
    }
    return s;
  }
  double prod = 1.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(set & (1u << i))) continue;
    const double g = (std::pow(1.0 + lambda, w[i]) - 1.0) / lambda;
    prod *= 1.0 + lambda * g;
  }
  return (prod - 1.0) / lambda;
}

inline double max_component_gap(const Difv& a, const Difv& b) {
  return std::max({std::abs(a.mu() - b.mu()), std::abs(a.nu() - b.nu()), std::abs(a.r() - b.r())});
}

}  // namespace oracle
