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

// Disc intuitionistic fuzzy values: a membership/non-membership point
// (mu, nu) with mu + nu <= 1, plus a radius r in [0, sqrt(2)] describing the
// uncertainty disc around that point.

#include <compare>
#include <initializer_list>
#include <map>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>

namespace discdm {

inline constexpr double kSqrt2 = std::numbers::sqrt2;

/// Slack accepted on mu + nu <= 1 for rounded literals.
inline constexpr double kSumSlack = 1e-12;

/// Radius combination rule. `Q` contracts radii multiplicatively,
/// `P` expands them like a probabilistic sum.
enum class Family { Q, P };

std::string to_string(Family f);
Family parse_family(const std::string& s);

class Difv {
 public:
  /// The all-zero value <(0,0);0>.
  constexpr Difv() = default;

  /// Validating factory. Throws InputError naming the offending field.
  /// mu + nu up to 1 + 1e-12 is accepted and clamped back onto the boundary.
  static Difv make(double mu, double nu, double r);

  /// For results of closed-form operations, which are valid in exact
  /// arithmetic: clamps rounding noise back into range. Deviations larger
  /// than 1e-9 throw ComputationError.
  static Difv from_computed(double mu, double nu, double r);

  constexpr double mu() const { return mu_; }
  constexpr double nu() const { return nu_; }
  constexpr double r() const { return r_; }

  friend constexpr bool operator==(const Difv&, const Difv&) = default;

 private:
  constexpr Difv(double mu, double nu, double r) : mu_(mu), nu_(nu), r_(r) {}

  double mu_ = 0.0;
  double nu_ = 0.0;
  double r_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const Difv& v);

/// Blend between intuitionistic information (weight xi) and radius
/// information (weight 1 - xi) in score and accuracy.
class ScoreParams {
 public:
  explicit ScoreParams(double xi = 0.8);
  double xi() const { return xi_; }

 private:
  double xi_;
};

double score(const Difv& v, const ScoreParams& p);
double accuracy(const Difv& v, const ScoreParams& p);

/// Orders by score, then by accuracy. Both are compared after quantising to
/// a 1e-12 grid, so equality is an equivalence relation and the ordering is
/// a total preorder.
std::weak_ordering compare(const Difv& a, const Difv& b, const ScoreParams& p);

/// Swaps membership and non-membership; the radius is unchanged.
Difv complement(const Difv& v);

Difv oplus(const Difv& a, const Difv& b, Family f);
Difv otimes(const Difv& a, const Difv& b, Family f);
/// zeta * v. Throws InputError unless zeta > 0.
Difv scale(double zeta, const Difv& v, Family f);
/// v ^ zeta. Throws InputError unless zeta > 0.
Difv power(const Difv& v, double zeta, Family f);

/// Radius of a q/p combination of two radii.
double combine_radii(double ra, double rb, Family f);
/// Radius of zeta-scaling (or zeta-power) of a radius.
double scale_radius(double r, double zeta, Family f);

/// Ordered term-code -> value table used to read expert assessments.
class LinguisticScale {
 public:
  LinguisticScale() = default;
  LinguisticScale(std::initializer_list<std::pair<const std::string, Difv>> terms);

  /// Table of nine terms from EH <(0.9,0.1);0.9> down to EL <(0.1,0.9);0.1>.
  static const LinguisticScale& standard();

  /// Adds or replaces a term.
  void set(const std::string& code, const Difv& value);
  bool contains(const std::string& code) const;
  /// Throws InputError for an unknown code.
  const Difv& lookup(const std::string& code) const;

  const std::map<std::string, Difv>& terms() const { return terms_; }

  friend bool operator==(const LinguisticScale&, const LinguisticScale&) = default;

 private:
  std::map<std::string, Difv> terms_;
};

/// Maps a term to its value, complemented for cost criteria.
Difv from_linguistic(const std::string& code, const LinguisticScale& scale, bool is_cost);

/// A disc intuitionistic fuzzy set over named elements.
using Difs = std::map<std::string, Difv>;

/// Pointwise r_a <= r_b, mu_a <= mu_b, nu_a >= nu_b. Throws InputError when
/// the element domains differ.
bool set_subset(const Difs& a, const Difs& b);
bool set_equal(const Difs& a, const Difs& b);
Difs set_complement(const Difs& a);

}  // namespace discdm
