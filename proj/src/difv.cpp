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
#include "discdm/difv.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "discdm/error.hpp"

namespace discdm {

namespace {

constexpr double kComputedSlack = 1e-9;

void check_unit(const char* field, double x) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
    std::ostringstream os;
    os << field << " = " << x << " is outside [0, 1]";
    throw InputError(os.str());
  }
}

void check_zeta(double zeta) {
  if (!std::isfinite(zeta) || zeta <= 0.0) {
    std::ostringstream os;
    os << "exponent zeta = " << zeta << " must be > 0";
    throw InputError(os.str());
  }
}

double clamp_noise(const char* field, double x, double hi) {
  if (!std::isfinite(x) || x < -kComputedSlack || x > hi + kComputedSlack) {
    std::ostringstream os;
    os << "computed " << field << " = " << x << " left its valid range";
    throw ComputationError(os.str());
  }
  return std::clamp(x, 0.0, hi);
}

std::int64_t quantise(double x) { return std::llround(x * 1e12); }

}  // namespace

std::string to_string(Family f) { return f == Family::Q ? "q" : "p"; }

Family parse_family(const std::string& s) {
  if (s == "q" || s == "Q") return Family::Q;
  if (s == "p" || s == "P") return Family::P;
  throw InputError("unknown family '" + s + "' (expected q or p)");
}

Difv Difv::make(double mu, double nu, double r) {
  check_unit("mu", mu);
  check_unit("nu", nu);
  if (!std::isfinite(r) || r < 0.0 || r > kSqrt2) {
    std::ostringstream os;
    os << "r = " << r << " is outside [0, sqrt(2)]";
    throw InputError(os.str());
  }
  const double sum = mu + nu;
  if (sum > 1.0 + kSumSlack) {
    std::ostringstream os;
    os << "mu + nu = " << sum << " exceeds 1 (mu = " << mu << ", nu = " << nu << ")";
    throw InputError(os.str());
  }
  if (sum > 1.0) nu = 1.0 - mu;
  return Difv(mu, nu, r);
}

Difv Difv::from_computed(double mu, double nu, double r) {
  mu = clamp_noise("mu", mu, 1.0);
  nu = clamp_noise("nu", nu, 1.0);
  r = clamp_noise("r", r, kSqrt2);
  const double sum = mu + nu;
  if (sum > 1.0 + kComputedSlack) {
    std::ostringstream os;
    os << "computed mu + nu = " << sum << " exceeds 1";
    throw ComputationError(os.str());
  }
  if (sum > 1.0) nu = 1.0 - mu;
  return Difv(mu, nu, r);
}

std::ostream& operator<<(std::ostream& os, const Difv& v) {
  return os << "<(" << v.mu() << ", " << v.nu() << "); " << v.r() << ">";
}

ScoreParams::ScoreParams(double xi) : xi_(xi) {
  if (!std::isfinite(xi) || xi < 0.0 || xi > 1.0) {
    std::ostringstream os;
    os << "xi = " << xi << " is outside [0, 1]";
    throw InputError(os.str());
  }
}

double score(const Difv& v, const ScoreParams& p) {
  const double xi = p.xi();
  return xi * ((v.mu() - v.nu() + 1.0) / 2.0) + (1.0 - xi) * v.r() / kSqrt2;
}

double accuracy(const Difv& v, const ScoreParams& p) {
  const double xi = p.xi();
  return xi * (v.mu() + v.nu()) + (1.0 - xi) * v.r() / kSqrt2;
}

std::weak_ordering compare(const Difv& a, const Difv& b, const ScoreParams& p) {
  const auto sa = quantise(score(a, p));
  const auto sb = quantise(score(b, p));
  if (sa != sb) return sa <=> sb;
  return quantise(accuracy(a, p)) <=> quantise(accuracy(b, p));
}

Difv complement(const Difv& v) { return Difv::make(v.nu(), v.mu(), v.r()); }

double combine_radii(double ra, double rb, Family f) {
  if (f == Family::Q) return ra * rb / kSqrt2;
  return kSqrt2 - kSqrt2 * ((1.0 - ra / kSqrt2) * (1.0 - rb / kSqrt2));
}

double scale_radius(double r, double zeta, Family f) {
  if (f == Family::Q) return kSqrt2 * std::pow(r / kSqrt2, zeta);
  return kSqrt2 - kSqrt2 * std::pow(1.0 - r / kSqrt2, zeta);
}

Difv oplus(const Difv& a, const Difv& b, Family f) {
  return Difv::from_computed(1.0 - (1.0 - a.mu()) * (1.0 - b.mu()), a.nu() * b.nu(),
                             combine_radii(a.r(), b.r(), f));
}

Difv otimes(const Difv& a, const Difv& b, Family f) {
  return Difv::from_computed(a.mu() * b.mu(), 1.0 - (1.0 - a.nu()) * (1.0 - b.nu()),
                             combine_radii(a.r(), b.r(), f));
}

Difv scale(double zeta, const Difv& v, Family f) {
  check_zeta(zeta);
  if (zeta == 1.0) return v;
  return Difv::from_computed(1.0 - std::pow(1.0 - v.mu(), zeta), std::pow(v.nu(), zeta),
                             scale_radius(v.r(), zeta, f));
}

Difv power(const Difv& v, double zeta, Family f) {
  check_zeta(zeta);
  if (zeta == 1.0) return v;
  return Difv::from_computed(std::pow(v.mu(), zeta), 1.0 - std::pow(1.0 - v.nu(), zeta),
                             scale_radius(v.r(), zeta, f));
}

LinguisticScale::LinguisticScale(std::initializer_list<std::pair<const std::string, Difv>> terms)
    : terms_(terms) {}

const LinguisticScale& LinguisticScale::standard() {
  static const LinguisticScale scale{
      {"EH", Difv::make(0.9, 0.1, 0.9)}, {"VH", Difv::make(0.8, 0.2, 0.8)},
      {"H", Difv::make(0.7, 0.3, 0.7)},  {"MH", Difv::make(0.6, 0.4, 0.6)},
      {"M", Difv::make(0.5, 0.5, 0.5)},  {"ML", Difv::make(0.4, 0.6, 0.4)},
      {"L", Difv::make(0.3, 0.7, 0.3)},  {"VL", Difv::make(0.2, 0.8, 0.2)},
      {"EL", Difv::make(0.1, 0.9, 0.1)},
  };
  return scale;
}

void LinguisticScale::set(const std::string& code, const Difv& value) {
  if (code.empty()) throw InputError("linguistic term code must not be empty");
  terms_[code] = value;
}

bool LinguisticScale::contains(const std::string& code) const { return terms_.contains(code); }

const Difv& LinguisticScale::lookup(const std::string& code) const {
  auto it = terms_.find(code);
  if (it == terms_.end()) throw InputError("unknown linguistic term '" + code + "'");
  return it->second;
}

Difv from_linguistic(const std::string& code, const LinguisticScale& scale, bool is_cost) {
  const Difv& v = scale.lookup(code);
  return is_cost ? complement(v) : v;
}

namespace {

void require_same_domain(const Difs& a, const Difs& b) {
  if (a.size() != b.size() ||
      !std::equal(a.begin(), a.end(), b.begin(),
                  [](const auto& x, const auto& y) { return x.first == y.first; })) {
    throw InputError("D-IFS element domains differ");
  }
}

}  // namespace

bool set_subset(const Difs& a, const Difs& b) {
  require_same_domain(a, b);
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    const Difv& x = ia->second;
    const Difv& y = ib->second;
    if (x.r() > y.r() || x.mu() > y.mu() || x.nu() < y.nu()) return false;
  }
  return true;
}

bool set_equal(const Difs& a, const Difs& b) { return set_subset(a, b) && set_subset(b, a); }

Difs set_complement(const Difs& a) {
  Difs out;
  for (const auto& [id, v] : a) out.emplace(id, complement(v));
  return out;
}

}  // namespace discdm
