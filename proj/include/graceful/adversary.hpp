// Copyright 2026 The Graceful Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graceful/numeric.hpp"
#include "graceful/rng.hpp"
#include "graceful/strategy.hpp"

namespace graceful {

enum class LengthDist { Geometric, NormalTruncated, Uniform, Exponential, Poisson, PointMass, WorstCaseForDet };

inline std::string to_string(LengthDist d) {
  switch (d) {
    case LengthDist::Geometric: return "Geometric";
    case LengthDist::NormalTruncated: return "NormalTruncated";
    case LengthDist::Uniform: return "Uniform";
    case LengthDist::Exponential: return "Exponential";
    case LengthDist::Poisson: return "Poisson";
    case LengthDist::PointMass: return "PointMass";
    case LengthDist::WorstCaseForDet: return "WorstCaseForDet";
  }
  return "?";
}

inline LengthDist parse_dist(std::string_view s) {
  const std::string t = detail::lower(s);
  if (t == "geometric") return LengthDist::Geometric;
  if (t == "normal" || t == "normaltruncated") return LengthDist::NormalTruncated;
  if (t == "uniform") return LengthDist::Uniform;
  if (t == "exponential") return LengthDist::Exponential;
  if (t == "poisson") return LengthDist::Poisson;
  if (t == "pointmass" || t == "point") return LengthDist::PointMass;
  if (t == "worstcasefordet" || t == "worstcase" || t == "worst-case") return LengthDist::WorstCaseForDet;
  throw std::invalid_argument("unknown distribution '" + std::string(s) + "'");
}

// A distribution over transaction lengths (and so over remaining times).
// `mean` is the configured mean; `param` holds the calibrated shape:
//   Geometric        success probability 1/mean
//   NormalTruncated  location of the untruncated normal (sd = mean/4)
//   Poisson          rate of the zero-truncated Poisson
//   PointMass, WorstCaseForDet  the atom
struct AdversaryModel {
  LengthDist kind = LengthDist::Exponential;
  double mean = 1.0;
  double param = 0.0;
  double sd = 0.0;

  bool integer_valued() const noexcept {
    return kind == LengthDist::Geometric || kind == LengthDist::Poisson;
  }
  // Point adversaries fix the remaining time itself.
  bool fixes_remaining() const noexcept {
    return kind == LengthDist::PointMass || kind == LengthDist::WorstCaseForDet;
  }
};

namespace detail {

inline double std_normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}
inline double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// Mean of N(m, sd^2) conditioned on being positive.
inline double truncated_normal_mean(double m, double sd) {
  const double a = m / sd;
  return m + sd * std_normal_pdf(a) / std_normal_cdf(a);
}

}  // namespace detail

inline AdversaryModel make_adversary(LengthDist kind, double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw std::domain_error("adversary mean must be positive");
  AdversaryModel m;
  m.kind = kind;
  m.mean = mu;
  switch (kind) {
    case LengthDist::Geometric:
      if (mu < 1.0) throw std::domain_error("geometric lengths need mean >= 1");
      m.param = 1.0 / mu;
      break;
    case LengthDist::NormalTruncated: {
      m.sd = mu / 4.0;
      // Shift the location down so that the positive part has mean mu.
      m.param = numeric::bisect_increasing(
          [&](double loc) { return detail::truncated_normal_mean(loc, m.sd); }, mu, mu - 10.0 * m.sd,
          mu, 1e-12 * mu);
      break;
    }
    case LengthDist::Poisson: {
      if (mu <= 1.0) throw std::domain_error("zero-truncated Poisson lengths need mean > 1");
      m.param = numeric::bisect_increasing(
          [](double lam) { return lam / -std::expm1(-lam); }, mu, 1e-9, mu, 1e-12 * mu);
      break;
    }
    case LengthDist::PointMass:
    case LengthDist::WorstCaseForDet:
      m.param = mu;
      break;
    case LengthDist::Uniform:
    case LengthDist::Exponential:
      break;
  }
  return m;
}

inline AdversaryModel point_mass(double y0) { return make_adversary(LengthDist::PointMass, y0); }

// The deterministic strategy's worst case: remaining time equal to its
// threshold, where the tie rule aborts.
inline AdversaryModel worst_case_for_det(int k, double B) {
  return make_adversary(LengthDist::WorstCaseForDet, det_threshold(k, B));
}

// Transaction length r > 0.
inline double sample_length(const AdversaryModel& m, RngStream& rng) {
  switch (m.kind) {
    case LengthDist::Geometric:
      return static_cast<double>(rng.geometric(m.param));
    case LengthDist::NormalTruncated:
      for (;;) {
        const double v = rng.normal(m.param, m.sd);
        if (v > 0.0) return v;
      }
    case LengthDist::Uniform:
      return 2.0 * m.mean * (1.0 - rng.uniform());
    case LengthDist::Exponential:
      return rng.exponential(m.mean);
    case LengthDist::Poisson:
      for (;;) {
        const auto v = rng.poisson(m.param);
        if (v > 0) return static_cast<double>(v);
      }
    case LengthDist::PointMass:
    case LengthDist::WorstCaseForDet:
      return m.param;
  }
  return m.mean;
}

// Remaining time at an interrupt: draw r, then an interrupt offset i uniform
// in [0, r) (an integer offset for integer-valued lengths), return r - i.
// Point adversaries return their atom unchanged.
inline double sample_remaining(const AdversaryModel& m, RngStream& rng) {
  const double r = sample_length(m, rng);
  if (m.fixes_remaining()) return r;
  if (m.integer_valued()) {
    const auto i = rng.below(static_cast<std::uint64_t>(r));
    return r - static_cast<double>(i);
  }
  return r * (1.0 - rng.uniform());
}

}  // namespace graceful
