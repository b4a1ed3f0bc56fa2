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

// Reproducible random streams.
//
// Every stream is SplitMix64 run as a counter-based generator: the n-th output
// is mix64(key + n * 0x9E3779B97F4A7C15), where key is derived from a (seed,
// stream id) pair. The variate transforms below are written out explicitly
// rather than delegated to <random> distributions, whose algorithms are
// implementation-defined, so a given (seed, stream) produces the same numbers
// on every conforming platform and in any other implementation that follows
// the documented recipe (docs/rng.md).

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string_view>

namespace graceful {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// FNV-1a, used to turn stream labels into ids.
constexpr std::uint64_t label_id(std::string_view label) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(mix64(seed ^ mix64(stream + kGoldenGamma))) {}

  // Derive an independent child stream; children of equal (parent, id) pairs
  // are identical.
  [[nodiscard]] RngStream substream(std::uint64_t id) const noexcept {
    return RngStream(key_, id, 0);
  }
  [[nodiscard]] RngStream substream(std::string_view label) const noexcept {
    return substream(label_id(label));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * kGoldenGamma);
  }

  [[nodiscard]] std::uint64_t draws() const noexcept { return counter_; }

  // [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  // (0, 1): never returns an endpoint, safe for log().
  double uniform_open() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
  }

  // Integer in [0, n), n > 0, by multiply-shift (bias below n / 2^64).
  std::uint64_t below(std::uint64_t n) noexcept {
    const auto product =
        static_cast<unsigned __int128>((*this)()) * static_cast<unsigned __int128>(n);
    return static_cast<std::uint64_t>(product >> 64);
  }

  double exponential(double mean) noexcept { return -mean * std::log(uniform_open()); }

  // Box-Muller; one of the pair is discarded so each call consumes exactly
  // two draws.
  double normal(double mean, double sd) noexcept {
    const double u1 = uniform_open();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * r * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Number of trials up to and including the first success, support {1, 2, ...}.
  std::uint64_t geometric(double p) noexcept {
    if (p >= 1.0) return 1;
    const double k = std::ceil(std::log(uniform_open()) / std::log1p(-p));
    return k < 1.0 ? 1 : static_cast<std::uint64_t>(k);
  }

  // Inversion by sequential search for small means, Hormann's PTRS
  // transformed rejection otherwise.
  std::uint64_t poisson(double lambda) noexcept {
    if (lambda <= 0.0) return 0;
    if (lambda < 10.0) {
      const double limit = std::exp(-lambda);
      double prod = uniform_open();
      std::uint64_t k = 0;
      while (prod > limit) {
        prod *= uniform_open();
        ++k;
      }
      return k;
    }
    const double slam = std::sqrt(lambda);
    const double loglam = std::log(lambda);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
      const double u = uniform() - 0.5;
      const double v = uniform_open();
      const double us = 0.5 - std::fabs(u);
      const double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
      if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
      if (k < 0.0 || (us < 0.013 && v > us)) continue;
      if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
          -lambda + k * loglam - std::lgamma(k + 1.0)) {
        return static_cast<std::uint64_t>(k);
      }
    }
  }

 private:
  RngStream(std::uint64_t parent_key, std::uint64_t id, int) noexcept
      : key_(mix64(parent_key ^ mix64(id ^ 0xD1B54A32D192ED03ULL))) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace graceful
