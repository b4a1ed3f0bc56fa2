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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graceful/numeric.hpp"
#include "graceful/rng.hpp"

namespace graceful {

enum class ConflictMode { RequestorWins, RequestorAborts };

enum class Variant { Deterministic, RandomizedUnconstrained, RandomizedConstrained, DiscreteClassic };

// Which inequality decides between the mean-aware and the mean-oblivious
// density for k >= 3. Crossover compares the two corner ratios directly;
// AsPrinted and AsPrintedRaw reproduce the published inequalities verbatim.
enum class ThresholdRule { Crossover, AsPrinted, AsPrintedRaw };

// Requestor-wins, k >= 3, mean unknown: flat density (k-1)/B or the
// (B+x)^(k-2) kernel.
enum class ChainForm { Uniform, PowerKernel };

enum class Regime { Unconstrained, Constrained };

// Outcome of a grace period that expires exactly when the receiver would
// finish. Continuous strategies abort; the day-indexed ski-rental strategy
// commits (renting through day i-1 covers a trip of i-1 days).
enum class TieRule { Abort, Commit };

struct StrategySpec {
  ConflictMode mode = ConflictMode::RequestorWins;
  int k = 2;
  double B = 1.0;
  std::optional<double> mu;
  Variant variant = Variant::RandomizedUnconstrained;
  ChainForm chain_form = ChainForm::Uniform;
  ThresholdRule threshold_rule = ThresholdRule::Crossover;
};

struct Corner {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

struct RatioReport {
  double theoretical_ratio = 0.0;
  Regime regime = Regime::Unconstrained;
  bool threshold_holds = false;
  // False only for the mu = 0 degenerate case, where the ratio 1 is a limit
  // and not a guarantee.
  bool bound_claimed = true;
};

// ---------------------------------------------------------------------------
// Names

inline std::string to_string(ConflictMode m) {
  return m == ConflictMode::RequestorWins ? "RequestorWins" : "RequestorAborts";
}

inline std::string to_string(Variant v) {
  switch (v) {
    case Variant::Deterministic: return "Deterministic";
    case Variant::RandomizedUnconstrained: return "RandomizedUnconstrained";
    case Variant::RandomizedConstrained: return "RandomizedConstrained";
    case Variant::DiscreteClassic: return "DiscreteClassic";
  }
  return "?";
}

inline std::string to_string(ThresholdRule r) {
  switch (r) {
    case ThresholdRule::Crossover: return "Crossover";
    case ThresholdRule::AsPrinted: return "AsPrinted";
    case ThresholdRule::AsPrintedRaw: return "AsPrintedRaw";
  }
  return "?";
}

inline std::string to_string(ChainForm c) {
  return c == ChainForm::Uniform ? "Uniform" : "PowerKernel";
}

inline std::string to_string(Regime r) {
  return r == Regime::Constrained ? "Constrained" : "Unconstrained";
}

namespace detail {
inline std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}
}  // namespace detail

inline ConflictMode parse_mode(std::string_view s) {
  const std::string t = detail::lower(s);
  if (t == "rw" || t == "requestorwins" || t == "requestor-wins") return ConflictMode::RequestorWins;
  if (t == "ra" || t == "requestoraborts" || t == "requestor-aborts")
    return ConflictMode::RequestorAborts;
  throw std::invalid_argument("unknown conflict mode '" + std::string(s) + "'");
}

inline Variant parse_variant(std::string_view s) {
  const std::string t = detail::lower(s);
  if (t == "deterministic" || t == "det") return Variant::Deterministic;
  if (t == "randomizedunconstrained" || t == "unconstrained") return Variant::RandomizedUnconstrained;
  if (t == "randomizedconstrained" || t == "constrained") return Variant::RandomizedConstrained;
  if (t == "discreteclassic" || t == "discrete") return Variant::DiscreteClassic;
  throw std::invalid_argument("unknown strategy variant '" + std::string(s) + "'");
}

inline ThresholdRule parse_threshold_rule(std::string_view s) {
  const std::string t = detail::lower(s);
  if (t == "crossover") return ThresholdRule::Crossover;
  if (t == "asprinted" || t == "printed") return ThresholdRule::AsPrinted;
  if (t == "asprintedraw" || t == "raw") return ThresholdRule::AsPrintedRaw;
  throw std::invalid_argument("unknown threshold rule '" + std::string(s) + "'");
}

inline ChainForm parse_chain_form(std::string_view s) {
  const std::string t = detail::lower(s);
  if (t == "uniform") return ChainForm::Uniform;
  if (t == "powerkernel" || t == "power") return ChainForm::PowerKernel;
  throw std::invalid_argument("unknown chain form '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Closed-form constants

namespace constants {

inline const double kLn4m1 = std::log(4.0) - 1.0;                 // ln 4 - 1
inline const double kEm2 = std::numbers::e - 2.0;                 // e - 2
inline const double kEoverEm1 = std::numbers::e / (std::numbers::e - 1.0);

// r = (k-1)^(k-1) / k^(k-1); every k >= 3 requestor-wins constant is a
// rational function of r, which avoids overflowing k^(k-1).
inline double chain_r(int k) {
  return std::pow(static_cast<double>(k - 1) / static_cast<double>(k), k - 1);
}

// q = (k-1)(e^(1/(k-1)) - 1), the requestor-aborts normaliser.
inline double ra_q(int k) { return (k - 1) * std::expm1(1.0 / (k - 1)); }

}  // namespace constants

// ---------------------------------------------------------------------------
// Validation and closed-form operations

inline void check_chain(int k, double B) {
  if (k < 2) throw std::domain_error("chain size k must be >= 2");
  if (!(B > 0.0) || !std::isfinite(B)) throw std::domain_error("abort cost B must be positive");
}

inline void validate(const StrategySpec& s) {
  check_chain(s.k, s.B);
  if (s.mu && (!(*s.mu >= 0.0) || !std::isfinite(*s.mu)))
    throw std::domain_error("mean mu must be a nonnegative finite number");
  switch (s.variant) {
    case Variant::Deterministic:
      if (s.mode != ConflictMode::RequestorWins)
        throw std::invalid_argument("the deterministic strategy is defined for requestor-wins only");
      break;
    case Variant::DiscreteClassic:
      if (s.mode != ConflictMode::RequestorAborts || s.k != 2)
        throw std::invalid_argument("DiscreteClassic requires requestor-aborts with k = 2");
      if (s.B < 1.0 || s.B != std::floor(s.B) || s.B > 1e7)
        throw std::invalid_argument("DiscreteClassic requires an integer B in [1, 1e7]");
      break;
    case Variant::RandomizedConstrained:
      if (!s.mu) throw std::invalid_argument("RandomizedConstrained requires mu");
      break;
    case Variant::RandomizedUnconstrained:
      break;
  }
}

inline double det_threshold(int k, double B) {
  check_chain(k, B);
  return B / (k - 1);
}

inline double det_competitive_ratio(int k) {
  if (k < 2) throw std::domain_error("chain size k must be >= 2");
  return 2.0 + 1.0 / (k - 1);
}

// Right-hand side c of the mean-aware test mu/B < c (or <= c), for the
// default Crossover rule.
inline double crossover_threshold(ConflictMode mode, int k) {
  if (mode == ConflictMode::RequestorWins) {
    if (k == 2) return 2.0 * constants::kLn4m1;
    const double r = constants::chain_r(k);
    return 2.0 * (1.0 - 2.0 * r) / ((k - 2) * (1.0 - r));
  }
  const double q = constants::ra_q(k);
  return 2.0 * (q - 1.0) / q;
}

inline bool threshold_condition(const StrategySpec& s) {
  check_chain(s.k, s.B);
  if (!s.mu) throw std::invalid_argument("threshold_condition requires mu");
  const double mu = *s.mu;
  const double ratio = mu / s.B;
  const int k = s.k;
  if (s.mode == ConflictMode::RequestorWins) {
    if (k == 2) return ratio < 2.0 * constants::kLn4m1;
    if (s.threshold_rule == ThresholdRule::Crossover) return ratio < crossover_threshold(s.mode, k);
    const double r = constants::chain_r(k);
    return ratio <= (1.0 - 2.0 * r) / ((k - 2) * (1.0 - r));
  }
  if (k == 2) return ratio < 2.0 * constants::kEm2 / (std::numbers::e - 1.0);
  const double q = constants::ra_q(k);
  switch (s.threshold_rule) {
    case ThresholdRule::Crossover:
      return ratio < crossover_threshold(s.mode, k);
    case ThresholdRule::AsPrinted:
      // The simplified form is stated for B > 1 only.
      if (s.B > 1.0) return mu / (s.B - 1.0) < 2.0 * (q - 1.0);
      [[fallthrough]];
    case ThresholdRule::AsPrintedRaw:
      return (mu + 2.0 * (q - 1.0)) / s.B < 2.0 * (q - 1.0);
  }
  return false;
}

namespace detail {

inline double unconstrained_ratio(ConflictMode mode, int k, ChainForm form) {
  if (mode == ConflictMode::RequestorWins) {
    if (k == 2 || form == ChainForm::Uniform) return 2.0;
    return 1.0 / (1.0 - constants::chain_r(k));
  }
  const double E = std::exp(1.0 / (k - 1));
  return E / (E - 1.0);
}

// lambda2 of the binding corner (lambda1 = 1 in every mean-aware case).
inline double constrained_lambda2(ConflictMode mode, int k, double B) {
  if (mode == ConflictMode::RequestorWins) {
    if (k == 2) return 1.0 / (2.0 * B * constants::kLn4m1);
    const double r = constants::chain_r(k);
    return (k - 2) * r / (2.0 * B * (1.0 - 2.0 * r));
  }
  return (k - 1) / (2.0 * B * (constants::ra_q(k) - 1.0));
}

inline bool uses_constrained(const StrategySpec& s) {
  return s.variant == Variant::RandomizedConstrained && threshold_condition(s);
}

// Density chosen when the mean is unknown or not useful.
inline ChainForm fallback_chain_form(const StrategySpec& s) {
  return s.variant == Variant::RandomizedConstrained ? ChainForm::PowerKernel : s.chain_form;
}

}  // namespace detail

inline RatioReport competitive_ratio(const StrategySpec& s) {
  validate(s);
  RatioReport rep;
  switch (s.variant) {
    case Variant::Deterministic:
      rep.theoretical_ratio = det_competitive_ratio(s.k);
      return rep;
    case Variant::DiscreteClassic:
      rep.theoretical_ratio = constants::kEoverEm1;
      return rep;
    case Variant::RandomizedUnconstrained:
      rep.theoretical_ratio = detail::unconstrained_ratio(s.mode, s.k, s.chain_form);
      return rep;
    case Variant::RandomizedConstrained:
      break;
  }
  rep.threshold_holds = threshold_condition(s);
  if (!rep.threshold_holds) {
    rep.theoretical_ratio = detail::unconstrained_ratio(s.mode, s.k, detail::fallback_chain_form(s));
    return rep;
  }
  rep.regime = Regime::Constrained;
  rep.theoretical_ratio = 1.0 + detail::constrained_lambda2(s.mode, s.k, s.B) * *s.mu;
  rep.bound_claimed = *s.mu > 0.0;
  return rep;
}

// Affine fit lambda1 + lambda2 * y of the per-point ratio on (0, support_max]
// for the randomized strategy selected by `s`. Empty for the deterministic
// and discrete strategies, whose ratio profiles are not affine.
inline std::optional<Corner> corner_point(const StrategySpec& s) {
  validate(s);
  if (s.variant == Variant::Deterministic || s.variant == Variant::DiscreteClassic) return std::nullopt;
  if (detail::uses_constrained(s)) return Corner{1.0, detail::constrained_lambda2(s.mode, s.k, s.B)};
  const ChainForm form = detail::fallback_chain_form(s);
  if (s.mode == ConflictMode::RequestorWins && s.k >= 3 && form == ChainForm::Uniform) {
    // Flat density on [0, B/(k-1)]: ratio 2 - (k-2) y / (2B).
    return Corner{2.0, (2.0 - s.k) / (2.0 * s.B)};
  }
  return Corner{detail::unconstrained_ratio(s.mode, s.k, form), 0.0};
}

// ---------------------------------------------------------------------------
// Realised strategies

enum class StrategyKind { Atom, ContinuousPdf, DiscretePmf };

enum class DensityForm {
  Atom,
  Uniform,                   // constant on [0, S]
  RwLog,                     // ln((B+x)/B) / (B(ln4-1)), k = 2
  RwPowerKernel,             // (B+x)^(k-2) kernel, mean unknown
  RwPowerKernelConstrained,  // (B+x)^(k-2) kernel minus its value at 0
  RaExp,                     // e^(x/B) / (B(e^(1/(k-1)) - 1))
  RaExpConstrained,          // (k-1)(e^(x/B) - 1) / (B(q-1))
  DiscreteClassic,           // day-indexed ski-rental pmf
  Custom,
};

inline std::string to_string(DensityForm f) {
  switch (f) {
    case DensityForm::Atom: return "Atom";
    case DensityForm::Uniform: return "Uniform";
    case DensityForm::RwLog: return "RwLog";
    case DensityForm::RwPowerKernel: return "RwPowerKernel";
    case DensityForm::RwPowerKernelConstrained: return "RwPowerKernelConstrained";
    case DensityForm::RaExp: return "RaExp";
    case DensityForm::RaExpConstrained: return "RaExpConstrained";
    case DensityForm::DiscreteClassic: return "DiscreteClassic";
    case DensityForm::Custom: return "Custom";
  }
  return "?";
}

class GracePeriodStrategy {
 public:
  using Fn = std::function<double(double)>;

  const StrategySpec& spec() const noexcept { return spec_; }
  StrategyKind kind() const noexcept {
    if (form_ == DensityForm::Atom) return StrategyKind::Atom;
    if (form_ == DensityForm::DiscreteClassic) return StrategyKind::DiscretePmf;
    return StrategyKind::ContinuousPdf;
  }
  DensityForm form() const noexcept { return form_; }
  Regime regime() const noexcept { return regime_; }
  double support_max() const noexcept { return S_; }
  const std::string& label() const noexcept { return label_; }
  TieRule tie_rule() const noexcept {
    return form_ == DensityForm::DiscreteClassic ? TieRule::Commit : TieRule::Abort;
  }

  double atom() const {
    if (form_ != DensityForm::Atom) throw std::logic_error("strategy is not an atom");
    return x0_;
  }

  // Density on the strategy's own axis. For DiscreteClassic the axis is the
  // day index i in 1..B and the value is pmf(i) at integers, 0 elsewhere.
  double pdf(double x) const {
    const double B = spec_.B;
    const int k = spec_.k;
    switch (form_) {
      case DensityForm::Atom:
        throw std::logic_error("pdf is undefined for an atom strategy");
      case DensityForm::DiscreteClassic: {
        if (x != std::floor(x) || x < 1.0 || x > S_) return 0.0;
        return pmf_[static_cast<std::size_t>(x) - 1];
      }
      case DensityForm::Custom:
        return (x < 0.0 || x > S_) ? 0.0 : custom_->pdf(x);
      default:
        break;
    }
    if (x < 0.0 || x > S_) return 0.0;
    switch (form_) {
      case DensityForm::Uniform:
        return 1.0 / S_;
      case DensityForm::RwLog:
        return std::log1p(x / B) / (B * constants::kLn4m1);
      case DensityForm::RwPowerKernel:
        return (k - 1) * r_ / (B * (1.0 - r_)) * std::pow(1.0 + x / B, k - 2);
      case DensityForm::RwPowerKernelConstrained:
        return (k - 1) * r_ / (B * (1.0 - 2.0 * r_)) * std::expm1((k - 2) * std::log1p(x / B));
      case DensityForm::RaExp:
        return std::exp(x / B) / (B * em1_);
      case DensityForm::RaExpConstrained:
        return (k - 1) * std::expm1(x / B) / (B * (q_ - 1.0));
      default:
        return 0.0;
    }
  }

  double cdf(double x) const {
    const double B = spec_.B;
    const int k = spec_.k;
    if (form_ == DensityForm::Atom) return x >= x0_ ? 1.0 : 0.0;
    if (x < 0.0) return 0.0;
    if (form_ == DensityForm::DiscreteClassic) {
      if (x < 1.0) return 0.0;
      if (x >= S_) return 1.0;
      return cum_[static_cast<std::size_t>(std::floor(x)) - 1];
    }
    if (x >= S_) return 1.0;
    switch (form_) {
      case DensityForm::Uniform:
        return x / S_;
      case DensityForm::RwLog:
        return ((B + x) * std::log1p(x / B) - x) / (B * constants::kLn4m1);
      case DensityForm::RwPowerKernel:
        return r_ / (1.0 - r_) * std::expm1((k - 1) * std::log1p(x / B));
      case DensityForm::RwPowerKernelConstrained:
        return r_ / (1.0 - 2.0 * r_) * std::expm1((k - 1) * std::log1p(x / B)) -
               (k - 1) * r_ * x / (B * (1.0 - 2.0 * r_));
      case DensityForm::RaExp:
        return std::expm1(x / B) / em1_;
      case DensityForm::RaExpConstrained:
        return (k - 1) * (B * std::expm1(x / B) - x) / (B * (q_ - 1.0));
      case DensityForm::Custom:
        if (custom_->cdf) return custom_->cdf(x);
        return numeric::integral(custom_->pdf, 0.0, x);
      default:
        return 0.0;
    }
  }

  // Probability of day i (DiscreteClassic only).
  double pmf(int day) const {
    if (form_ != DensityForm::DiscreteClassic) throw std::logic_error("pmf requires a discrete strategy");
    if (day < 1 || day > static_cast<int>(pmf_.size())) return 0.0;
    return pmf_[static_cast<std::size_t>(day) - 1];
  }
  int days() const noexcept { return static_cast<int>(pmf_.size()); }

  // A draw on the strategy's own axis (a day index for DiscreteClassic).
  double sample(RngStream& rng) const {
    switch (form_) {
      case DensityForm::Atom:
        return x0_;
      case DensityForm::DiscreteClassic: {
        const double u = rng.uniform();
        const auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
        const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cum_.begin()),
                                               cum_.size() - 1);
        return static_cast<double>(idx + 1);
      }
      default:
        break;
    }
    const double u = rng.uniform();
    const double B = spec_.B;
    switch (form_) {
      case DensityForm::Uniform:
        return u * S_;
      case DensityForm::RwPowerKernel:
        return std::min(S_, B * std::expm1(std::log1p(u * (1.0 - r_) / r_) / (spec_.k - 1)));
      case DensityForm::RaExp:
        return std::min(S_, B * std::log1p(u * em1_));
      default:
        return numeric::bisect_increasing([this](double x) { return cdf(x); }, u, 0.0, S_,
                                          1e-10 * S_);
    }
  }

  // Grace period (time units) for a value returned by sample().
  double to_grace(double value) const noexcept {
    return form_ == DensityForm::DiscreteClassic ? value - 1.0 : value;
  }

  // Fully user-defined density on [0, support_max]. `cdf` may be empty, in
  // which case it is integrated numerically.
  static GracePeriodStrategy custom(const StrategySpec& spec, double support_max, Fn pdf,
                                    Fn cdf = {}, std::string label = "custom") {
    check_chain(spec.k, spec.B);
    if (!(support_max > 0.0)) throw std::invalid_argument("custom support must be positive");
    GracePeriodStrategy g(spec, DensityForm::Custom, support_max);
    g.custom_ = std::make_shared<const CustomFns>(CustomFns{std::move(pdf), std::move(cdf)});
    g.label_ = std::move(label);
    return g;
  }

 private:
  struct CustomFns {
    Fn pdf;
    Fn cdf;
  };

  GracePeriodStrategy(StrategySpec spec, DensityForm form, double S)
      : spec_(std::move(spec)), form_(form), S_(S) {
    const int k = spec_.k;
    if (k >= 3) r_ = constants::chain_r(k);
    em1_ = std::expm1(1.0 / (k - 1));
    q_ = constants::ra_q(k);
    label_ = to_string(form);
  }

  friend GracePeriodStrategy make_strategy(const StrategySpec& spec);

  StrategySpec spec_;
  DensityForm form_;
  double S_;
  Regime regime_ = Regime::Unconstrained;
  double x0_ = 0.0;
  double r_ = 0.5;
  double em1_ = 0.0;
  double q_ = 0.0;
  std::vector<double> pmf_;
  std::vector<double> cum_;
  std::shared_ptr<const CustomFns> custom_;
  std::string label_;
};

inline GracePeriodStrategy make_strategy(const StrategySpec& spec) {
  validate(spec);
  const int k = spec.k;
  const double B = spec.B;
  const double chain_support = B / (k - 1);
  using G = GracePeriodStrategy;

  switch (spec.variant) {
    case Variant::Deterministic: {
      G g(spec, DensityForm::Atom, chain_support);
      g.x0_ = det_threshold(k, B);
      return g;
    }
    case Variant::DiscreteClassic: {
      G g(spec, DensityForm::DiscreteClassic, B);
      const auto n = static_cast<std::size_t>(B);
      const double base = (B - 1.0) / B;
      const double norm = B * -std::expm1(B * std::log1p(-1.0 / B));
      g.pmf_.resize(n);
      g.cum_.resize(n);
      double acc = 0.0;
      for (std::size_t i = 1; i <= n; ++i) {
        g.pmf_[i - 1] = std::pow(base, static_cast<double>(n - i)) / norm;
        acc += g.pmf_[i - 1];
        g.cum_[i - 1] = acc;
      }
      g.cum_.back() = 1.0;
      return g;
    }
    default:
      break;
  }

  if (detail::uses_constrained(spec)) {
    DensityForm form;
    double S = chain_support;
    if (spec.mode == ConflictMode::RequestorWins) {
      form = k == 2 ? DensityForm::RwLog : DensityForm::RwPowerKernelConstrained;
    } else {
      form = DensityForm::RaExpConstrained;
    }
    G g(spec, form, S);
    g.regime_ = Regime::Constrained;
    return g;
  }

  if (spec.mode == ConflictMode::RequestorAborts) return G(spec, DensityForm::RaExp, chain_support);
  if (k == 2 || detail::fallback_chain_form(spec) == ChainForm::Uniform)
    return G(spec, DensityForm::Uniform, chain_support);
  return G(spec, DensityForm::RwPowerKernel, chain_support);
}

// Densities exactly as commonly quoted for the
// requestor-wins mean-aware case, kept so the verifier can show where they
// break. k = 2: ln((B+x)/x) / (B(ln4-1)). k >= 3: the printed two-term
// kernel with its printed corner.
inline GracePeriodStrategy make_printed_strategy(const StrategySpec& spec) {
  check_chain(spec.k, spec.B);
  if (spec.mode != ConflictMode::RequestorWins)
    throw std::invalid_argument("printed variants exist for requestor-wins only");
  const double B = spec.B;
  const int k = spec.k;
  StrategySpec s = spec;
  s.variant = Variant::RandomizedConstrained;
  if (k == 2) {
    const double norm = B * constants::kLn4m1;
    auto pdf = [B, norm](double x) { return std::log((B + x) / x) / norm; };
    auto cdf = [B, norm](double x) {
      if (x <= 0.0) return 0.0;
      x = std::min(x, B);
      return ((B + x) * std::log(B + x) - x * std::log(x) - B * std::log(B)) / norm;
    };
    return GracePeriodStrategy::custom(s, B, pdf, cdf, "PrintedRwLog");
  }
  const double r = constants::chain_r(k);
  const double lead = (k - 1) * r / B;
  const double c1 = (2.0 * r + 1.0) / ((1.0 - r) * (1.0 - 2.0 * r));
  const double c0 = 4.0 / (1.0 - 2.0 * r);
  const double S = B / (k - 1);
  auto pdf = [=](double x) { return lead * (c1 * std::pow(1.0 + x / B, k - 2) - c0); };
  auto cdf = [=](double x) {
    if (x <= 0.0) return 0.0;
    x = std::min(x, S);
    return r * c1 * std::expm1((k - 1) * std::log1p(x / B)) - lead * c0 * x;
  };
  return GracePeriodStrategy::custom(s, S, pdf, cdf, "PrintedRwPowerKernelConstrained");
}

// Corner printed alongside the k >= 3 requestor-wins mean-aware density.
inline Corner printed_corner(int k, double B) {
  check_chain(k, B);
  if (k < 3) return Corner{1.0, 1.0 / (2.0 * B * constants::kLn4m1)};
  const double r = constants::chain_r(k);
  return Corner{(1.0 - 2.0 * r) / (1.0 - r), 2.0 * (k - 2) * r / (B * (1.0 - 2.0 * r))};
}

// Free-function spellings.
inline double pdf(const GracePeriodStrategy& g, double x) { return g.pdf(x); }
inline double cdf(const GracePeriodStrategy& g, double x) { return g.cdf(x); }
inline double sample(const GracePeriodStrategy& g, RngStream& rng) { return g.sample(rng); }

}  // namespace graceful
