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

// Numerical checks of the closed forms: normalisation, the affine
// cost-ratio identity, worst cases over point adversaries, and a local
// perturbation probe of optimality.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "graceful/costmodel.hpp"
#include "graceful/numeric.hpp"
#include "graceful/rng.hpp"
#include "graceful/strategy.hpp"

namespace graceful::oracle {

struct PdfReport {
  double integral = 0.0;
  double normalization_error = 0.0;
  double min_density = 0.0;
  bool pass = false;
};

inline PdfReport verify_pdf(const GracePeriodStrategy& g, int grid = 10000) {
  PdfReport rep;
  switch (g.kind()) {
    case StrategyKind::Atom:
      rep.integral = 1.0;
      rep.min_density = 0.0;
      rep.pass = g.atom() >= 0.0 && g.atom() <= g.support_max();
      return rep;
    case StrategyKind::DiscretePmf: {
      double sum = 0.0;
      double lo = std::numeric_limits<double>::infinity();
      for (int i = 1; i <= g.days(); ++i) {
        sum += g.pmf(i);
        lo = std::min(lo, g.pmf(i));
      }
      rep.integral = sum;
      rep.min_density = lo;
      break;
    }
    case StrategyKind::ContinuousPdf: {
      numeric::QuadratureOptions opt;
      opt.rel_tol = 1e-11;
      rep.integral = numeric::integrate([&](double x) { return g.pdf(x); }, 0.0, g.support_max(), opt, 32)
                         .value;
      double lo = std::numeric_limits<double>::infinity();
      for (int i = 0; i <= grid; ++i) {
        const double v = g.pdf(g.support_max() * i / grid);
        if (!std::isnan(v)) lo = std::min(lo, v);
      }
      rep.min_density = lo;
      break;
    }
  }
  rep.normalization_error = std::fabs(rep.integral - 1.0);
  rep.pass = rep.normalization_error < 1e-6 && rep.min_density > -1e-12;
  return rep;
}

struct LagrangeReport {
  double max_identity_residual = 0.0;  // relative, over the y-grid
  double point_mass_residual = 0.0;    // relative, at K = support_max
  double worst_y = 0.0;
  bool pass = false;
};

// Expected abort cost over B for an adversary beyond the support.
inline double point_mass_ratio(const GracePeriodStrategy& g) {
  const StrategySpec& s = g.spec();
  numeric::QuadratureOptions opt;
  opt.rel_tol = 1e-11;
  return numeric::integral(
             [&](double x) { return abort_cost(s.mode, s.k, s.B, x) / s.B * g.pdf(x); }, 0.0,
             g.support_max(), opt);
}

inline LagrangeReport lagrange_identity_check(const GracePeriodStrategy& g, double lambda1,
                                              double lambda2, int n = 1000) {
  LagrangeReport rep;
  const StrategySpec& s = g.spec();
  const double S = g.support_max();
  for (int i = 1; i <= n; ++i) {
    const double y = S * i / n;
    const ConflictInstance c{s.mode, s.k, s.B, y};
    const double lhs = expected_cost(g, c) / ((s.k - 1) * y);
    const double rhs = lambda1 + lambda2 * y;
    const double res = std::fabs(lhs - rhs) / std::max(std::fabs(rhs), 1e-300);
    if (res > rep.max_identity_residual) {
      rep.max_identity_residual = res;
      rep.worst_y = y;
    }
  }
  const double K = S;
  const double rhs = lambda1 + lambda2 * K;
  rep.point_mass_residual = std::fabs(point_mass_ratio(g) - rhs) / std::max(std::fabs(rhs), 1e-300);
  rep.pass = rep.max_identity_residual < 1e-6 && rep.point_mass_residual < 1e-6;
  return rep;
}

struct WorstCase {
  double ratio = 0.0;
  double y = 0.0;
};

namespace detail {

inline std::vector<double> adversary_grid(const GracePeriodStrategy& g, int n) {
  const double S = g.support_max();
  std::vector<double> ys;
  if (g.kind() == StrategyKind::DiscretePmf) {
    // Whole days; between integers the day-indexed strategy is not defined.
    const int last = static_cast<int>(std::ceil(1.25 * S));
    for (int d = 1; d <= last; ++d) ys.push_back(d);
    return ys;
  }
  for (int i = 1; i <= n; ++i) ys.push_back(1.25 * S * i / n);
  for (int e = 1; e <= 8; ++e) ys.push_back(S * std::pow(10.0, -e));
  ys.push_back(S);
  if (g.kind() == StrategyKind::Atom) ys.push_back(g.atom());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

}  // namespace detail

// Maximum of the ratio profile over point adversaries. Flat maxima report
// the largest maximising y inside the support.
inline WorstCase worst_case_ratio(const GracePeriodStrategy& g, int n = 2000) {
  const std::vector<double> ys = detail::adversary_grid(g, n);
  const auto prof = ratio_profile(g, ys);
  std::size_t best = 0;
  for (std::size_t i = 1; i < prof.size(); ++i)
    if (prof[i].ratio > prof[best].ratio) best = i;
  WorstCase wc{prof[best].ratio, prof[best].y};

  if (g.kind() == StrategyKind::ContinuousPdf && best > 0 && best + 1 < prof.size()) {
    const auto f = [&](double y) { return ratio_at(g, y).ratio; };
    const auto ext = numeric::golden_max(f, ys[best - 1], ys[best + 1], 1e-7);
    if (ext.value > wc.ratio) wc = WorstCase{ext.value, ext.x};
  }

  const double S = g.support_max();
  const double flat_tol = 1e-9 * wc.ratio;
  for (std::size_t i = prof.size(); i-- > 0;) {
    if (prof[i].y <= S && prof[i].ratio >= wc.ratio - flat_tol) {
      if (prof[i].y > wc.y || wc.y > S) wc.y = prof[i].y;
      break;
    }
  }
  return wc;
}

// Worst-case objective the adversary can force: the plain maximum when the
// mean is unknown, the concave envelope at mu when it is known (remaining
// times beyond the support count as a point mass at the support edge).
inline double adversary_objective(const std::vector<double>& ys, const std::vector<double>& ratio,
                                  std::optional<double> mu) {
  if (!mu) return *std::max_element(ratio.begin(), ratio.end());
  const double m = std::min(*mu, ys.back());
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < ys.size(); ++a) {
    if (ys[a] > m) break;
    if (ys[a] == m) best = std::max(best, ratio[a]);
    for (std::size_t b = a + 1; b < ys.size(); ++b) {
      if (ys[b] < m) continue;
      const double t = (m - ys[a]) / (ys[b] - ys[a]);
      best = std::max(best, (1.0 - t) * ratio[a] + t * ratio[b]);
    }
  }
  return best;
}

struct ProbeReport {
  bool pass = false;
  double theoretical = 0.0;
  double base_objective = 0.0;
  double best_objective = 0.0;
  int perturbations = 0;
  int improving = 0;
};

// Mix the strategy with random raised-cosine bumps q: (1 - eps) p + eps q.
// Expected costs are linear in the density, so each mixture's ratio profile
// is the same mixture of the two profiles. Fails if any mixture beats the
// strategy's own objective by more than `tol`, or if the strategy misses its
// claimed ratio by more than `tol`.
inline ProbeReport optimality_probe(const GracePeriodStrategy& g, int n_perturbations, RngStream& rng,
                                    double tol = 1e-4, int grid = 400) {
  ProbeReport rep;
  if (g.kind() != StrategyKind::ContinuousPdf)
    throw std::invalid_argument("optimality_probe needs a continuous strategy");
  const StrategySpec& s = g.spec();
  const double S = g.support_max();
  const bool constrained = g.regime() == Regime::Constrained;
  const std::optional<double> mu = constrained ? s.mu : std::nullopt;

  std::vector<double> ys;
  for (int i = 1; i <= grid; ++i) ys.push_back(S * i / grid);
  for (int e = 2; e <= 6; ++e) ys.push_back(S * std::pow(10.0, -e));
  if (mu && *mu > 0.0 && *mu < S) ys.push_back(*mu);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<double> base(ys.size());
  std::vector<double> opts(ys.size());
  for (std::size_t j = 0; j < ys.size(); ++j) {
    const RatioPoint p = ratio_at(g, ys[j]);
    base[j] = p.ratio;
    opts[j] = p.opt;
  }
  rep.theoretical = competitive_ratio(s).theoretical_ratio;
  rep.base_objective = adversary_objective(ys, base, mu);
  rep.best_objective = rep.base_objective;
  rep.perturbations = n_perturbations;

  std::vector<double> mixed(ys.size());
  std::vector<double> bump(ys.size());
  for (int t = 0; t < n_perturbations; ++t) {
    const double w = S * rng.uniform(0.02, 0.25);
    const double c = rng.uniform(0.0, S);
    const double eps = rng.uniform(0.01, 0.3);
    const double lo = std::max(0.0, c - w);
    const double hi = std::min(S, c + w);
    const auto shape = [=](double x) {
      return (x < lo || x > hi) ? 0.0 : 1.0 + std::cos(std::numbers::pi * (x - c) / w);
    };
    const double mass = numeric::integral(shape, lo, hi);
    const auto q = [=](double x) { return shape(x) / mass; };
    const auto Q = [=](double x) { return x <= lo ? 0.0 : numeric::integral(q, lo, std::min(x, hi)); };
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const double y = ys[j];
      const double z = std::min(y, S);
      const double aborted =
          z <= lo ? 0.0
                  : numeric::integral([&](double x) { return abort_cost(s.mode, s.k, s.B, x) * q(x); },
                                      lo, std::min(z, hi));
      const double cost = aborted + (s.k - 1) * y * (y >= S ? 0.0 : 1.0 - Q(z));
      bump[j] = cost / opts[j];
      mixed[j] = (1.0 - eps) * base[j] + eps * bump[j];
    }
    const double obj = adversary_objective(ys, mixed, mu);
    if (obj < rep.base_objective - tol) ++rep.improving;
    rep.best_objective = std::min(rep.best_objective, obj);
  }
  const bool meets_claim = rep.base_objective <= rep.theoretical + tol;
  rep.pass = rep.improving == 0 && meets_claim;
  return rep;
}

struct DensityComparison {
  double rw_density_at_B = 0.0;
  double ra_density_at_B = 0.0;
  bool rw_below_ra = false;
};

// Endpoint densities of the two k = 2 mean-aware strategies.
inline DensityComparison abort_density_comparison(double B) {
  const auto rw = make_strategy(StrategySpec{ConflictMode::RequestorWins, 2, B, 0.0,
                                             Variant::RandomizedConstrained});
  const auto ra = make_strategy(StrategySpec{ConflictMode::RequestorAborts, 2, B, 0.0,
                                             Variant::RandomizedConstrained});
  DensityComparison out;
  out.rw_density_at_B = rw.pdf(B);
  out.ra_density_at_B = ra.pdf(B);
  out.rw_below_ra = out.rw_density_at_B < out.ra_density_at_B;
  return out;
}

// ---------------------------------------------------------------------------
// Verification suite

struct Check {
  std::string category;
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
  }
};

inline std::string describe(const StrategySpec& s) {
  std::string out = (s.mode == ConflictMode::RequestorWins ? "RW" : "RA");
  out += " " + to_string(s.variant) + " k=" + std::to_string(s.k);
  char buf[64];
  std::snprintf(buf, sizeof buf, " B=%g", s.B);
  out += buf;
  if (s.mu) {
    std::snprintf(buf, sizeof buf, " mu=%g", *s.mu);
    out += buf;
  }
  if (s.variant == Variant::RandomizedUnconstrained && s.mode == ConflictMode::RequestorWins && s.k >= 3)
    out += " " + to_string(s.chain_form);
  return out;
}

// Mean-aware test grid: mu at half the crossover threshold.
inline std::vector<StrategySpec> constrained_grid() {
  std::vector<StrategySpec> out;
  for (ConflictMode m : {ConflictMode::RequestorWins, ConflictMode::RequestorAborts})
    for (int k : {2, 3, 5})
      for (double B : {10.0, 100.0})
        out.push_back(StrategySpec{m, k, B, 0.5 * B * crossover_threshold(m, k),
                                   Variant::RandomizedConstrained});
  return out;
}

inline std::vector<StrategySpec> normalization_grid() {
  std::vector<StrategySpec> out;
  for (ConflictMode m : {ConflictMode::RequestorWins, ConflictMode::RequestorAborts})
    for (int k : {2, 3, 5, 10})
      for (double B : {10.0, 200.0, 2000.0}) {
        StrategySpec s{m, k, B, std::nullopt, Variant::RandomizedUnconstrained};
        out.push_back(s);
        if (m == ConflictMode::RequestorWins && k >= 3) {
          s.chain_form = ChainForm::PowerKernel;
          out.push_back(s);
        }
        for (double f : {0.1, 0.5, 2.0}) {
          StrategySpec c{m, k, B, f * B, Variant::RandomizedConstrained};
          out.push_back(c);
        }
      }
  for (int B : {1, 3, 7, 12, 100, 2000})
    out.push_back(StrategySpec{ConflictMode::RequestorAborts, 2, static_cast<double>(B), std::nullopt,
                               Variant::DiscreteClassic});
  return out;
}

inline VerificationReport run_verification_suite(std::uint64_t seed = 1, int probe_perturbations = 200) {
  VerificationReport rep;
  auto add = [&](std::string cat, std::string name, double value, double expected, double residual,
                 double tol, bool pass) {
    rep.checks.push_back(Check{std::move(cat), std::move(name), value, expected, residual, tol, pass});
  };

  for (const StrategySpec& s : normalization_grid()) {
    const auto g = make_strategy(s);
    const PdfReport r = verify_pdf(g);
    add("normalization", describe(s) + " [" + g.label() + "]", r.integral, 1.0, r.normalization_error,
        1e-6, r.pass);
  }

  for (const StrategySpec& s : constrained_grid()) {
    const auto g = make_strategy(s);
    const Corner c = *corner_point(s);
    const LagrangeReport l = lagrange_identity_check(g, c.lambda1, c.lambda2);
    add("lagrange_identity", describe(s), l.max_identity_residual, 0.0,
        std::max(l.max_identity_residual, l.point_mass_residual), 1e-6, l.pass);
    const double objective = c.lambda1 + c.lambda2 * *s.mu;
    const double claimed = competitive_ratio(s).theoretical_ratio;
    add("constrained_objective", describe(s), objective, claimed, std::fabs(objective - claimed), 0.0,
        objective == claimed);
  }
  for (ConflictMode m : {ConflictMode::RequestorWins, ConflictMode::RequestorAborts})
    for (int k : {2, 3}) {
      StrategySpec s{m, k, 100.0, std::nullopt, Variant::RandomizedUnconstrained};
      const auto g = make_strategy(s);
      const Corner c = *corner_point(s);
      const LagrangeReport l = lagrange_identity_check(g, c.lambda1, c.lambda2);
      add("lagrange_identity", describe(s) + " unconstrained corner", l.max_identity_residual, 0.0,
          std::max(l.max_identity_residual, l.point_mass_residual), 1e-6, l.pass);
    }

  struct RatioCase {
    StrategySpec spec;
    double expected;
    double tol;
  };
  std::vector<RatioCase> ratio_cases;
  for (double B : {10.0, 200.0, 2000.0})
    ratio_cases.push_back({{ConflictMode::RequestorWins, 2, B, std::nullopt,
                            Variant::RandomizedUnconstrained}, 2.0, 1e-4});
  for (int k : {2, 3, 5, 10})
    ratio_cases.push_back({{ConflictMode::RequestorWins, k, 100.0, std::nullopt, Variant::Deterministic},
                           det_competitive_ratio(k), 1e-4});
  for (int k : {2, 3, 5}) {
    const double E = std::exp(1.0 / (k - 1));
    ratio_cases.push_back({{ConflictMode::RequestorAborts, k, 100.0, std::nullopt,
                            Variant::RandomizedUnconstrained}, E / (E - 1.0), 1e-4});
  }
  for (int k : {3, 5, 10}) {
    StrategySpec s{ConflictMode::RequestorWins, k, 100.0, std::nullopt, Variant::RandomizedUnconstrained};
    ratio_cases.push_back({s, 2.0, 1e-4});
    s.chain_form = ChainForm::PowerKernel;
    ratio_cases.push_back({s, 1.0 / (1.0 - constants::chain_r(k)), 1e-4});
  }
  for (const RatioCase& rc : ratio_cases) {
    const WorstCase wc = worst_case_ratio(make_strategy(rc.spec));
    const double res = std::fabs(wc.ratio - rc.expected);
    add("worst_case_ratio", describe(rc.spec), wc.ratio, rc.expected, res, rc.tol, res < rc.tol);
  }
  {
    const StrategySpec s{ConflictMode::RequestorAborts, 2, 100.0, std::nullopt, Variant::DiscreteClassic};
    const WorstCase wc = worst_case_ratio(make_strategy(s));
    const double bound = constants::kEoverEm1 + 1e-3;
    add("worst_case_ratio", describe(s) + " (<= e/(e-1) + 1e-3, argmax y=B)", wc.ratio, bound,
        std::max(0.0, wc.ratio - bound), 0.0, wc.ratio <= bound && wc.y == s.B);
  }

  RngStream root(seed, label_id("verify"));
  std::uint64_t probe_id = 0;
  auto probe = [&](const GracePeriodStrategy& g, const std::string& name, bool expect_pass) {
    RngStream r = root.substream(probe_id++);
    const ProbeReport p = optimality_probe(g, probe_perturbations, r);
    add("optimality_probe", name, p.base_objective, p.theoretical, p.base_objective - p.best_objective,
        1e-4, p.pass == expect_pass);
  };
  probe(make_strategy({ConflictMode::RequestorWins, 2, 100.0, std::nullopt,
                       Variant::RandomizedUnconstrained}),
        "RW uniform k=2 B=100", true);
  probe(make_strategy({ConflictMode::RequestorAborts, 2, 100.0, std::nullopt,
                       Variant::RandomizedUnconstrained}),
        "RA exponential k=2 B=100", true);
  probe(make_strategy({ConflictMode::RequestorWins, 2, 100.0, 10.0, Variant::RandomizedConstrained}),
        "RW mean-aware k=2 B=100 mu=10", true);
  probe(make_strategy({ConflictMode::RequestorAborts, 2, 100.0, 10.0, Variant::RandomizedConstrained}),
        "RA mean-aware k=2 B=100 mu=10", true);
  {
    const StrategySpec s{ConflictMode::RequestorWins, 2, 100.0, std::nullopt,
                         Variant::RandomizedUnconstrained};
    const auto half = GracePeriodStrategy::custom(
        s, 100.0, [](double x) { return x <= 50.0 ? 0.02 : 0.0; },
        [](double x) { return std::clamp(x / 50.0, 0.0, 1.0); }, "UniformHalf");
    probe(half, "negative control: RW uniform on [0, B/2] is rejected", false);
  }

  for (double B : {1.0, 100.0}) {
    const DensityComparison d = abort_density_comparison(B);
    add("abort_density", "RW < RA density at x=B, B=" + std::to_string(static_cast<int>(B)),
        d.rw_density_at_B * B, d.ra_density_at_B * B, 0.0, 0.0, d.rw_below_ra);
  }

  {
    const StrategySpec s{ConflictMode::RequestorWins, 2, 100.0, 10.0, Variant::RandomizedConstrained};
    const PdfReport r = verify_pdf(make_printed_strategy(s));
    add("printed_form", "RW k=2 ln((B+x)/x) density is rejected", r.integral, 1.0,
        r.normalization_error, 1e-6, !r.pass);
  }
  {
    const StrategySpec s{ConflictMode::RequestorWins, 3, 100.0, 10.0, Variant::RandomizedConstrained};
    const PdfReport r = verify_pdf(make_printed_strategy(s));
    add("printed_form", "RW k=3 printed mean-aware density is rejected", r.min_density, 0.0,
        -r.min_density, 1e-12, !r.pass);
  }
  return rep;
}

}  // namespace graceful::oracle
