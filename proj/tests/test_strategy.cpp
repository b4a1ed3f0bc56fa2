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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "graceful/strategy.hpp"
#include "test_oracles.hpp"

namespace graceful {
namespace {

using CM = ConflictMode;
constexpr auto RW = CM::RequestorWins;
constexpr auto RA = CM::RequestorAborts;
const double kLn4m1 = std::log(4.0) - 1.0;
const double kE = std::numbers::e;

StrategySpec spec(CM mode, int k, double B, Variant v = Variant::RandomizedUnconstrained,
                  std::optional<double> mu = std::nullopt) {
  StrategySpec s;
  s.mode = mode;
  s.k = k;
  s.B = B;
  s.variant = v;
  s.mu = mu;
  return s;
}

TEST(Deterministic, Threshold) {
  EXPECT_DOUBLE_EQ(det_threshold(2, 100), 100.0);
  EXPECT_DOUBLE_EQ(det_threshold(5, 100), 25.0);
  EXPECT_THROW(det_threshold(2, 0.0), std::domain_error);
  EXPECT_THROW(det_threshold(1, 100), std::domain_error);
  const auto g = make_strategy(spec(RW, 5, 100, Variant::Deterministic));
  EXPECT_EQ(g.kind(), StrategyKind::Atom);
  EXPECT_DOUBLE_EQ(g.atom(), 25.0);
  EXPECT_THROW(g.pdf(1.0), std::logic_error);
  RngStream rng(1);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(g.sample(rng), 25.0);
}

TEST(Deterministic, Ratio) {
  EXPECT_DOUBLE_EQ(det_competitive_ratio(2), 3.0);
  EXPECT_DOUBLE_EQ(det_competitive_ratio(3), 2.5);
  EXPECT_THROW(det_competitive_ratio(1), std::domain_error);
  double prev = det_competitive_ratio(2);
  for (int k = 3; k < 1000; ++k) {
    const double r = det_competitive_ratio(k);
    EXPECT_LT(r, prev);
    EXPECT_GT(r, 2.0);
    prev = r;
  }
}

TEST(Threshold, Examples) {
  EXPECT_TRUE(threshold_condition(spec(RW, 2, 2000, Variant::RandomizedConstrained, 500)));
  EXPECT_FALSE(threshold_condition(spec(RW, 2, 200, Variant::RandomizedConstrained, 500)));
  EXPECT_TRUE(threshold_condition(spec(RW, 3, 100, Variant::RandomizedConstrained, 10)));
  EXPECT_THROW(threshold_condition(spec(RW, 2, 100)), std::invalid_argument);
  EXPECT_NEAR(crossover_threshold(RW, 2), 0.772588722, 1e-9);
}

TEST(Threshold, PrintedRules) {
  // k = 3 printed requestor-wins value (9 - 8) / (1 * (9 - 4)) = 0.2.
  auto s = spec(RW, 3, 100, Variant::RandomizedConstrained, 20.0);
  s.threshold_rule = ThresholdRule::AsPrinted;
  EXPECT_TRUE(threshold_condition(s));
  s.mu = 20.001;
  EXPECT_FALSE(threshold_condition(s));
  // Requestor-aborts k = 3: mu / (B - 1) < 2(q - 1) and its raw form.
  const double q = constants::ra_q(3);
  auto a = spec(RA, 3, 100, Variant::RandomizedConstrained, 0.99 * 99 * 2 * (q - 1));
  a.threshold_rule = ThresholdRule::AsPrinted;
  EXPECT_TRUE(threshold_condition(a));
  a.mu = 1.01 * 99 * 2 * (q - 1);
  EXPECT_FALSE(threshold_condition(a));
  a.threshold_rule = ThresholdRule::AsPrintedRaw;
  a.mu = 2 * (q - 1) * 100 - 2 * (q - 1) - 1e-6;
  EXPECT_TRUE(threshold_condition(a));
}

TEST(Strategy, Examples) {
  const auto u = make_strategy(spec(RW, 2, 100));
  EXPECT_DOUBLE_EQ(u.pdf(50), 0.01);
  EXPECT_DOUBLE_EQ(u.cdf(100), 1.0);
  EXPECT_DOUBLE_EQ(u.support_max(), 100.0);

  const auto c = make_strategy(spec(RW, 2, 100, Variant::RandomizedConstrained, 10));
  EXPECT_EQ(c.form(), DensityForm::RwLog);
  EXPECT_EQ(c.regime(), Regime::Constrained);
  EXPECT_EQ(c.pdf(0), 0.0);
  EXPECT_NEAR(c.pdf(100), std::log(2.0) / (100 * kLn4m1), 1e-15);
  EXPECT_NEAR(c.pdf(100), 0.017941, 5e-6);
  for (double x : {0.0, 13.0, 50.0, 99.0}) {
    EXPECT_NEAR(c.cdf(x), ((100 + x) * std::log((100 + x) / 100) - x) / (100 * kLn4m1), 1e-14);
  }

  const auto ra = make_strategy(spec(RA, 2, 100, Variant::RandomizedConstrained, 10));
  EXPECT_EQ(ra.form(), DensityForm::RaExpConstrained);
  EXPECT_EQ(ra.pdf(0), 0.0);
  for (double x : {1.0, 40.0, 77.0})
    EXPECT_NEAR(ra.cdf(x), (100 * std::exp(x / 100) - 100 - x) / (100 * (kE - 2)), 1e-14);
  EXPECT_DOUBLE_EQ(ra.cdf(100), 1.0);
  EXPECT_NEAR(testing::midpoint([&](double x) { return ra.pdf(x); }, 0, 100), 1.0, 1e-9);
}

TEST(Strategy, DiscreteSmallB) {
  const auto d = make_strategy(spec(RA, 2, 3, Variant::DiscreteClassic));
  EXPECT_EQ(d.kind(), StrategyKind::DiscretePmf);
  EXPECT_NEAR(d.pmf(1), 4.0 / 19, 1e-15);
  EXPECT_NEAR(d.pmf(2), 6.0 / 19, 1e-15);
  EXPECT_NEAR(d.pmf(3), 9.0 / 19, 1e-15);
  EXPECT_EQ(d.tie_rule(), TieRule::Commit);
  EXPECT_DOUBLE_EQ(d.to_grace(1.0), 0.0);
}

TEST(Strategy, DiscreteExactRational) {
  for (int B = 1; B <= 12; ++B) {
    const auto exact = testing::exact_ski_rental_pmf(B);
    std::int64_t total = 0;
    for (auto n : exact.numerators) {
      ASSERT_GE(n, 0);
      total += n;
    }
    EXPECT_EQ(total, exact.denominator) << "B=" << B;
    const auto d = make_strategy(spec(RA, 2, B, Variant::DiscreteClassic));
    ASSERT_EQ(d.days(), B);
    for (int i = 1; i <= B; ++i) {
      const double want = static_cast<double>(exact.numerators[i - 1]) / exact.denominator;
      EXPECT_NEAR(d.pmf(i), want, 1e-14) << "B=" << B << " i=" << i;
    }
  }
}

TEST(Strategy, InvalidCombinations) {
  EXPECT_THROW(make_strategy(spec(RA, 2, 100, Variant::Deterministic)), std::invalid_argument);
  EXPECT_THROW(make_strategy(spec(RW, 2, 100, Variant::DiscreteClassic)), std::invalid_argument);
  EXPECT_THROW(make_strategy(spec(RA, 3, 100, Variant::DiscreteClassic)), std::invalid_argument);
  EXPECT_THROW(make_strategy(spec(RA, 2, 10.5, Variant::DiscreteClassic)), std::invalid_argument);
  EXPECT_THROW(make_strategy(spec(RW, 2, 100, Variant::RandomizedConstrained)), std::invalid_argument);
  EXPECT_THROW(make_strategy(spec(RW, 2, 100, Variant::RandomizedConstrained, -1.0)), std::domain_error);
  EXPECT_THROW(make_strategy(spec(RW, 1, 100)), std::domain_error);
}

TEST(Strategy, FallsBackWhenThresholdFails) {
  const auto a = make_strategy(spec(RW, 2, 200, Variant::RandomizedConstrained, 500));
  EXPECT_EQ(a.form(), DensityForm::Uniform);
  EXPECT_EQ(a.regime(), Regime::Unconstrained);
  const auto b = make_strategy(spec(RW, 3, 100, Variant::RandomizedConstrained, 90));
  EXPECT_EQ(b.form(), DensityForm::RwPowerKernel);
  const auto c = make_strategy(spec(RA, 5, 100, Variant::RandomizedConstrained, 500));
  EXPECT_EQ(c.form(), DensityForm::RaExp);
}

TEST(Sampling, UniformMean) {
  const auto u = make_strategy(spec(RW, 2, 100));
  RngStream rng(2024);
  std::vector<double> xs(1000000);
  for (auto& x : xs) x = u.sample(rng);
  EXPECT_NEAR(testing::mean_se(xs).mean, 50.0, 0.2);
}

TEST(Sampling, ConstrainedKolmogorovSmirnov) {
  const auto c = make_strategy(spec(RW, 2, 100, Variant::RandomizedConstrained, 10));
  RngStream rng(7);
  std::vector<double> xs(1000000);
  for (auto& x : xs) x = c.sample(rng);
  EXPECT_LT(testing::ks_statistic(xs, [&](double x) { return c.cdf(x); }), 0.002);
}

TEST(Sampling, OtherFormsKolmogorovSmirnov) {
  const std::vector<StrategySpec> specs = {
      spec(RA, 2, 100), spec(RA, 5, 100), spec(RW, 5, 100, Variant::RandomizedConstrained, 1.0),
      spec(RA, 3, 100, Variant::RandomizedConstrained, 10.0)};
  StrategySpec pk = spec(RW, 4, 100);
  pk.chain_form = ChainForm::PowerKernel;
  auto all = specs;
  all.push_back(pk);
  for (const auto& s : all) {
    const auto g = make_strategy(s);
    RngStream rng(11);
    std::vector<double> xs(200000);
    for (auto& x : xs) x = g.sample(rng);
    EXPECT_LT(testing::ks_statistic(xs, [&](double x) { return g.cdf(x); }), 0.005) << g.label();
  }
}

TEST(Sampling, DiscreteFrequencies) {
  const auto d = make_strategy(spec(RA, 2, 3, Variant::DiscreteClassic));
  RngStream rng(5);
  std::vector<int> counts(4, 0);
  const int n = 400000;
  for (int i = 0; i < n; ++i) ++counts[static_cast<int>(d.sample(rng))];
  EXPECT_EQ(counts[0], 0);
  for (int i = 1; i <= 3; ++i) EXPECT_NEAR(counts[i] / double(n), d.pmf(i), 0.004);
}

TEST(Ratio, Examples) {
  EXPECT_NEAR(competitive_ratio(spec(RA, 2, 100)).theoretical_ratio, 1.581977, 1e-6);
  EXPECT_NEAR(competitive_ratio(spec(RA, 2, 100, Variant::DiscreteClassic)).theoretical_ratio,
              kE / (kE - 1), 1e-15);
  StrategySpec s = spec(RW, 3, 100);
  s.chain_form = ChainForm::PowerKernel;
  EXPECT_NEAR(competitive_ratio(s).theoretical_ratio, 1.8, 1e-12);
  EXPECT_DOUBLE_EQ(competitive_ratio(spec(RW, 3, 100)).theoretical_ratio, 2.0);
  EXPECT_NEAR(competitive_ratio(spec(RA, 3, 100)).theoretical_ratio, 2.54149, 1e-5);
  EXPECT_DOUBLE_EQ(competitive_ratio(spec(RW, 4, 100, Variant::Deterministic)).theoretical_ratio,
                   2.0 + 1.0 / 3);
  const auto c = competitive_ratio(spec(RW, 2, 2000, Variant::RandomizedConstrained, 500));
  EXPECT_EQ(c.regime, Regime::Constrained);
  EXPECT_DOUBLE_EQ(c.theoretical_ratio, 1.0 + 500 / (2 * 2000 * constants::kLn4m1));
  const auto a = competitive_ratio(spec(RA, 2, 2000, Variant::RandomizedConstrained, 500));
  EXPECT_NEAR(a.theoretical_ratio, 1.0 + 500 / (2 * 2000 * (kE - 2)), 1e-15);
}

TEST(Ratio, AlwaysAboveOneAndZeroMeanNotClaimed) {
  const auto z = competitive_ratio(spec(RW, 2, 100, Variant::RandomizedConstrained, 0.0));
  EXPECT_TRUE(z.threshold_holds);
  EXPECT_FALSE(z.bound_claimed);
  EXPECT_DOUBLE_EQ(z.theoretical_ratio, 1.0);
  const auto g = make_strategy(spec(RW, 2, 100, Variant::RandomizedConstrained, 0.0));
  EXPECT_NEAR(g.cdf(100), 1.0, 1e-12);
  for (CM m : {RW, RA})
    for (int k : {2, 3, 5, 10})
      for (double f : {0.1, 0.5, 2.0}) {
        EXPECT_GT(competitive_ratio(spec(m, k, 200, Variant::RandomizedConstrained, f * 200)).theoretical_ratio,
                  1.0);
      }
}

TEST(Ratio, RegimeOrderingAndBoundary) {
  for (CM m : {RW, RA}) {
    for (int k : {2, 3, 4, 5, 10, 40}) {
      const double B = 150.0;
      const double edge = crossover_threshold(m, k) * B;
      auto fallback = spec(m, k, B, Variant::RandomizedConstrained, 2 * edge);
      const double unconstrained = competitive_ratio(fallback).theoretical_ratio;
      for (double f : {0.0, 0.1, 0.5, 0.9, 0.999999}) {
        const auto r = competitive_ratio(spec(m, k, B, Variant::RandomizedConstrained, f * edge));
        ASSERT_TRUE(r.threshold_holds);
        if (f > 0.0) EXPECT_LT(r.theoretical_ratio, unconstrained);
      }
      // Ratio at the boundary itself, from the corner expression.
      const auto corner = corner_point(spec(m, k, B, Variant::RandomizedConstrained, 0.5 * edge));
      ASSERT_TRUE(corner);
      EXPECT_NEAR(corner->lambda1 + corner->lambda2 * edge, unconstrained, 1e-9)
          << to_string(m) << " k=" << k;
    }
  }
}

TEST(Ratio, ModeCrossover) {
  EXPECT_LT(competitive_ratio(spec(RA, 2, 100)).theoretical_ratio,
            competitive_ratio(spec(RW, 2, 100)).theoretical_ratio);
  for (int k : {3, 5, 10}) {
    StrategySpec rw = spec(RW, k, 100);
    rw.chain_form = ChainForm::PowerKernel;
    EXPECT_LT(competitive_ratio(rw).theoretical_ratio, competitive_ratio(spec(RA, k, 100)).theoretical_ratio)
        << "k=" << k;
  }
}

std::vector<StrategySpec> grid() {
  std::vector<StrategySpec> out;
  for (CM m : {RW, RA})
    for (int k : {2, 3, 5, 10})
      for (double B : {10.0, 200.0, 2000.0}) {
        out.push_back(spec(m, k, B));
        if (m == RW) {
          StrategySpec pk = spec(m, k, B);
          pk.chain_form = ChainForm::PowerKernel;
          out.push_back(pk);
          out.push_back(spec(m, k, B, Variant::Deterministic));
        }
        for (double f : {0.1, 0.5, 2.0}) out.push_back(spec(m, k, B, Variant::RandomizedConstrained, f * B));
        // Exactly at half the threshold, so the constrained branch is used.
        out.push_back(spec(m, k, B, Variant::RandomizedConstrained, 0.5 * crossover_threshold(m, k) * B));
      }
  return out;
}

TEST(Invariants, NormalizationAndNonnegativity) {
  for (const auto& s : grid()) {
    const auto g = make_strategy(s);
    if (g.kind() == StrategyKind::Atom) {
      EXPECT_GE(g.atom(), 0.0);
      EXPECT_LE(g.atom(), g.support_max());
      continue;
    }
    const double S = g.support_max();
    EXPECT_NEAR(numeric::integral([&](double x) { return g.pdf(x); }, 0.0, S), 1.0, 1e-6) << g.label();
    EXPECT_NEAR(g.cdf(S), 1.0, 1e-9);
    EXPECT_EQ(g.cdf(-1e-9), 0.0);
    EXPECT_EQ(g.pdf(S * 1.001), 0.0);
    double prev = 0.0;
    for (int i = 0; i <= 10000; ++i) {
      const double x = S * i / 10000.0;
      ASSERT_GE(g.pdf(x), -1e-12) << g.label() << " x=" << x;
      const double c = g.cdf(x);
      ASSERT_GE(c, prev - 1e-15);
      prev = c;
    }
  }
}

TEST(Invariants, CdfMatchesDerivativeAndQuadrature) {
  for (const auto& s : grid()) {
    const auto g = make_strategy(s);
    if (g.kind() != StrategyKind::ContinuousPdf) continue;
    const double S = g.support_max();
    const double h = 1e-4 * S;
    for (int i = 1; i < 20; ++i) {
      const double x = S * i / 20.0;
      const double fd = (g.cdf(x + h) - g.cdf(x - h)) / (2 * h);
      EXPECT_NEAR(fd, g.pdf(x), 1e-5 * g.pdf(x) + 1e-12) << g.label() << " x=" << x;
      EXPECT_NEAR(g.cdf(x), numeric::integral([&](double t) { return g.pdf(t); }, 0.0, x), 1e-8);
    }
  }
}

TEST(Invariants, ReductionConsistency) {
  const double B = 100;
  const auto ra = make_strategy(spec(RA, 2, B));
  const auto rac = make_strategy(spec(RA, 2, B, Variant::RandomizedConstrained, 10));
  StrategySpec pk = spec(RW, 2, B);
  pk.chain_form = ChainForm::PowerKernel;
  const auto rw = make_strategy(pk);
  for (int i = 0; i <= 100; ++i) {
    const double x = B * i / 100.0;
    EXPECT_NEAR(ra.pdf(x), std::exp(x / B) / (B * (kE - 1)), 1e-12);
    EXPECT_NEAR(rac.pdf(x), std::expm1(x / B) / (B * (kE - 2)), 1e-12);
    EXPECT_NEAR(rw.pdf(x), 1.0 / B, 1e-12);
  }
  // The k >= 3 power kernel is not constant, unlike the flat (k-1)/B form.
  StrategySpec pk3 = spec(RW, 3, B);
  pk3.chain_form = ChainForm::PowerKernel;
  const auto g3 = make_strategy(pk3);
  EXPECT_GT(g3.pdf(50) / g3.pdf(0), 1.4);
  EXPECT_DOUBLE_EQ(make_strategy(spec(RW, 3, B)).pdf(25), 2.0 / B);
}

TEST(Printed, FormsAreRejected) {
  const auto p2 = make_printed_strategy(spec(RW, 2, 100));
  // Just inside the support, where the cdf is not clamped.
  EXPECT_GT(std::fabs(p2.cdf(99.999) - 1.0), 1.0);
  const auto p3 = make_printed_strategy(spec(RW, 3, 100));
  EXPECT_LT(p3.pdf(0.0), 0.0);
}

}  // namespace
}  // namespace graceful
