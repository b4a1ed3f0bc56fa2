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


// Builds each strategy family, prints its claimed ratio next to the best
// objective a point-mixture adversary can reach (holding the mean fixed when
// it is known), and draws a few grace periods.

#include <cmath>
#include <cstdio>
#include <vector>

#include "graceful/graceful.hpp"

int main() {
  using namespace graceful;
  const double B = 100.0;
  std::vector<StrategySpec> specs;
  auto add = [&](ConflictMode m, int k, Variant v, std::optional<double> mu = std::nullopt) {
    StrategySpec s;
    s.mode = m;
    s.k = k;
    s.B = B;
    s.variant = v;
    s.mu = mu;
    specs.push_back(s);
  };
  add(ConflictMode::RequestorWins, 2, Variant::Deterministic);
  add(ConflictMode::RequestorWins, 2, Variant::RandomizedUnconstrained);
  add(ConflictMode::RequestorWins, 2, Variant::RandomizedConstrained, 10.0);
  add(ConflictMode::RequestorWins, 4, Variant::RandomizedConstrained, 2.0);
  add(ConflictMode::RequestorAborts, 2, Variant::RandomizedUnconstrained);
  add(ConflictMode::RequestorAborts, 2, Variant::DiscreteClassic);
  add(ConflictMode::RequestorAborts, 3, Variant::RandomizedConstrained, 10.0);

  RngStream rng(2026);
  std::printf("%-40s %-26s %9s %9s  samples\n", "strategy", "density", "claimed", "measured");
  for (const auto& s : specs) {
    const auto g = make_strategy(s);
    const auto claim = competitive_ratio(s);
    const double S = g.support_max();
    const bool days = g.kind() == StrategyKind::DiscretePmf;
    std::vector<double> ys, ratios;
    for (int i = 1; i <= 1200; ++i) ys.push_back(days ? std::ceil(1.2 * S * i / 1200) : 1.2 * S * i / 1200);
    for (const auto& p : ratio_profile(g, ys)) ratios.push_back(p.ratio);
    const double measured = oracle::adversary_objective(ys, ratios, s.mu);
    std::printf("%-40s %-26s %9.5f %9.5f ", oracle::describe(s).c_str(), g.label().c_str(),
                claim.theoretical_ratio, measured);
    for (int i = 0; i < 3; ++i) std::printf(" %7.3f", g.to_grace(g.sample(rng)));
    std::printf("\n");
  }
  return 0;
}
