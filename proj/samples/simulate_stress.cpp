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


// A small throughput-bound campaign: eight threads, requestor-wins with the
// flat strategy, static abort cost, three conflict rates.

#include <cstdio>

#include "graceful/graceful.hpp"

int main() {
  using namespace graceful;
  sim::SimConfig c;
  c.n_threads = 8;
  c.policy.B = 100.0;
  c.length_model = make_adversary(LengthDist::Exponential, 100.0);
  c.dynamic_B = false;
  c.horizon = 2000.0;

  std::printf("%8s %10s %10s %10s %8s %6s\n", "rate", "mean_lhs", "stderr", "rhs", "waste", "pass");
  for (double rate : {0.002, 0.01, 0.05}) {
    c.conflict_rate = rate;
    const auto r = sim::run_campaign(c, 1, 1000);
    std::printf("%8g %10.5f %10.5f %10.5f %8.4f %6s\n", rate, r.mean_lhs, r.stderr_lhs, r.rhs, r.waste,
                r.pass ? "yes" : "no");
  }
  return 0;
}
