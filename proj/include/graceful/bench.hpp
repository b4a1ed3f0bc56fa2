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
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graceful/adversary.hpp"
#include "graceful/costmodel.hpp"
#include "graceful/rng.hpp"
#include "graceful/strategy.hpp"

namespace graceful::bench {

// Strategy names accepted by the synthetic benchmark:
//   DET      requestor-wins deterministic threshold B/(k-1)
//   RRW      requestor-wins randomized, mean unknown
//   RRW(mu)  requestor-wins randomized, mean known
//   RRA      requestor-aborts randomized, mean unknown
//   RRA(mu)  requestor-aborts randomized, mean known
//   DRA      requestor-aborts day-indexed ski rental (k = 2, integer B)
inline StrategySpec named_strategy(const std::string& name, int k, double B, double mu) {
  StrategySpec s;
  s.k = k;
  s.B = B;
  if (name == "DET") {
    s.variant = Variant::Deterministic;
  } else if (name == "RRW") {
    s.variant = Variant::RandomizedUnconstrained;
  } else if (name == "RRW(mu)") {
    s.variant = Variant::RandomizedConstrained;
    s.mu = mu;
  } else if (name == "RRA") {
    s.mode = ConflictMode::RequestorAborts;
  } else if (name == "RRA(mu)") {
    s.mode = ConflictMode::RequestorAborts;
    s.variant = Variant::RandomizedConstrained;
    s.mu = mu;
  } else if (name == "DRA") {
    s.mode = ConflictMode::RequestorAborts;
    s.variant = Variant::DiscreteClassic;
  } else {
    throw std::invalid_argument("unknown strategy '" + name + "'");
  }
  validate(s);
  return s;
}

struct BenchConfig {
  double B = 2000.0;
  double mu = 500.0;
  int k = 2;
  std::vector<std::string> distributions{"Geometric", "NormalTruncated", "Uniform", "Exponential",
                                         "Poisson"};
  std::vector<std::string> strategies{"DET", "RRW", "RRW(mu)", "RRA", "RRA(mu)"};
  std::size_t trials = 100000;
  std::uint64_t seed = 1;
};

struct TrialRecord {
  std::string distribution;
  std::string strategy;
  std::size_t trials = 0;
  double avg_cost = 0.0;
  double avg_opt = 0.0;
  double ratio = 0.0;
  double stderr_ratio = 0.0;  // delta-method standard error of ratio
};

inline AdversaryModel bench_adversary(LengthDist d, const BenchConfig& c) {
  if (d == LengthDist::WorstCaseForDet) return worst_case_for_det(c.k, c.B);
  return make_adversary(d, c.mu);
}

// One cell: `trials` conflicts, each with remaining time drawn by the
// interrupt protocol and a grace period drawn from the strategy. The
// remaining-time stream depends only on (seed, distribution), so every
// strategy in a row faces the same adversary draws.
inline TrialRecord run_cell(const BenchConfig& c, const std::string& dist, const std::string& name) {
  const LengthDist d = parse_dist(dist);
  const AdversaryModel adv = bench_adversary(d, c);
  const StrategySpec spec = named_strategy(name, c.k, c.B, c.mu);
  const GracePeriodStrategy g = make_strategy(spec);
  const std::string dname = to_string(d);
  RngStream ys = RngStream(c.seed, label_id("bench-y")).substream(dname);
  RngStream xs = RngStream(c.seed, label_id("bench-x")).substream(dname).substream(name);

  std::vector<double> cost(c.trials), opt(c.trials);
  double sc = 0.0, so = 0.0;
  for (std::size_t i = 0; i < c.trials; ++i) {
    const double y = sample_remaining(adv, ys);
    const ConflictInstance inst{spec.mode, spec.k, spec.B, y};
    const double x = g.to_grace(g.sample(xs));
    cost[i] = pointwise_cost(inst, x, g.tie_rule()).total;
    opt[i] = opt_cost(inst);
    sc += cost[i];
    so += opt[i];
  }
  TrialRecord r;
  r.distribution = dname;
  r.strategy = name;
  r.trials = c.trials;
  const double n = static_cast<double>(c.trials);
  r.avg_cost = sc / n;
  r.avg_opt = so / n;
  r.ratio = sc / so;
  if (c.trials > 1) {
    double ss = 0.0;
    for (std::size_t i = 0; i < c.trials; ++i) {
      const double e = cost[i] - r.ratio * opt[i];
      ss += e * e;
    }
    r.stderr_ratio = std::sqrt(ss / (n * (n - 1.0))) / r.avg_opt;
  }
  return r;
}

// Rows in configuration order: distributions outer, strategies inner.
inline std::vector<TrialRecord> run_bench(const BenchConfig& c) {
  if (c.trials == 0) throw std::invalid_argument("trials must be positive");
  std::vector<TrialRecord> rows;
  for (const std::string& d : c.distributions)
    for (const std::string& s : c.strategies) rows.push_back(run_cell(c, d, s));
  return rows;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string fmt(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline void write_csv(std::ostream& out, const std::vector<TrialRecord>& rows) {
  out << "distribution,strategy,trials,avg_cost,avg_opt,ratio,stderr\r\n";
  for (const TrialRecord& r : rows) {
    out << csv_field(r.distribution) << ',' << csv_field(r.strategy) << ',' << r.trials << ','
        << fmt(r.avg_cost) << ',' << fmt(r.avg_opt) << ',' << fmt(r.ratio) << ','
        << fmt(r.stderr_ratio) << "\r\n";
  }
}

}  // namespace graceful::bench
