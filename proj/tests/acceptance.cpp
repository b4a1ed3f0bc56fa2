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


// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "graceful/graceful.hpp"
#include "json.hpp"
#include "process.hpp"
#include "test_oracles.hpp"

namespace {

using namespace graceful;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Criterion {
  bool pass = true;
  std::vector<std::string> notes;

  template <typename... Args>
  void expect(bool ok, const char* format, Args... args) {
    char buf[512];
    if constexpr (sizeof...(Args) == 0) {
      std::snprintf(buf, sizeof buf, "%s", format);
    } else {
      std::snprintf(buf, sizeof buf, format, args...);
    }
    notes.push_back(std::string(ok ? "ok    " : "FAIL  ") + buf);
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

StrategySpec spec(ConflictMode mode, int k, double B, Variant v = Variant::RandomizedUnconstrained,
                  std::optional<double> mu = std::nullopt) {
  StrategySpec s;
  s.mode = mode;
  s.k = k;
  s.B = B;
  s.variant = v;
  s.mu = mu;
  return s;
}

constexpr auto RW = ConflictMode::RequestorWins;
constexpr auto RA = ConflictMode::RequestorAborts;
const double kE = std::numbers::e;

// 1. Worst case over point adversaries against the closed-form ratios.
Criterion closed_form_ratios() {
  Criterion c;
  const auto t0 = Clock::now();
  auto check = [&](const StrategySpec& s, double want, double tol, const char* what) {
    const auto wc = oracle::worst_case_ratio(make_strategy(s));
    c.expect(std::fabs(wc.ratio - want) <= tol, "%-34s worst %.7f at y=%g, target %.7f (tol %g)", what,
             wc.ratio, wc.y, want, tol);
  };
  for (double B : {10.0, 200.0, 2000.0}) {
    char what[64];
    std::snprintf(what, sizeof what, "RW uniform k=2 B=%g", B);
    check(spec(RW, 2, B), 2.0, 1e-4, what);
  }
  check(spec(RW, 2, 100, Variant::Deterministic), 3.0, 1e-4, "DET k=2");
  for (int k : {3, 5, 10}) {
    char what[64];
    std::snprintf(what, sizeof what, "DET k=%d", k);
    check(spec(RW, k, 100, Variant::Deterministic), 2.0 + 1.0 / (k - 1), 1e-4, what);
  }
  check(spec(RA, 2, 100, Variant::DiscreteClassic), kE / (kE - 1), 1e-3, "RA DiscreteClassic B=100");
  for (int k : {3, 5}) {
    const double E = std::exp(1.0 / (k - 1));
    char what[64];
    std::snprintf(what, sizeof what, "RA general k=%d", k);
    check(spec(RA, k, 100), E / (E - 1), 1e-4, what);
  }
  const double t = seconds_since(t0);
  c.expect(t < 1.0, "elapsed %.3f s (limit 1 s)", t);
  return c;
}

// Corner objective written out from a = k^(k-1), b = (k-1)^(k-1).
double corner_objective(ConflictMode m, int k, double B, double mu) {
  if (m == RW) {
    if (k == 2) return 1.0 + mu / (2 * B * (std::log(4.0) - 1));
    const double a = std::pow(k, k - 1), b = std::pow(k - 1, k - 1);
    return 1.0 + (k - 2) * b * mu / (2 * B * (a - 2 * b));
  }
  if (k == 2) return 1.0 + mu / (2 * B * (kE - 2));
  const double q = (k - 1) * (std::exp(1.0 / (k - 1)) - 1);
  return 1.0 + mu * (k - 1) / (2 * B * (q - 1));
}

// 2. Lagrangian identities on the mean-aware grid.
Criterion lagrange_suite() {
  Criterion c;
  const auto t0 = Clock::now();
  for (ConflictMode m : {RW, RA})
    for (int k : {2, 3, 5})
      for (double B : {10.0, 100.0}) {
        const double mu = 0.5 * crossover_threshold(m, k) * B;
        const auto s = spec(m, k, B, Variant::RandomizedConstrained, mu);
        const auto g = make_strategy(s);
        const auto corner = corner_point(s);
        const auto rep = oracle::lagrange_identity_check(g, corner->lambda1, corner->lambda2, 1000);
        const double theory = competitive_ratio(s).theoretical_ratio;
        const double want = corner_objective(m, k, B, mu);
        const bool ok = g.regime() == Regime::Constrained && rep.pass &&
                        std::fabs(theory - want) <= 1e-12 * want &&
                        corner->lambda1 + corner->lambda2 * mu == theory;
        c.expect(ok, "%-28s identity %.2e point-mass %.2e objective %.12f vs %.12f",
                 oracle::describe(s).c_str(), rep.max_identity_residual, rep.point_mass_residual, theory,
                 want);
      }
  const double t = seconds_since(t0);
  c.expect(t < 5.0, "elapsed %.3f s (limit 5 s)", t);
  return c;
}

// 3. Normalization, nonnegativity and detection of the printed form.
Criterion normalization_suite() {
  Criterion c;
  std::size_t n = 0;
  double worst_norm = 0.0, worst_min = INFINITY;
  std::string worst_label;
  for (ConflictMode m : {RW, RA})
    for (int k : {2, 3, 5, 10})
      for (double B : {10.0, 200.0, 2000.0}) {
        std::vector<StrategySpec> specs{spec(m, k, B)};
        if (m == RW) {
          auto pk = spec(m, k, B);
          pk.chain_form = ChainForm::PowerKernel;
          specs.push_back(pk);
        }
        for (double f : {0.1, 0.5, 2.0}) specs.push_back(spec(m, k, B, Variant::RandomizedConstrained, f * B));
        if (m == RA && k == 2) specs.push_back(spec(m, k, B, Variant::DiscreteClassic));
        for (const auto& s : specs) {
          const auto rep = oracle::verify_pdf(make_strategy(s));
          ++n;
          if (rep.normalization_error > worst_norm) {
            worst_norm = rep.normalization_error;
            worst_label = oracle::describe(s);
          }
          worst_min = std::min(worst_min, rep.min_density);
          if (!rep.pass) c.expect(false, "%s fails", oracle::describe(s).c_str());
        }
      }
  c.expect(worst_norm < 1e-6 && worst_min >= -1e-12,
           "%zu densities: worst |integral - 1| = %.2e (%s), min density %.3e", n, worst_norm,
           worst_label.c_str(), worst_min);

  bool exact = true;
  for (int B = 1; B <= 12; ++B) {
    const auto p = testing::exact_ski_rental_pmf(B);
    std::int64_t total = 0;
    for (auto v : p.numerators) total += v;
    const auto g = make_strategy(spec(RA, 2, B, Variant::DiscreteClassic));
    exact = exact && total == p.denominator;
    for (int i = 1; i <= B; ++i)
      exact = exact && std::fabs(g.pmf(i) - double(p.numerators[i - 1]) / p.denominator) < 1e-14;
  }
  c.expect(exact, "day-indexed pmf sums to 1 in exact integers and matches for B = 1..12");

  const auto printed = oracle::verify_pdf(make_printed_strategy(spec(RW, 2, 100)));
  c.expect(!printed.pass, "printed ln((B+x)/x) density rejected: integral %.4f", printed.integral);
  return c;
}

// 4. Synthetic single-conflict benchmark.
Criterion synthetic_bench() {
  Criterion c;
  const auto t0 = Clock::now();
  bench::BenchConfig f1;
  f1.B = 2000;
  f1.mu = 500;
  f1.strategies = {"RRW", "RRW(mu)", "RRA", "RRA(mu)"};
  const auto rows = bench::run_bench(f1);
  for (std::size_t i = 0; i < rows.size(); i += 4) {
    const double rrw = rows[i].ratio, rrwm = rows[i + 1].ratio, rra = rows[i + 2].ratio,
                 rram = rows[i + 3].ratio;
    c.expect(rrw >= 1.90 && rrw <= 2.05 && rra >= 1.50 && rra <= 1.66 && rrwm < rrw && rram < rra,
             "B=2000 %-16s RRW %.4f RRW(mu) %.4f RRA %.4f RRA(mu) %.4f", rows[i].distribution.c_str(), rrw,
             rrwm, rra, rram);
  }
  bench::BenchConfig f2 = f1;
  f2.B = 200;
  const auto rows2 = bench::run_bench(f2);
  for (std::size_t i = 0; i < rows2.size(); i += 4) {
    const double dw = std::fabs(rows2[i + 1].ratio / rows2[i].ratio - 1);
    const double da = std::fabs(rows2[i + 3].ratio / rows2[i + 2].ratio - 1);
    c.expect(dw <= 0.05 && da <= 0.05, "B=200  %-16s |RRW(mu)/RRW - 1| %.4f |RRA(mu)/RRA - 1| %.4f",
             rows2[i].distribution.c_str(), dw, da);
  }
  bench::BenchConfig wc = f1;
  wc.distributions = {"WorstCaseForDet"};
  wc.strategies = {"DET", "RRW"};
  const auto rows3 = bench::run_bench(wc);
  c.expect(rows3[0].ratio >= 2.9 && rows3[1].ratio <= 2.05, "worst case for DET: DET %.4f RRW %.4f",
           rows3[0].ratio, rows3[1].ratio);
  const double t = seconds_since(t0);
  c.expect(t <= 60.0, "elapsed %.1f s (limit 60 s)", t);
  return c;
}

// 5. Throughput bound over the bundled stress campaign, via the CLI.
Criterion simulator_bound() {
  Criterion c;
  const auto t0 = Clock::now();
  const auto r = testing::run_command(testing::cli() + " simulate --config " + testing::config("stress.json"));
  if (r.exit_code != 0) {
    c.expect(false, "simulate exited with %d", r.exit_code);
    return c;
  }
  const json j = json::parse(r.out);
  const json& cfg = j["config"];
  c.expect(cfg["n_threads"] == 8 && cfg["chain"]["k_min"] == 2 && cfg["chain"]["k_max"] == 2 &&
               cfg["dynamic_B"] == false && cfg["policy"]["B"] == 100.0,
           "stress schedule: 8 threads, k=2, static B=100");
  for (const json& row : j["campaigns"]) {
    const double lhs = row["mean_lhs"], rhs = row["rhs"], se = row["stderr_lhs"];
    const std::size_t seeds = row["seeds"];
    c.expect(seeds >= 10000 && lhs <= rhs + 3 * se && lhs < 2.0,
             "rate %-6g seeds %zu  mean lhs %.5f  rhs %.5f  3 se %.5f  w %.4f", row["rate"].get<double>(), seeds,
             lhs, rhs, 3 * se, row["waste"].get<double>());
  }
  const double t = seconds_since(t0);
  c.expect(t <= 300.0, "elapsed %.1f s (limit 300 s)", t);
  return c;
}

// 6. Progress under doubling backoff.
Criterion progress() {
  Criterion c;
  sim::ProgressConfig pc;
  pc.trials = 1000;
  const auto rep = sim::progress_check(pc);
  c.expect(rep.probability >= 0.5 - 3 * rep.stderr_probability,
           "P(commit within %d attempts) = %.4f (se %.4f), mean attempts %.3f", rep.attempt_bound,
           rep.probability, rep.stderr_probability, rep.mean_attempts);
  c.expect(rep.doubling_assertion, "B' = %g >= 2kyg = %g after %d doublings, every trial",
           rep.abort_cost_after_doublings, 2.0 * pc.k * pc.y * pc.gamma, rep.doublings);
  return c;
}

// 7. Byte-identical output for repeated runs of each subcommand.
Criterion determinism() {
  Criterion c;
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"bench-synthetic", "bench-synthetic --config " + testing::config("fig1.json") + " --trials 20000"},
      {"simulate", "simulate --config " + testing::config("stress.json") + " --seeds 50 --seed 3"},
      {"simulate (trace)", "simulate --config " + testing::config("trace.json") + " --detail"},
      {"verify", "verify --perturbations 50"},
      {"strategy-table", "strategy-table --mode RW --k 3 --B 100 --mu 5 --variant RandomizedConstrained"},
      {"progress", "progress --y 64 --gamma 4 --k 2 --B 1"},
  };
  for (const auto& [name, args] : runs) {
    const auto a = testing::run_command(testing::cli() + " " + args);
    const auto b = testing::run_command(testing::cli() + " " + args);
    c.expect(a.exit_code == 0 && a.exit_code == b.exit_code && !a.out.empty() && a.out == b.out,
             "%-18s %zu bytes, identical: %s", name.c_str(), a.out.size(), a.out == b.out ? "yes" : "no");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
      {"closed-form worst-case ratios", closed_form_ratios},
      {"Lagrangian identities", lagrange_suite},
      {"normalization", normalization_suite},
      {"synthetic benchmark", synthetic_bench},
      {"simulator throughput bound", simulator_bound},
      {"progress under doubling backoff", progress},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion c = criteria[i].second();
    std::printf("criterion %zu %s: %s\n", i + 1, c.pass ? "PASS" : "FAIL", criteria[i].first.c_str());
    for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    failed += c.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
