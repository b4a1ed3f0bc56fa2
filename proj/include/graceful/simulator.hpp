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

// Discrete-event simulation of n threads running transactions under
// injected conflicts.
//
// Conflict times live on each thread's work clock (useful execution, stalls
// excluded). The receiver of a conflict is whichever transaction occupies
// that work time and its remaining time is the rest of that transaction, so
// the schedule is fixed before any policy decision: an online run and the
// offline baseline on the same seed see the same (time, receiver, k, y)
// events. Each transaction suffers at most one conflict. The k - 1 waiting
// transactions of a chain are synthetic and contribute only their delay.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "graceful/adversary.hpp"
#include "graceful/costmodel.hpp"
#include "graceful/rng.hpp"
#include "graceful/strategy.hpp"

namespace graceful::sim {

enum class PolicyKind { Online, Offline };
enum class Backoff { None, MultiplicativeDoubling };
enum class ScheduleKind { RandomRate, Trace };

struct TraceEvent {
  double time = 0.0;  // receiver thread's work clock
  int thread = 0;
  int k = 2;
  int line = 0;  // source line, 0 when not from a file
};

struct SimConfig {
  int n_threads = 1;
  ConflictMode mode = ConflictMode::RequestorWins;
  PolicyKind policy_kind = PolicyKind::Online;
  // Online policy. Its mode, k and B are replaced per conflict.
  StrategySpec policy{};
  AdversaryModel length_model = make_adversary(LengthDist::Exponential, 50.0);
  ScheduleKind schedule = ScheduleKind::RandomRate;
  double conflict_rate = 0.0;  // conflicts per unit of work time, per thread
  std::vector<TraceEvent> trace;
  int k_min = 2;  // chain size drawn uniformly from [k_min, k_max]
  int k_max = 2;
  double cleanup_cost = 0.0;
  bool dynamic_B = true;  // B = elapsed + cleanup_cost, else policy.B
  Backoff backoff = Backoff::None;
  double horizon = 1000.0;  // work time per thread
  std::uint64_t seed = 1;
};

inline void validate(const SimConfig& c) {
  if (c.n_threads < 1) throw std::invalid_argument("n_threads must be >= 1");
  if (!(c.horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  if (!(c.conflict_rate >= 0.0)) throw std::invalid_argument("conflict_rate must be >= 0");
  if (c.k_min < 2 || c.k_max < c.k_min) throw std::invalid_argument("chain sizes need 2 <= k_min <= k_max");
  if (!(c.cleanup_cost >= 0.0)) throw std::invalid_argument("cleanup_cost must be >= 0");
  if (c.dynamic_B && c.mode == ConflictMode::RequestorWins && !(c.cleanup_cost > 0.0))
    throw std::invalid_argument("dynamic abort cost needs cleanup_cost > 0");
  if (!c.dynamic_B || c.mode == ConflictMode::RequestorAborts) check_chain(2, c.policy.B);
  if (c.policy_kind == PolicyKind::Online) {
    StrategySpec s = c.policy;
    s.mode = c.mode;
    s.k = c.k_min;
    if (c.dynamic_B && c.mode == ConflictMode::RequestorWins) s.B = std::max(1.0, c.cleanup_cost);
    graceful::validate(s);
    if (s.variant == Variant::DiscreteClassic && c.dynamic_B && c.mode == ConflictMode::RequestorWins)
      throw std::invalid_argument("DiscreteClassic needs a static integer B");
  }
}

// ---------------------------------------------------------------------------
// Schedule

struct TxPlan {
  double start = 0.0;  // work clock
  double rho = 0.0;
  int conflict = -1;  // index into Schedule::conflicts
};

struct ConflictEvent {
  std::uint64_t id = 0;
  int thread = 0;
  std::size_t tx = 0;
  double time = 0.0;     // work clock
  int k = 2;
  double y = 0.0;        // remaining time of the receiver
  double elapsed = 0.0;  // receiver's progress when hit
};

struct Schedule {
  std::vector<std::vector<TxPlan>> threads;
  std::vector<ConflictEvent> conflicts;
  std::size_t suppressed = 0;
};

namespace detail {

inline std::vector<TxPlan> plan_thread(const SimConfig& c, int h) {
  RngStream rng = RngStream(c.seed, label_id("lengths")).substream(static_cast<std::uint64_t>(h));
  std::vector<TxPlan> txs;
  double w = 0.0;
  while (w < c.horizon) {
    const double rho = sample_length(c.length_model, rng);
    txs.push_back(TxPlan{w, rho, -1});
    w += rho;
  }
  return txs;
}

inline std::size_t locate(const std::vector<TxPlan>& txs, double t) {
  const auto it = std::upper_bound(txs.begin(), txs.end(), t,
                                   [](double v, const TxPlan& p) { return v < p.start; });
  return static_cast<std::size_t>(it - txs.begin()) - 1;
}

inline std::string at_line(int line) {
  return line > 0 ? "trace line " + std::to_string(line) + ": " : "trace event: ";
}

}  // namespace detail

inline Schedule build_schedule(const SimConfig& c) {
  validate(c);
  Schedule s;
  s.threads.resize(static_cast<std::size_t>(c.n_threads));
  for (int h = 0; h < c.n_threads; ++h) s.threads[static_cast<std::size_t>(h)] = detail::plan_thread(c, h);

  // Returns false when the receiver already has a conflict.
  auto attach = [&](int h, double t, int k) {
    auto& txs = s.threads[static_cast<std::size_t>(h)];
    const std::size_t j = detail::locate(txs, t);
    TxPlan& tx = txs[j];
    if (tx.conflict >= 0) return false;
    ConflictEvent e;
    e.id = (static_cast<std::uint64_t>(h) << 32) | static_cast<std::uint64_t>(j);
    e.thread = h;
    e.tx = j;
    e.time = t;
    e.k = k;
    e.elapsed = t - tx.start;
    e.y = tx.rho - e.elapsed;
    if (!(e.y > 0.0)) return false;
    tx.conflict = static_cast<int>(s.conflicts.size());
    s.conflicts.push_back(e);
    return true;
  };

  if (c.schedule == ScheduleKind::RandomRate) {
    if (c.conflict_rate > 0.0) {
      for (int h = 0; h < c.n_threads; ++h) {
        RngStream rng = RngStream(c.seed, label_id("conflicts")).substream(static_cast<std::uint64_t>(h));
        const auto span = static_cast<std::uint64_t>(c.k_max - c.k_min + 1);
        double t = rng.exponential(1.0 / c.conflict_rate);
        while (t < c.horizon) {
          const int k = c.k_min + static_cast<int>(rng.below(span));
          if (!attach(h, t, k)) ++s.suppressed;
          t += rng.exponential(1.0 / c.conflict_rate);
        }
      }
    }
  } else {
    std::map<std::uint64_t, int> first_line;
    for (const TraceEvent& e : c.trace) {
      const std::string where = detail::at_line(e.line);
      if (e.thread < 0 || e.thread >= c.n_threads)
        throw std::invalid_argument(where + "receiver thread " + std::to_string(e.thread) +
                                    " outside [0, " + std::to_string(c.n_threads) + ")");
      if (e.k < 2) throw std::invalid_argument(where + "chain size k must be >= 2");
      if (!(e.time >= 0.0) || !(e.time < c.horizon))
        throw std::invalid_argument(where + "time must lie in [0, horizon)");
      const auto& txs = s.threads[static_cast<std::size_t>(e.thread)];
      const std::size_t j = detail::locate(txs, e.time);
      const std::uint64_t key = (static_cast<std::uint64_t>(e.thread) << 32) | j;
      if (auto it = first_line.find(key); it != first_line.end())
        throw std::invalid_argument(where + "receiver transaction " + std::to_string(j) + " of thread " +
                                    std::to_string(e.thread) + " is already in a conflict (line " +
                                    std::to_string(it->second) +
                                    "); a receiver in grace cannot be conflicted again");
      first_line.emplace(key, e.line);
      attach(e.thread, e.time, e.k);
    }
  }
  std::sort(s.conflicts.begin(), s.conflicts.end(),
            [](const ConflictEvent& a, const ConflictEvent& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < s.conflicts.size(); ++i) {
    const ConflictEvent& e = s.conflicts[i];
    s.threads[static_cast<std::size_t>(e.thread)][e.tx].conflict = static_cast<int>(i);
  }
  return s;
}

// Parses `time receiver_thread k` lines; '#' starts a comment.
inline std::vector<TraceEvent> parse_trace(std::istream& in) {
  std::vector<TraceEvent> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a, b, c, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b >> c) || (ls >> extra))
      throw std::invalid_argument("trace line " + std::to_string(n) +
                                  ": expected exactly three fields 'time receiver_thread k'");
    TraceEvent e;
    e.line = n;
    try {
      std::size_t pa = 0, pb = 0, pc = 0;
      e.time = std::stod(a, &pa);
      e.thread = std::stoi(b, &pb);
      e.k = std::stoi(c, &pc);
      if (pa != a.size() || pb != b.size() || pc != c.size()) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
      throw std::invalid_argument("trace line " + std::to_string(n) + ": cannot parse '" + line + "'");
    }
    out.push_back(e);
  }
  return out;
}

inline std::vector<TraceEvent> load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file '" + path + "'");
  return parse_trace(in);
}

// ---------------------------------------------------------------------------
// Execution

enum class TxStatus { Running, InGrace, WaitingInChain, Committed };

struct TransactionState {
  std::size_t id = 0;
  int thread = 0;
  double rho = 0.0;
  double elapsed = 0.0;
  int attempts = 1;
  double abort_cost = 0.0;  // B_T
  TxStatus status = TxStatus::Running;
  double start_wall = 0.0;
  double stall = 0.0;  // grace run plus abort cost paid by this transaction
};

struct ConflictRecord {
  std::uint64_t id = 0;
  int thread = 0;
  double time = 0.0;
  double wall = 0.0;
  int k = 2;
  double y = 0.0;
  double B = 0.0;
  double x = 0.0;
  bool committed = false;
  double cost = 0.0;
  double opt = 0.0;
};

struct SimMetrics {
  double sum_gamma = 0.0;  // transactions plus synthetic waiters
  double sum_rho = 0.0;
  double sum_alpha = 0.0;  // sum_gamma - sum_rho
  double waste = 0.0;      // sum_alpha / sum_rho
  double waiter_delay = 0.0;
  double sum_conflict_cost = 0.0;
  double makespan = 0.0;
  std::size_t transactions = 0;
  std::size_t commits = 0;
  std::size_t aborts = 0;
  std::size_t conflicts = 0;
  std::size_t suppressed = 0;
  std::map<int, std::size_t> attempts_histogram;
  std::vector<double> gamma;  // per transaction, thread-major
  std::vector<ConflictRecord> records;
};

namespace detail {

enum class EventKind : int { Conflict = 0, GraceExpire = 1, Commit = 2 };

struct Event {
  double wall;
  int thread;
  EventKind kind;
  std::size_t tx;
  bool operator>(const Event& o) const {
    return std::tie(wall, thread, kind, tx) > std::tie(o.wall, o.thread, o.kind, o.tx);
  }
};

}  // namespace detail

inline SimMetrics run_schedule(const SimConfig& c, const Schedule& s, PolicyKind policy) {
  SimMetrics m;
  m.suppressed = s.suppressed;
  const RngStream policy_root(c.seed, label_id("policy"));

  std::vector<std::vector<TransactionState>> state(s.threads.size());
  std::priority_queue<detail::Event, std::vector<detail::Event>, std::greater<>> queue;
  std::vector<std::size_t> gamma_offset(s.threads.size() + 1, 0);
  for (std::size_t h = 0; h < s.threads.size(); ++h) gamma_offset[h + 1] = gamma_offset[h] + s.threads[h].size();
  m.gamma.assign(gamma_offset.back(), 0.0);

  auto begin_tx = [&](int h, std::size_t j, double now) {
    const TxPlan& p = s.threads[static_cast<std::size_t>(h)][j];
    TransactionState& t = state[static_cast<std::size_t>(h)][j];
    t.status = TxStatus::Running;
    t.start_wall = now;
    if (p.conflict >= 0) {
      queue.push({now + s.conflicts[static_cast<std::size_t>(p.conflict)].elapsed, h,
                  detail::EventKind::Conflict, j});
    } else {
      queue.push({now + p.rho, h, detail::EventKind::Commit, j});
    }
  };

  for (std::size_t h = 0; h < s.threads.size(); ++h) {
    state[h].resize(s.threads[h].size());
    for (std::size_t j = 0; j < s.threads[h].size(); ++j) {
      TransactionState& t = state[h][j];
      t.id = gamma_offset[h] + j;
      t.thread = static_cast<int>(h);
      t.rho = s.threads[h][j].rho;
      t.abort_cost = c.policy.B;
    }
    if (!s.threads[h].empty()) begin_tx(static_cast<int>(h), 0, 0.0);
  }

  std::map<std::pair<int, double>, GracePeriodStrategy> strategies;
  auto strategy_for = [&](int k, double B) -> const GracePeriodStrategy& {
    auto key = std::make_pair(k, B);
    auto it = strategies.find(key);
    if (it == strategies.end()) {
      StrategySpec sp = c.policy;
      sp.mode = c.mode;
      sp.k = k;
      sp.B = B;
      it = strategies.emplace(key, make_strategy(sp)).first;
    }
    return it->second;
  };

  std::vector<ConflictRecord> pending(s.conflicts.size());

  while (!queue.empty()) {
    const detail::Event ev = queue.top();
    queue.pop();
    const auto h = static_cast<std::size_t>(ev.thread);
    TransactionState& t = state[h][ev.tx];
    const TxPlan& plan = s.threads[h][ev.tx];
    switch (ev.kind) {
      case detail::EventKind::Conflict: {
        const ConflictEvent& ce = s.conflicts[static_cast<std::size_t>(plan.conflict)];
        t.elapsed = ce.elapsed;
        double B = c.policy.B;
        if (c.dynamic_B && c.mode == ConflictMode::RequestorWins) B = ce.elapsed + c.cleanup_cost;
        t.abort_cost = B;
        const ConflictInstance inst{c.mode, ce.k, B, ce.y};
        double x;
        TieRule tie = TieRule::Abort;
        if (policy == PolicyKind::Offline) {
          const bool wait = c.mode == ConflictMode::RequestorWins ? (ce.k - 1) * ce.y <= B : ce.y <= B;
          x = wait ? ce.y : 0.0;
          tie = wait ? TieRule::Commit : TieRule::Abort;
        } else {
          const GracePeriodStrategy& g = strategy_for(ce.k, B);
          RngStream r = policy_root.substream(ce.id);
          x = g.to_grace(g.sample(r));
          tie = g.tie_rule();
        }
        const CostBreakdown cost = pointwise_cost(inst, x, tie);
        ConflictRecord& rec = pending[static_cast<std::size_t>(plan.conflict)];
        rec = ConflictRecord{ce.id, ce.thread, ce.time, ev.wall, ce.k, ce.y, B, x, cost.committed,
                             cost.total, opt_cost(inst)};
        ++m.conflicts;
        m.sum_conflict_cost += cost.total;
        if (cost.committed) {
          m.waiter_delay += (ce.k - 1) * ce.y;
          queue.push({ev.wall + ce.y, ev.thread, detail::EventKind::Commit, ev.tx});
        } else if (c.mode == ConflictMode::RequestorWins) {
          // Receiver keeps running through the grace period, then aborts.
          t.status = TxStatus::InGrace;
          t.stall += x + B;
          m.waiter_delay += (ce.k - 1) * x;
          queue.push({ev.wall + x, ev.thread, detail::EventKind::GraceExpire, ev.tx});
        } else {
          // The requestor side backs off; the receiver is untouched.
          m.waiter_delay += cost.total;
          queue.push({ev.wall + ce.y, ev.thread, detail::EventKind::Commit, ev.tx});
        }
        break;
      }
      case detail::EventKind::GraceExpire: {
        const ConflictEvent& ce = s.conflicts[static_cast<std::size_t>(plan.conflict)];
        ++m.aborts;
        const double B = t.abort_cost;
        ++t.attempts;
        if (c.backoff == Backoff::MultiplicativeDoubling) t.abort_cost *= 2.0;
        t.status = TxStatus::Running;
        // Paying B restores the progress made before the conflict.
        queue.push({ev.wall + B + ce.y, ev.thread, detail::EventKind::Commit, ev.tx});
        break;
      }
      case detail::EventKind::Commit: {
        t.status = TxStatus::Committed;
        m.gamma[t.id] = t.rho + t.stall;
        ++m.commits;
        ++m.attempts_histogram[t.attempts];
        m.makespan = std::max(m.makespan, ev.wall);
        if (ev.tx + 1 < s.threads[h].size()) begin_tx(ev.thread, ev.tx + 1, ev.wall);
        break;
      }
    }
  }
  m.transactions = m.gamma.size();
  double sum_tx_gamma = 0.0;
  for (double g : m.gamma) sum_tx_gamma += g;
  for (const auto& txs : s.threads)
    for (const TxPlan& p : txs) m.sum_rho += p.rho;
  m.sum_gamma = sum_tx_gamma + m.waiter_delay;
  m.sum_alpha = m.sum_gamma - m.sum_rho;
  m.waste = m.sum_rho > 0.0 ? m.sum_alpha / m.sum_rho : 0.0;
  m.records = std::move(pending);
  return m;
}

inline SimMetrics run(const SimConfig& c) {
  return run_schedule(c, build_schedule(c), c.policy_kind);
}

inline SimMetrics run_offline_baseline(const SimConfig& c) {
  return run_schedule(c, build_schedule(c), PolicyKind::Offline);
}

// ---------------------------------------------------------------------------
// Throughput bound

inline double throughput_bound(double w) { return (2.0 * w + 1.0) / (w + 1.0); }

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double waste = 0.0;
  double margin = 0.0;
  bool pass = false;
};

inline bool same_schedule(const SimMetrics& a, const SimMetrics& b) {
  if (a.records.size() != b.records.size() || a.sum_rho != b.sum_rho) return false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const ConflictRecord& p = a.records[i];
    const ConflictRecord& q = b.records[i];
    if (p.id != q.id || p.time != q.time || p.k != q.k || p.y != q.y || p.B != q.B) return false;
  }
  return true;
}

// Single-schedule check; `margin` absorbs Monte-Carlo noise of the online
// policy's draws.
inline BoundCheck throughput_bound_check(const SimMetrics& online, const SimMetrics& offline,
                                         double margin = 0.0) {
  if (!same_schedule(online, offline))
    throw std::invalid_argument("online and offline metrics come from different schedules");
  BoundCheck b;
  b.lhs = offline.sum_gamma > 0.0 ? online.sum_gamma / offline.sum_gamma : 1.0;
  b.waste = offline.waste;
  b.rhs = throughput_bound(b.waste);
  b.margin = margin;
  b.pass = b.lhs <= b.rhs + margin && b.lhs < 2.0;
  return b;
}

struct CampaignResult {
  std::size_t seeds = 0;
  double mean_lhs = 0.0;
  double stderr_lhs = 0.0;
  double max_lhs = 0.0;
  double waste = 0.0;  // pooled over seeds
  double rhs = 0.0;
  double mean_conflicts = 0.0;
  double mean_aborts = 0.0;
  bool pass = false;
};

// Online against offline over seeds first_seed .. first_seed + n - 1.
inline CampaignResult run_campaign(SimConfig c, std::uint64_t first_seed, std::size_t n) {
  CampaignResult r;
  r.seeds = n;
  double sum = 0.0, sum_sq = 0.0, alpha = 0.0, rho = 0.0, conflicts = 0.0, aborts = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c.seed = first_seed + i;
    const Schedule s = build_schedule(c);
    const SimMetrics on = run_schedule(c, s, PolicyKind::Online);
    const SimMetrics off = run_schedule(c, s, PolicyKind::Offline);
    const double lhs = off.sum_gamma > 0.0 ? on.sum_gamma / off.sum_gamma : 1.0;
    sum += lhs;
    sum_sq += lhs * lhs;
    r.max_lhs = std::max(r.max_lhs, lhs);
    alpha += off.sum_alpha;
    rho += off.sum_rho;
    conflicts += static_cast<double>(on.conflicts);
    aborts += static_cast<double>(on.aborts);
  }
  const double dn = static_cast<double>(n);
  r.mean_lhs = sum / dn;
  r.stderr_lhs = n > 1 ? std::sqrt(std::max(0.0, (sum_sq - sum * sum / dn) / (dn - 1.0)) / dn) : 0.0;
  r.waste = rho > 0.0 ? alpha / rho : 0.0;
  r.rhs = throughput_bound(r.waste);
  r.mean_conflicts = conflicts / dn;
  r.mean_aborts = aborts / dn;
  r.pass = r.mean_lhs <= r.rhs + 3.0 * r.stderr_lhs && r.mean_lhs < 2.0;
  return r;
}

// ---------------------------------------------------------------------------
// Progress under doubling backoff

struct ProgressConfig {
  double y = 64.0;  // running time of the tracked transaction
  int gamma = 4;    // conflicts per attempt
  int k = 2;
  double B = 1.0;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  int max_attempts = 200;
};

struct ProgressReport {
  int attempt_bound = 1;
  int doublings = 0;
  double abort_cost_after_doublings = 0.0;
  bool doubling_assertion = false;  // B' >= 2 k y gamma in every trial
  std::size_t trials = 0;
  std::size_t within_bound = 0;
  double probability = 0.0;
  double stderr_probability = 0.0;
  double mean_attempts = 0.0;
  bool pass = false;
};

inline int ceil_log_bound(double y, int gamma, int k, double B, double extra) {
  if (gamma <= 0) return 1;
  const double v = std::log2(y) + std::log2(static_cast<double>(gamma)) + std::log2(static_cast<double>(k)) -
                   std::log2(B) + extra;
  return std::max(1, static_cast<int>(std::ceil(v - 1e-12)));
}

// Each attempt of the tracked transaction meets `gamma` conflicts, each at
// the start of the attempt (remaining time y, the adversary's best choice).
// Policy: requestor-wins flat density on [0, B'/(k-1)], abort iff x <= y;
// B' doubles after every abort.
inline ProgressReport progress_check(const ProgressConfig& pc) {
  check_chain(pc.k, pc.B);
  if (!(pc.y > 0.0)) throw std::domain_error("running time y must be positive");
  ProgressReport rep;
  rep.attempt_bound = ceil_log_bound(pc.y, pc.gamma, pc.k, pc.B, 2.0);
  rep.doublings = pc.gamma > 0 ? ceil_log_bound(pc.y, pc.gamma, pc.k, pc.B, 1.0) : 0;
  rep.trials = pc.trials;
  rep.doubling_assertion = true;
  const RngStream root(pc.seed, label_id("progress"));
  double attempts_sum = 0.0;
  for (std::size_t trial = 0; trial < pc.trials; ++trial) {
    RngStream rng = root.substream(trial);
    double Bt = pc.B;
    int attempts = 1;
    for (;; ++attempts) {
      bool aborted = false;
      const double S = Bt / (pc.k - 1);
      for (int j = 0; j < pc.gamma && !aborted; ++j) aborted = rng.uniform() * S <= pc.y;
      if (!aborted || attempts >= pc.max_attempts) break;
      Bt *= 2.0;
    }
    // Abort cost after the prescribed number of doublings, reached or not.
    const double reached = pc.B * std::ldexp(1.0, rep.doublings);
    if (pc.gamma > 0 && !(reached >= 2.0 * pc.k * pc.y * pc.gamma)) rep.doubling_assertion = false;
    if (attempts <= rep.attempt_bound) ++rep.within_bound;
    attempts_sum += attempts;
  }
  rep.abort_cost_after_doublings = pc.B * std::ldexp(1.0, rep.doublings);
  const double n = static_cast<double>(pc.trials);
  rep.probability = static_cast<double>(rep.within_bound) / n;
  rep.stderr_probability = std::sqrt(rep.probability * (1.0 - rep.probability) / n);
  rep.mean_attempts = attempts_sum / n;
  rep.pass = rep.doubling_assertion && rep.probability >= 0.5 - 3.0 * rep.stderr_probability;
  return rep;
}

}  // namespace graceful::sim
