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


// Command-line front end: synthetic benchmark, simulator runs and campaigns,
// the verification suite, and strategy tables.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graceful/graceful.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace graceful;

constexpr int kSchemaVersion = 1;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Config files

std::string g_config_dir;

// Looks in the working directory, then next to the config file, then in
// every directory of GRACEFUL_CONFIG_PATH.
std::string resolve_path(const std::string& path, const char* what) {
  if (std::ifstream(path).good()) return path;
  const bool relative = !path.empty() && path.front() != '/';
  std::vector<std::string> dirs;
  if (relative && !g_config_dir.empty()) dirs.push_back(g_config_dir);
  if (const char* env = std::getenv("GRACEFUL_CONFIG_PATH"); env && relative) {
    std::stringstream in(env);
    std::string dir;
    while (std::getline(in, dir, ':'))
      if (!dir.empty()) dirs.push_back(dir);
  }
  for (const std::string& dir : dirs) {
    const std::string candidate = dir + "/" + path;
    if (std::ifstream(candidate).good()) return candidate;
  }
  throw ConfigError(std::string(what) + " '" + path + "' not found (searched cwd and GRACEFUL_CONFIG_PATH)");
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  const std::string real = resolve_path(path, "config file");
  if (const auto slash = real.rfind('/'); slash != std::string::npos) g_config_dir = real.substr(0, slash);
  std::ifstream in(real);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw ConfigError(real + ": top level must be a JSON object");
    if (j.contains("schema_version") && j["schema_version"] != kSchemaVersion)
      throw ConfigError(real + ": unsupported schema_version " + j["schema_version"].dump());
    return j;
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ConfigError(real + ":" + std::to_string(line) + ": JSON parse error: " + e.what());
  }
}

const json& section(const json& root, const char* name) {
  static const json empty = json::object();
  if (!root.contains(name)) return empty;
  const json& s = root.at(name);
  if (!s.is_object()) throw ConfigError(std::string("config field '") + name + "': expected an object");
  return s;
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ConfigError("config field '" + path + "." + it.key() + "': unknown key");
  }
}

template <typename T>
T field(const json& obj, const char* key, const std::string& path, T fallback) {
  if (!obj.contains(key) || obj.at(key).is_null()) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config field '" + path + "." + key + "': wrong type (" + obj.at(key).dump() + ")");
  }
}

template <typename Fn>
auto guarded(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("config field '" + where + "': " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Flags shared by the subcommands; set values win over the config file.
struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<double> B;
  std::optional<double> mu;
  std::optional<int> k;
  std::optional<std::string> mode;
  std::optional<std::string> strategy;
  std::optional<std::string> dist;
  std::string out;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON config file (also searched in GRACEFUL_CONFIG_PATH)");
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--trials", o.trials, "trials per cell");
  cmd->add_option("--B", o.B, "abort cost B");
  cmd->add_option("--mu", o.mu, "known mean of the remaining-time distribution");
  cmd->add_option("--k", o.k, "chain size k");
  cmd->add_option("--mode", o.mode, "RW or RA");
  cmd->add_option("--strategy", o.strategy, "strategy name(s)");
  cmd->add_option("--dist", o.dist, "distribution name(s), comma separated");
  cmd->add_option("--out", o.out, "output file (default: stdout)");
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

// Known strategy names map onto (mode, variant); anything else is a variant
// name combined with --mode.
StrategySpec spec_from_name(const std::string& name, StrategySpec base) {
  static const std::vector<std::string> known{"DET", "RRW", "RRW(mu)", "RRA", "RRA(mu)", "DRA"};
  for (const std::string& n : known) {
    if (n != name) continue;
    if (name.find("(mu)") != std::string::npos && !base.mu)
      throw std::invalid_argument(name + " needs mu");
    const StrategySpec s = bench::named_strategy(name, base.k, base.B, base.mu.value_or(0.0));
    base.mode = s.mode;
    base.variant = s.variant;
    return base;
  }
  base.variant = parse_variant(name);
  return base;
}

StrategySpec read_strategy(const json& j, const std::string& path, const Overrides& o) {
  check_keys(j, path, {"mode", "variant", "strategy", "k", "B", "mu", "chain_form", "threshold_rule"});
  StrategySpec s;
  s.mode = guarded(path + ".mode", [&] { return parse_mode(field<std::string>(j, "mode", path, "RW")); });
  s.k = field<int>(j, "k", path, 2);
  s.B = field<double>(j, "B", path, 100.0);
  if (j.contains("mu") && !j.at("mu").is_null()) s.mu = field<double>(j, "mu", path, 0.0);
  s.chain_form = guarded(path + ".chain_form", [&] {
    return parse_chain_form(field<std::string>(j, "chain_form", path, "Uniform"));
  });
  s.threshold_rule = guarded(path + ".threshold_rule", [&] {
    return parse_threshold_rule(field<std::string>(j, "threshold_rule", path, "Crossover"));
  });
  if (o.mode) s.mode = parse_mode(*o.mode);
  if (o.k) s.k = *o.k;
  if (o.B) s.B = *o.B;
  if (o.mu) s.mu = *o.mu;
  std::string name = field<std::string>(j, "variant", path, "RandomizedUnconstrained");
  name = field<std::string>(j, "strategy", path, name);
  if (o.strategy) name = *o.strategy;
  s = guarded(path + ".strategy", [&] { return spec_from_name(name, s); });
  guarded(path, [&] {
    validate(s);
    return 0;
  });
  return s;
}

json spec_json(const StrategySpec& s) {
  json j;
  j["mode"] = to_string(s.mode);
  j["variant"] = to_string(s.variant);
  j["k"] = s.k;
  j["B"] = s.B;
  j["mu"] = s.mu ? json(*s.mu) : json(nullptr);
  j["chain_form"] = to_string(s.chain_form);
  j["threshold_rule"] = to_string(s.threshold_rule);
  return j;
}

// ---------------------------------------------------------------------------
// bench-synthetic

int cmd_bench(const Overrides& o) {
  const json root = load_config(o.config);
  const json& j = section(root, "bench");
  check_keys(j, "bench", {"B", "mu", "k", "trials", "seed", "distributions", "strategies"});
  bench::BenchConfig c;
  c.B = field<double>(j, "B", "bench", c.B);
  c.mu = field<double>(j, "mu", "bench", c.mu);
  c.k = field<int>(j, "k", "bench", c.k);
  c.trials = field<std::size_t>(j, "trials", "bench", c.trials);
  c.seed = field<std::uint64_t>(j, "seed", "bench", c.seed);
  c.distributions = field<std::vector<std::string>>(j, "distributions", "bench", c.distributions);
  c.strategies = field<std::vector<std::string>>(j, "strategies", "bench", c.strategies);
  if (o.B) c.B = *o.B;
  if (o.mu) c.mu = *o.mu;
  if (o.k) c.k = *o.k;
  if (o.trials) c.trials = *o.trials;
  if (o.seed) c.seed = *o.seed;
  if (o.dist) c.distributions = split_list(*o.dist);
  if (o.strategy) c.strategies = split_list(*o.strategy);
  for (const std::string& d : c.distributions) guarded("bench.distributions", [&] { return parse_dist(d); });
  for (const std::string& s : c.strategies)
    guarded("bench.strategies", [&] { return bench::named_strategy(s, c.k, c.B, c.mu); });

  const auto rows = bench::run_bench(c);
  std::ostringstream out;
  bench::write_csv(out, rows);
  emit(o.out, out.str());
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateSetup {
  sim::SimConfig config;
  std::vector<double> rates;
  std::size_t seeds = 0;
};

SimulateSetup read_simulate(const json& root, const Overrides& o, const std::string& trace_override) {
  const json& j = section(root, "simulate");
  check_keys(j, "simulate",
             {"n_threads", "mode", "policy", "length_model", "schedule", "chain", "cleanup_cost", "dynamic_B",
              "backoff", "horizon", "seed", "campaign"});
  SimulateSetup out;
  sim::SimConfig& c = out.config;
  c.n_threads = field<int>(j, "n_threads", "simulate", c.n_threads);
  c.mode = guarded("simulate.mode", [&] { return parse_mode(field<std::string>(j, "mode", "simulate", "RW")); });
  if (o.mode) c.mode = parse_mode(*o.mode);

  json policy = j.contains("policy") ? j.at("policy") : json::object();
  if (!policy.is_object()) throw ConfigError("config field 'simulate.policy': expected an object");
  const std::string pname = o.strategy.value_or(field<std::string>(policy, "strategy", "simulate.policy",
                                                                   field<std::string>(policy, "variant",
                                                                                      "simulate.policy", "")));
  c.policy_kind = sim::PolicyKind::Online;
  if (detail::lower(pname) == "offline") {
    c.policy_kind = sim::PolicyKind::Offline;
    policy.erase("strategy");
    policy.erase("variant");
  }
  policy["mode"] = to_string(c.mode);
  Overrides po = o;
  po.mode.reset();
  if (c.policy_kind == sim::PolicyKind::Offline) po.strategy.reset();
  c.policy = read_strategy(policy, "simulate.policy", po);
  c.mode = c.policy.mode;

  const json lm = j.contains("length_model") ? j.at("length_model") : json::object();
  check_keys(lm, "simulate.length_model", {"kind", "mean"});
  c.length_model = guarded("simulate.length_model", [&] {
    return make_adversary(parse_dist(field<std::string>(lm, "kind", "simulate.length_model", "Exponential")),
                          field<double>(lm, "mean", "simulate.length_model", 50.0));
  });

  const json sch = j.contains("schedule") ? j.at("schedule") : json::object();
  check_keys(sch, "simulate.schedule", {"kind", "rate", "rates", "path"});
  const std::string kind = field<std::string>(sch, "kind", "simulate.schedule", "RandomRate");
  std::string trace_path = field<std::string>(sch, "path", "simulate.schedule", "");
  if (!trace_override.empty()) trace_path = trace_override;
  if (detail::lower(kind) == "trace" || !trace_override.empty()) {
    c.schedule = sim::ScheduleKind::Trace;
    if (trace_path.empty()) throw ConfigError("config field 'simulate.schedule.path': required for Trace");
    c.trace = guarded("simulate.schedule.path", [&] { return sim::load_trace(resolve_path(trace_path, "trace file")); });
  } else if (detail::lower(kind) == "randomrate") {
    c.schedule = sim::ScheduleKind::RandomRate;
    c.conflict_rate = field<double>(sch, "rate", "simulate.schedule", 0.0);
    out.rates = field<std::vector<double>>(sch, "rates", "simulate.schedule", {});
  } else {
    throw ConfigError("config field 'simulate.schedule.kind': expected RandomRate or Trace");
  }

  const json ch = j.contains("chain") ? j.at("chain") : json::object();
  check_keys(ch, "simulate.chain", {"k_min", "k_max"});
  c.k_min = field<int>(ch, "k_min", "simulate.chain", c.policy.k);
  c.k_max = field<int>(ch, "k_max", "simulate.chain", c.k_min);
  if (o.k) c.k_min = c.k_max = *o.k;
  c.cleanup_cost = field<double>(j, "cleanup_cost", "simulate", c.cleanup_cost);
  c.dynamic_B = field<bool>(j, "dynamic_B", "simulate", c.dynamic_B);
  const std::string backoff = field<std::string>(j, "backoff", "simulate", "None");
  if (detail::lower(backoff) == "none") {
    c.backoff = sim::Backoff::None;
  } else if (detail::lower(backoff) == "multiplicativedoubling" || detail::lower(backoff) == "doubling") {
    c.backoff = sim::Backoff::MultiplicativeDoubling;
  } else {
    throw ConfigError("config field 'simulate.backoff': expected None or MultiplicativeDoubling");
  }
  c.horizon = field<double>(j, "horizon", "simulate", c.horizon);
  c.seed = field<std::uint64_t>(j, "seed", "simulate", c.seed);
  if (o.seed) c.seed = *o.seed;

  const json camp = j.contains("campaign") ? j.at("campaign") : json::object();
  check_keys(camp, "simulate.campaign", {"seeds"});
  out.seeds = field<std::size_t>(camp, "seeds", "simulate.campaign", 0);
  if (o.trials) out.seeds = *o.trials;
  guarded("simulate", [&] {
    sim::validate(c);
    return 0;
  });
  return out;
}

json metrics_json(const sim::SimMetrics& m, bool detail) {
  json j;
  j["sum_gamma"] = m.sum_gamma;
  j["sum_rho"] = m.sum_rho;
  j["sum_alpha"] = m.sum_alpha;
  j["waste"] = m.waste;
  j["waiter_delay"] = m.waiter_delay;
  j["sum_conflict_cost"] = m.sum_conflict_cost;
  j["makespan"] = m.makespan;
  j["transactions"] = m.transactions;
  j["commits"] = m.commits;
  j["aborts"] = m.aborts;
  j["conflicts"] = m.conflicts;
  j["suppressed_conflicts"] = m.suppressed;
  json hist = json::object();
  for (const auto& [a, n] : m.attempts_histogram) hist[std::to_string(a)] = n;
  j["attempts_histogram"] = hist;
  if (detail) {
    j["gamma"] = m.gamma;
    json recs = json::array();
    for (const auto& r : m.records)
      recs.push_back({{"thread", r.thread}, {"time", r.time}, {"wall", r.wall}, {"k", r.k}, {"y", r.y},
                      {"B", r.B}, {"x", r.x}, {"committed", r.committed}, {"cost", r.cost}, {"opt", r.opt}});
    j["conflict_records"] = recs;
  }
  return j;
}

json sim_config_json(const sim::SimConfig& c) {
  json j;
  j["n_threads"] = c.n_threads;
  j["mode"] = to_string(c.mode);
  j["policy"] = c.policy_kind == sim::PolicyKind::Offline ? json("Offline") : spec_json(c.policy);
  j["length_model"] = {{"kind", to_string(c.length_model.kind)}, {"mean", c.length_model.mean}};
  if (c.schedule == sim::ScheduleKind::Trace) {
    j["schedule"] = {{"kind", "Trace"}, {"events", c.trace.size()}};
  } else {
    j["schedule"] = {{"kind", "RandomRate"}, {"rate", c.conflict_rate}};
  }
  j["chain"] = {{"k_min", c.k_min}, {"k_max", c.k_max}};
  j["cleanup_cost"] = c.cleanup_cost;
  j["dynamic_B"] = c.dynamic_B;
  j["backoff"] = c.backoff == sim::Backoff::None ? "None" : "MultiplicativeDoubling";
  j["horizon"] = c.horizon;
  j["seed"] = c.seed;
  return j;
}

int cmd_simulate(const Overrides& o, const std::string& trace, bool detail, std::optional<std::size_t> seeds) {
  const json root = load_config(o.config);
  SimulateSetup setup = read_simulate(root, o, trace);
  if (seeds) setup.seeds = *seeds;
  sim::SimConfig& c = setup.config;
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "simulate";

  if (setup.seeds > 0) {
    if (c.policy_kind == sim::PolicyKind::Offline)
      throw ConfigError("config field 'simulate.policy': a campaign needs an online policy");
    std::vector<double> rates = setup.rates;
    if (rates.empty() || c.schedule == sim::ScheduleKind::Trace) rates = {c.conflict_rate};
    out["config"] = sim_config_json(c);
    json list = json::array();
    bool all = true;
    for (double rate : rates) {
      c.conflict_rate = rate;
      const sim::CampaignResult r = sim::run_campaign(c, c.seed, setup.seeds);
      all = all && r.pass;
      list.push_back({{"rate", rate},
                      {"seeds", r.seeds},
                      {"mean_lhs", r.mean_lhs},
                      {"stderr_lhs", r.stderr_lhs},
                      {"max_lhs", r.max_lhs},
                      {"waste", r.waste},
                      {"rhs", r.rhs},
                      {"mean_conflicts", r.mean_conflicts},
                      {"mean_aborts", r.mean_aborts},
                      {"pass", r.pass}});
    }
    out["campaigns"] = list;
    out["pass"] = all;
  } else {
    const sim::Schedule s = sim::build_schedule(c);
    const sim::SimMetrics off = sim::run_schedule(c, s, sim::PolicyKind::Offline);
    const sim::SimMetrics on = sim::run_schedule(c, s, c.policy_kind);
    const sim::BoundCheck b = sim::throughput_bound_check(on, off);
    out["config"] = sim_config_json(c);
    json jon = metrics_json(on, detail);
    jon["global_ratio"] = b.lhs;
    out["online"] = jon;
    out["offline"] = metrics_json(off, detail);
    out["bound_check"] = {{"lhs", b.lhs}, {"rhs", b.rhs}, {"waste", b.waste}, {"pass", b.pass}};
  }
  emit(o.out, out.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const Overrides& o, bool inject_printed, int perturbations) {
  oracle::VerificationReport rep = oracle::run_verification_suite(o.seed.value_or(1), perturbations);
  if (inject_printed) {
    const StrategySpec s{ConflictMode::RequestorWins, 2, 100.0, 10.0, Variant::RandomizedConstrained};
    const oracle::PdfReport r = oracle::verify_pdf(make_printed_strategy(s));
    rep.checks.push_back({"normalization", "injected: " + oracle::describe(s) + " [PrintedRwLog]", r.integral,
                          1.0, r.normalization_error, 1e-6, r.pass});
  }
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "verify";
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"category", c.category},
                      {"name", c.name},
                      {"value", c.value},
                      {"expected", c.expected},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  out["checks"] = checks;
  out["total"] = rep.checks.size();
  out["failures"] = rep.failures();
  out["pass"] = rep.all_pass();
  emit(o.out, out.dump(2) + "\n");
  return rep.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// strategy-table

int cmd_table(const Overrides& o, int points, const std::string& variant, const std::string& chain_form,
              const std::string& rule) {
  const json root = load_config(o.config);
  json j = section(root, "strategy");
  if (!variant.empty()) j["variant"] = variant;
  if (!chain_form.empty()) j["chain_form"] = chain_form;
  if (!rule.empty()) j["threshold_rule"] = rule;
  const StrategySpec spec = read_strategy(j, "strategy", o);
  const GracePeriodStrategy g = make_strategy(spec);
  std::ostringstream out;
  out << "x,pdf,cdf\r\n";
  switch (g.kind()) {
    case StrategyKind::Atom:
      out << bench::fmt(g.atom()) << ",atom,1\r\n";
      break;
    case StrategyKind::DiscretePmf:
      for (int d = 1; d <= g.days(); ++d)
        out << d << ',' << bench::fmt(g.pmf(d)) << ',' << bench::fmt(g.cdf(d)) << "\r\n";
      break;
    case StrategyKind::ContinuousPdf: {
      if (points < 1) throw ConfigError("--points must be >= 1");
      const double S = g.support_max();
      for (int i = 0; i < points; ++i) {
        const double x = points == 1 ? 0.0 : (i + 1 == points ? S : S * i / (points - 1));
        out << bench::fmt(x) << ',' << bench::fmt(g.pdf(x)) << ',' << bench::fmt(g.cdf(x)) << "\r\n";
      }
      break;
    }
  }
  emit(o.out, out.str());
  return 0;
}

// ---------------------------------------------------------------------------
// progress

int cmd_progress(const Overrides& o, double y, int gamma) {
  sim::ProgressConfig pc;
  pc.y = y;
  pc.gamma = gamma;
  pc.k = o.k.value_or(pc.k);
  pc.B = o.B.value_or(pc.B);
  pc.trials = o.trials.value_or(pc.trials);
  pc.seed = o.seed.value_or(pc.seed);
  const sim::ProgressReport r = sim::progress_check(pc);
  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "progress";
  out["y"] = pc.y;
  out["gamma"] = pc.gamma;
  out["k"] = pc.k;
  out["B"] = pc.B;
  out["seed"] = pc.seed;
  out["attempt_bound"] = r.attempt_bound;
  out["doublings"] = r.doublings;
  out["abort_cost_after_doublings"] = r.abort_cost_after_doublings;
  out["doubling_assertion"] = r.doubling_assertion;
  out["trials"] = r.trials;
  out["within_bound"] = r.within_bound;
  out["probability"] = r.probability;
  out["stderr"] = r.stderr_probability;
  out["mean_attempts"] = r.mean_attempts;
  out["pass"] = r.pass;
  emit(o.out, out.dump(2) + "\n");
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grace-period strategies for transactional conflicts"};
  app.require_subcommand(1);

  Overrides bench_o, sim_o, verify_o, table_o, prog_o;

  auto* bench_cmd = app.add_subcommand("bench-synthetic", "single-conflict benchmark, CSV output");
  add_common(bench_cmd, bench_o);

  auto* sim_cmd = app.add_subcommand("simulate", "multi-thread simulation against the offline baseline");
  add_common(sim_cmd, sim_o);
  std::string trace;
  bool detail = false;
  std::optional<std::size_t> seeds;
  sim_cmd->add_option("--trace", trace, "trace file of 'time receiver_thread k' lines");
  sim_cmd->add_flag("--detail", detail, "include per-transaction and per-conflict records");
  sim_cmd->add_option("--seeds", seeds, "run a campaign over this many consecutive seeds");

  auto* verify_cmd = app.add_subcommand("verify", "numerical verification suite, JSON report");
  add_common(verify_cmd, verify_o);
  bool inject = false;
  int perturbations = 200;
  verify_cmd->add_flag("--inject-printed", inject, "add the commonly quoted RW density as a normal check");
  verify_cmd->add_option("--perturbations", perturbations, "optimality probe perturbations");

  auto* table_cmd = app.add_subcommand("strategy-table", "CSV of x, pdf, cdf over the support");
  add_common(table_cmd, table_o);
  int points = 101;
  std::string variant, chain_form, rule;
  table_cmd->add_option("--points", points, "evenly spaced points on [0, support_max]");
  table_cmd->add_option("--variant", variant, "Deterministic, RandomizedUnconstrained, ...");
  table_cmd->add_option("--chain-form", chain_form, "Uniform or PowerKernel");
  table_cmd->add_option("--threshold-rule", rule, "Crossover, AsPrinted or AsPrintedRaw");

  auto* prog_cmd = app.add_subcommand("progress", "commit probability under doubling backoff");
  add_common(prog_cmd, prog_o);
  double y = 64.0;
  int gamma = 4;
  prog_cmd->add_option("--y", y, "running time of the tracked transaction");
  prog_cmd->add_option("--gamma", gamma, "conflicts per attempt");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bench_cmd) return cmd_bench(bench_o);
    if (*sim_cmd) return cmd_simulate(sim_o, trace, detail, seeds);
    if (*verify_cmd) return cmd_verify(verify_o, inject, perturbations);
    if (*table_cmd) return cmd_table(table_o, points, variant, chain_form, rule);
    if (*prog_cmd) return cmd_progress(prog_o, y, gamma);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
