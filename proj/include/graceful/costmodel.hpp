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
#include <cmath>
#include <stdexcept>
#include <vector>

#include "graceful/numeric.hpp"
#include "graceful/strategy.hpp"

namespace graceful {

struct ConflictInstance {
  ConflictMode mode = ConflictMode::RequestorWins;
  int k = 2;
  double B = 1.0;
  double y = 0.0;  // remaining time of the receiver, hidden from the strategy
};

struct CostBreakdown {
  double total = 0.0;
  bool committed = false;
  double delay_component = 0.0;
  double abort_component = 0.0;
};

inline void validate(const ConflictInstance& c) {
  check_chain(c.k, c.B);
  if (!(c.y > 0.0) || !std::isfinite(c.y)) throw std::domain_error("remaining time y must be positive");
}

// Cost of one conflict when the receiver is granted grace period x.
//   requestor-wins:  commit (k-1)y,  abort kx + B
//   requestor-aborts: commit (k-1)y,  abort (k-1)(x + B)
inline CostBreakdown pointwise_cost(const ConflictInstance& c, double x, TieRule tie = TieRule::Abort) {
  if (!(x >= 0.0)) throw std::domain_error("grace period must be nonnegative");
  CostBreakdown out;
  out.committed = c.y < x || (c.y == x && tie == TieRule::Commit);
  if (out.committed) {
    out.delay_component = (c.k - 1) * c.y;
  } else if (c.mode == ConflictMode::RequestorWins) {
    out.delay_component = c.k * x;
    out.abort_component = c.B;
  } else {
    out.delay_component = (c.k - 1) * x;
    out.abort_component = (c.k - 1) * c.B;
  }
  out.total = out.delay_component + out.abort_component;
  return out;
}

inline double opt_cost(const ConflictInstance& c) { return std::min((c.k - 1) * c.y, c.B); }

// Cost paid on abort at grace x.
inline double abort_cost(ConflictMode mode, int k, double B, double x) {
  return mode == ConflictMode::RequestorWins ? k * x + B : (k - 1) * (x + B);
}

namespace detail {
inline void check_match(const GracePeriodStrategy& g, const ConflictInstance& c) {
  const StrategySpec& s = g.spec();
  if (s.mode != c.mode || s.k != c.k || s.B != c.B)
    throw std::invalid_argument("strategy (mode, k, B) does not match the conflict instance");
}
}  // namespace detail

inline double expected_cost(const GracePeriodStrategy& g, const ConflictInstance& c,
                            const numeric::QuadratureOptions& opt = {}) {
  validate(c);
  detail::check_match(g, c);
  switch (g.kind()) {
    case StrategyKind::Atom:
      return pointwise_cost(c, g.atom()).total;
    case StrategyKind::DiscretePmf: {
      double sum = 0.0;
      for (int i = 1; i <= g.days(); ++i)
        sum += g.pmf(i) * pointwise_cost(c, i - 1.0, TieRule::Commit).total;
      return sum;
    }
    case StrategyKind::ContinuousPdf:
      break;
  }
  const double z = std::min(c.y, g.support_max());
  const double aborted = numeric::integral(
      [&](double x) { return abort_cost(c.mode, c.k, c.B, x) * g.pdf(x); }, 0.0, z, opt);
  const double survive = std::max(0.0, 1.0 - g.cdf(z));
  return aborted + (c.k - 1) * c.y * (c.y >= g.support_max() ? 0.0 : survive);
}

struct RatioPoint {
  double y = 0.0;
  double cost = 0.0;
  double opt = 0.0;
  double ratio = 0.0;
};

inline RatioPoint ratio_at(const GracePeriodStrategy& g, double y) {
  const StrategySpec& s = g.spec();
  const ConflictInstance c{s.mode, s.k, s.B, y};
  RatioPoint p;
  p.y = y;
  p.cost = expected_cost(g, c);
  p.opt = opt_cost(c);
  p.ratio = p.cost / p.opt;
  return p;
}

// Expected cost over optimum at each adversarial remaining time. Beyond the
// support the strategy always aborts and the optimum is B.
inline std::vector<RatioPoint> ratio_profile(const GracePeriodStrategy& g,
                                             const std::vector<double>& y_grid) {
  std::vector<RatioPoint> out;
  out.reserve(y_grid.size());
  for (double y : y_grid) out.push_back(ratio_at(g, y));
  return out;
}

inline std::vector<RatioPoint> ratio_profile(const GracePeriodStrategy& g, int k, double B,
                                             const std::vector<double>& y_grid) {
  if (g.spec().k != k || g.spec().B != B)
    throw std::invalid_argument("ratio_profile: (k, B) does not match the strategy");
  return ratio_profile(g, y_grid);
}

}  // namespace graceful
