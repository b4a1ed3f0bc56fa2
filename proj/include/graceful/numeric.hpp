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
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>

namespace graceful::numeric {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-9;
  int max_depth = 48;
};

struct QuadratureResult {
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

namespace detail {

template <typename F>
double finite_at(F& f, double x, double toward, std::size_t& evals) {
  ++evals;
  double v = f(x);
  if (std::isfinite(v)) return v;
  // Integrable endpoint singularity: step inward until finite.
  double h = (toward - x) * 1e-15;
  for (int i = 0; i < 8 && !std::isfinite(v); ++i, h *= 1e3) {
    ++evals;
    v = f(x + h);
  }
  return v;
}

template <typename F>
double simpson_step(F& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth, std::size_t& evals,
                    bool& converged) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  evals += 2;
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) {
    converged = false;
    return left + right + delta / 15.0;
  }
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, evals,
                      converged) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, evals,
                      converged);
}

}  // namespace detail

// Adaptive Simpson quadrature of f over [a, b].
//
// The interval is first split into `panels` equal pieces so that narrow
// features are not missed by the initial five-point estimate. Subdivision stops
// once |delta I| <= max(abs_tol, rel_tol * |I|) where I is a coarse estimate of
// the full integral.
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureOptions& opt = {},
                           int panels = 8) {
  QuadratureResult out;
  if (!(b > a)) return out;
  panels = std::max(panels, 1);
  const double width = (b - a) / panels;

  double coarse = 0.0;
  struct Panel {
    double a, b, fa, fb, fm, whole;
  };
  // Two passes: the first fixes the global tolerance, the second refines.
  std::size_t evals = 0;
  double f_left = detail::finite_at(f, a, b, evals);
  Panel stack[64];
  int count = 0;
  for (int i = 0; i < panels; ++i) {
    const double pa = a + i * width;
    const double pb = (i + 1 == panels) ? b : pa + width;
    const double pm = 0.5 * (pa + pb);
    const double fm = f(pm);
    const double fb = (i + 1 == panels) ? detail::finite_at(f, pb, pa, evals) : f(pb);
    evals += 2;
    const double whole = (pb - pa) / 6.0 * (f_left + 4.0 * fm + fb);
    coarse += whole;
    if (count < 64) stack[count++] = Panel{pa, pb, f_left, fb, fm, whole};
    f_left = fb;
  }
  const double tol = std::max(opt.abs_tol, opt.rel_tol * std::fabs(coarse));
  double total = 0.0;
  for (int i = 0; i < count; ++i) {
    const Panel& p = stack[i];
    total += detail::simpson_step(f, p.a, p.fa, p.b, p.fb, 0.5 * (p.a + p.b), p.fm,
                                  p.whole, tol / count, opt.max_depth, evals,
                                  out.converged);
  }
  out.value = total;
  out.evaluations = evals;
  return out;
}

template <typename F>
double integral(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
  return integrate(std::forward<F>(f), a, b, opt).value;
}

// Smallest x in [lo, hi] with f(x) >= target for a nondecreasing f, to
// absolute tolerance tol.
template <typename F>
double bisect_increasing(F&& f, double target, double lo, double hi, double tol) {
  if (!(hi >= lo)) throw std::invalid_argument("bisect_increasing: empty bracket");
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Extremum {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section search for a maximum of a unimodal f on [lo, hi].
template <typename F>
Extremum golden_max(F&& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? Extremum{c, fc} : Extremum{d, fd};
}

}  // namespace graceful::numeric
