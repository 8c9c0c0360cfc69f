// Copyright 2026 The latentlink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latentlink/optimize.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <numeric>

#include "latentlink/error.hpp"

namespace latentlink {

ScalarOptimum line_maximize(const std::function<double(double)>& f, double lo, double hi) {
  if (!(lo <= hi)) throw Error(ErrorCode::kOutOfRange, "line search bracket is inverted");
  if (hi - lo < 1e-15) return {lo, f(lo)};
  // 40 bits is well past the 1e-7 improvement threshold used by callers.
  const auto [x, neg] =
      boost::math::tools::brent_find_minima([&](double t) { return -f(t); }, lo, hi, 40);
  return {x, -neg};
}

OptimumPoint coordinate_refine(const Objective& f, std::vector<double> start,
                               const CoordinateRefineOptions& options) {
  const std::size_t n = start.size();
  if (options.bracket.size() != n || options.lower.size() != n || options.upper.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "refinement options do not match the start point");
  }
  OptimumPoint best{std::move(start), 0.0};
  best.value = f(best.x);
  for (std::size_t pass = 0; pass < options.max_passes; ++pass) {
    const double before = best.value;
    for (std::size_t i = 0; i < n; ++i) {
      const double lo = std::max(options.lower[i], best.x[i] - options.bracket[i]);
      const double hi = std::min(options.upper[i], best.x[i] + options.bracket[i]);
      std::vector<double> trial = best.x;
      const ScalarOptimum line = line_maximize(
          [&](double t) {
            trial[i] = t;
            return f(trial);
          },
          lo, hi);
      if (line.value > best.value) {
        best.x[i] = line.x;
        best.value = line.value;
      }
    }
    if (best.value - before < options.min_improvement) break;
  }
  return best;
}

OptimumPoint nelder_mead_maximize(const Objective& f, std::vector<double> start,
                                  const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  if (n == 0) throw Error(ErrorCode::kDimensionMismatch, "empty start point");
  // Minimize g = -f on a simplex of n + 1 vertices.
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
  std::vector<double> g(n + 1);
  std::size_t evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return -f(x);
  };
  for (std::size_t i = 0; i <= n; ++i) g[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  while (evals < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g[a] < g[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];
    if (g[worst] - g[best] < options.value_tolerance) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v <= n; ++v) {
      if (v == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v][i] / static_cast<double>(n);
    }
    for (std::size_t i = 0; i < n; ++i) xr[i] = centroid[i] + (centroid[i] - simplex[worst][i]);
    const double gr = eval(xr);
    if (gr < g[best]) {
      for (std::size_t i = 0; i < n; ++i) xe[i] = centroid[i] + 2.0 * (centroid[i] - simplex[worst][i]);
      const double ge = eval(xe);
      if (ge < gr) {
        simplex[worst] = xe;
        g[worst] = ge;
      } else {
        simplex[worst] = xr;
        g[worst] = gr;
      }
      continue;
    }
    if (gr < g[second]) {
      simplex[worst] = xr;
      g[worst] = gr;
      continue;
    }
    const bool outside = gr < g[worst];
    for (std::size_t i = 0; i < n; ++i) {
      const double far = outside ? xr[i] : simplex[worst][i];
      xc[i] = centroid[i] + 0.5 * (far - centroid[i]);
    }
    const double gc = eval(xc);
    if (gc < std::min(gr, g[worst])) {
      simplex[worst] = xc;
      g[worst] = gc;
      continue;
    }
    // Shrink towards the best vertex.
    for (std::size_t v = 0; v <= n; ++v) {
      if (v == best) continue;
      for (std::size_t i = 0; i < n; ++i) {
        simplex[v][i] = simplex[best][i] + 0.5 * (simplex[v][i] - simplex[best][i]);
      }
      g[v] = eval(simplex[v]);
    }
  }
  const auto it = std::min_element(g.begin(), g.end());
  const std::size_t idx = static_cast<std::size_t>(it - g.begin());
  return {simplex[idx], -g[idx]};
}

}  // namespace latentlink
