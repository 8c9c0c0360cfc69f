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

#pragma once

// Derivative-free maximizers used by the capacity searches.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace latentlink {

using Objective = std::function<double(std::span<const double>)>;

struct OptimumPoint {
  std::vector<double> x;
  double value;
};

struct ScalarOptimum {
  double x;
  double value;
};

/// Maximizes f on [lo, hi] by Brent's method (golden-section steps with
/// parabolic acceleration).
ScalarOptimum line_maximize(const std::function<double(double)>& f, double lo, double hi);

struct CoordinateRefineOptions {
  /// Half-width of the bracket searched around the incumbent on each axis.
  std::vector<double> bracket;
  std::vector<double> lower;
  std::vector<double> upper;
  /// Passes stop once a full pass improves the value by less than this.
  double min_improvement = 1e-7;
  std::size_t max_passes = 64;
};

/// Cyclic coordinate line searches starting from `start`. Never returns a
/// value below f(start).
OptimumPoint coordinate_refine(const Objective& f, std::vector<double> start,
                               const CoordinateRefineOptions& options);

struct NelderMeadOptions {
  double initial_step = 0.25;
  std::size_t max_evaluations = 4000;
  /// Converged when the simplex value spread drops below this.
  double value_tolerance = 1e-11;
};

OptimumPoint nelder_mead_maximize(const Objective& f, std::vector<double> start,
                                  const NelderMeadOptions& options = {});

}  // namespace latentlink
