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

// Phase-grid scans and single-number experiments. Every scan is
// deterministic: fixed grid order, index-ordered parallel evaluation and
// max reduction with first-index tie-break.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latentlink/capacity.hpp"
#include "latentlink/channel.hpp"

namespace latentlink {

inline constexpr double kDefaultGridStep = std::numbers::pi / 8;
inline constexpr double kFineGridStep = std::numbers::pi / 32;

struct ScanAxis {
  std::string name;
  std::vector<double> values;
};

/// A per-point quantity reported next to the capacity.
struct ScanColumn {
  std::string name;
  std::vector<double> values;
};

struct ScanMeta {
  std::string scenario;
  std::string correlation;
  std::string permutation;
  std::string realization;
  std::string control_state = "plus";
  std::optional<double> dephasing;
  std::optional<double> grid_step;
  std::uint64_t seed = kDefaultSeed;
  CapacityKind kind = CapacityKind::kLowerBound;
  std::vector<std::pair<std::string, std::string>> notes;
};

struct ScanResult {
  std::vector<ScanAxis> axes;
  /// Row-major over `axes`; the last axis varies fastest.
  std::vector<double> values;
  std::vector<ScanColumn> columns;
  ScanMeta meta;
  /// Refined global maximum; never below the largest grid value.
  CapacityResult best;

  std::size_t point_count() const;
  /// Coordinates of the row-major grid point `index`.
  std::vector<double> coordinates(std::size_t index) const;
  double grid_max() const;
};

/// Number of points in [0, 2pi) for `step`. Throws kOutOfRange unless the
/// step divides 2pi.
std::size_t phase_grid_size(double step);

/// phi0 = 0; (phi1, phi2, phi3) on the grid; reduced_capacity at the
/// singular values of F.
ScanResult scan_single_uncorrelated(double grid_step = kDefaultGridStep, bool refine = true);

/// (0 1)(2 3) on four indices.
PermutationCorrelation swap_pairs_permutation();

/// phi0 = phi2 = 0; (phi1, phi3) on the grid; orthogonal_lower_bound of the
/// single-line channel with joint delta_{m, sigma(n)}/4.
ScanResult scan_single_correlated(double grid_step = kDefaultGridStep,
                                  const PermutationCorrelation& sigma = swap_pairs_permutation(),
                                  bool refine = true);

enum class Realization { kRandomUnitary, kArbitrary };

/// Uncorrelated two-line network. kRandomUnitary scans (phi1, phi2, phi3)
/// with F^2 in place of F; kArbitrary scans the free linear region of the
/// diagonal of F^2 and records it over (radius, angle).
ScanResult scan_network_uncorrelated(double grid_step = kDefaultGridStep,
                                     Realization realization = Realization::kRandomUnitary,
                                     bool refine = true);

/// Both lines with joint delta_{m, sigma(n)}/4 for sigma = (0 1)(2 3);
/// phi0 = phi2 = 0 and (phi1, phi3) on the grid. Uses the closed-form channel
/// and checks the full construction against it at every point; the largest
/// Choi deviation is recorded in meta.notes.
ScanResult scan_network_correlated(double grid_step = kDefaultGridStep, bool refine = true);

/// Larger of the 4-state oracle and the orthogonal bound for the switch of
/// two completely depolarising qubit channels.
CapacityResult switch_capacity(std::uint64_t seed = kDefaultSeed,
                               const ControlState& omega = ControlState::plus());

struct DephasingCurves {
  /// Uncorrelated single line over the free quadratic region.
  ScanResult uncorrelated;
  /// Orthogonal bound of the perfect-transmission channel.
  ScanResult correlated;
};

/// Throws kOutOfRange if any s is outside [0, 1/2] or the list is not
/// ascending.
DephasingCurves dephasing_curve(std::span<const double> s_values);

struct FNormScatter {
  /// Column "f_norm" against the capacity of C_{omega,F}.
  ScanResult f_series;
  /// Columns "f_norm_squared" and "f2_norm" against the capacity of
  /// C_{omega,F^2}.
  ScanResult f2_series;
};

FNormScatter fnorm_scatter(double grid_step = kDefaultGridStep);

/// The single-line channel with sigma = (0 1)(2 3), phases (0, 0, 0, pi/2)
/// and omega = |+><+|.
QuantumChannel perfect_transmission_channel(const ControlState& omega = ControlState::plus());

/// Header of axis names then capacity_bits then extra columns; values with
/// 12 significant digits.
void write_csv(const ScanResult& result, std::ostream& out);
/// Meta, grid and best point as JSON. `timestamp` is copied verbatim.
void write_meta_json(const ScanResult& result, std::ostream& out, const std::string& timestamp);

}  // namespace latentlink
