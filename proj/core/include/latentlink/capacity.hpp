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

// Entropies, Holevo information and the capacity searches built on them.
// All quantities are in bits.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latentlink/channel.hpp"
#include "latentlink/linalg.hpp"

namespace latentlink {

/// Eigenvalues in [-1e-10, 0) are treated as zero.
inline constexpr double kEntropyClipTolerance = 1e-10;
inline constexpr std::uint64_t kDefaultSeed = 0x1a7e417e5eedULL;

/// -Tr rho log2 rho. Throws kNotDensityMatrix on an eigenvalue below -1e-10.
double von_neumann_entropy(const CMatrix& rho);
/// Shannon entropy of a spectrum, with the same clipping rule.
double spectrum_entropy(std::span<const double> eigenvalues);

struct EnsembleItem {
  double weight;
  CMatrix state;
};

class Ensemble {
 public:
  /// Throws kInvalidState unless weights are nonnegative, sum to one within
  /// 1e-12 and every state is a density matrix of a common dimension.
  explicit Ensemble(std::vector<EnsembleItem> items);

  const std::vector<EnsembleItem>& items() const noexcept { return items_; }
  std::size_t dimension() const noexcept { return items_.front().state.rows(); }
  CMatrix average() const;

 private:
  std::vector<EnsembleItem> items_;
};

/// H[sum p_x ch(rho_x)] - sum p_x H[ch(rho_x)].
double holevo_information(const QuantumChannel& ch, const Ensemble& ens);

struct ReducedEnsembleParams {
  /// Throws kOutOfRange unless each parameter lies in [0, 1].
  ReducedEnsembleParams(double q, double p0, double p1);

  double q;
  double p0;
  double p1;
};

/// sqrt(p)|0> + sqrt(1 - p)|1>.
CMatrix reduced_basis_state(double p);
/// {q/2: psi0, Z psi0; (1-q)/2: psi1, Z psi1}.
Ensemble reduced_ensemble(const ReducedEnsembleParams& params);

enum class CapacityKind { kExactCapacity, kLowerBound, kUpperBound };
std::string_view to_string(CapacityKind kind);

struct CapacityResult {
  double value_bits = 0.0;
  std::vector<std::pair<std::string, double>> argmax;
  CapacityKind kind = CapacityKind::kLowerBound;

  /// Throws kOutOfRange for an unknown coordinate name.
  double coordinate(std::string_view name) const;
};

/// Maps the diagonal (a, b) of an interference operator to a channel. The
/// channel must be covariant under Z on the message.
using DiagonalChannelBuilder = std::function<QuantumChannel(double a, double b)>;

/// (a, b) -> interference_channel(diag(a, b), omega).
DiagonalChannelBuilder interference_builder(const ControlState& omega = ControlState::plus());

/// Maximum of the Holevo information over the covariant three-parameter
/// ensemble family: grid at step 1/32 in (q, p0, p1), then coordinate
/// refinement when `refine` is set. Throws kNegativeSingularValue.
CapacityResult reduced_capacity(double a, double b, const DiagonalChannelBuilder& build,
                                bool refine = true,
                                CapacityKind kind = CapacityKind::kExactCapacity);

enum class FRegionKind { kSingularValuesOfGivenF, kFreeQuadratic, kFreeLinear };

struct FConstraintRegion {
  /// Throws kOutOfRange when (a, b) violates the region's constraint.
  FConstraintRegion(FRegionKind kind, double a = 0.0, double b = 0.0);
  /// Singular values of `f`.
  static FConstraintRegion of_operator(const CMatrix& f);

  /// Whether (a, b) satisfies the constraint of this region's kind.
  bool admits(double a, double b) const;

  FRegionKind kind;
  double a;
  double b;
};

struct RegionScan {
  /// Radius in [0, 1] relative to the region boundary.
  std::vector<double> radii;
  /// Angle in [0, pi/2]; (a, b) runs from the a-axis to the b-axis.
  std::vector<double> angles;
  /// Row-major over (radius, angle).
  std::vector<double> values;
  /// Refined maximum; argmax carries radius, angle, a, b, q, p0, p1.
  CapacityResult best;
};

/// Maps polar coordinates to (a, b): (r/sqrt2)(cos t, sin t) for the
/// quadratic region, (r/2)(cos^2 t, sin^2 t) for the linear one.
std::pair<double, double> region_point(FRegionKind kind, double radius, double angle);

/// A 9 x 9 polar grid over a free region, then refinement of the radius and
/// angle around the best cell. Throws kOutOfRange for a given-F region.
RegionScan scan_region(FRegionKind kind, const DiagonalChannelBuilder& build, bool refine = true);

/// For a given F, reduced_capacity at its singular values; for a free region
/// the best value of scan_region.
CapacityResult maximize_over_region(const FConstraintRegion& region,
                                    const DiagonalChannelBuilder& build, bool refine = true);

/// Best two-state orthogonal ensemble {(q, psi), (1 - q, psi_perp)} over a
/// pi/32 Bloch grid and q at step 1/32, then local refinement.
CapacityResult orthogonal_lower_bound(const QuantumChannel& ch, bool refine = true);

/// log2(2d)/d + x log2 x + y log2 y with x, y = (1/d +- f^2)/2.
/// Throws kOutOfRange unless 0 <= f_norm <= 1/sqrt(d).
double analytic_upper_bound(double f_norm, std::size_t d);

struct OracleOptions {
  std::size_t n_states = 4;
  std::size_t restarts = 64;
  std::uint64_t seed = kDefaultSeed;
};

/// Multi-start Nelder-Mead over ensembles of `n_states` pure qubit states
/// with free weights.
CapacityResult oracle_holevo(const QuantumChannel& ch, const OracleOptions& options = {});

using ControlledChannelBuilder = std::function<QuantumChannel(const ControlState&)>;

/// True when the oracle value for each of `samples` random pure control
/// states stays within 1e-4 of the value at |+><+|.
bool control_state_dominance_check(const ControlledChannelBuilder& build, std::size_t samples,
                                   const OracleOptions& options = {});

}  // namespace latentlink
