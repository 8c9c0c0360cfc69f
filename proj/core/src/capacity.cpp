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

#include "latentlink/capacity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "latentlink/error.hpp"
#include "latentlink/optimize.hpp"
#include "latentlink/parallel.hpp"
#include "latentlink/random.hpp"

namespace latentlink {

namespace {

constexpr double kPi = std::numbers::pi;

/// Row-major transfer matrix of a channel: vec(out) = S vec(rho).
class TransferMap {
 public:
  explicit TransferMap(const QuantumChannel& ch)
      : din_(ch.din()), dout_(ch.dout()), s_(dout_ * dout_ * din_ * din_) {
    const std::size_t cols = din_ * din_;
    for (const auto& k : ch.kraus()) {
      for (std::size_t r = 0; r < dout_; ++r) {
        for (std::size_t c = 0; c < dout_; ++c) {
          Complex* row = &s_[(r * dout_ + c) * cols];
          for (std::size_t i = 0; i < din_; ++i) {
            const Complex left = k(r, i);
            for (std::size_t j = 0; j < din_; ++j) row[i * din_ + j] += left * std::conj(k(c, j));
          }
        }
      }
    }
  }

  std::size_t din() const { return din_; }
  std::size_t dout() const { return dout_; }

  CMatrix apply(const CMatrix& rho) const {
    const std::size_t cols = din_ * din_;
    const auto in = rho.entries();
    CMatrix out(dout_, dout_);
    auto o = out.entries();
    for (std::size_t rc = 0; rc < dout_ * dout_; ++rc) {
      const Complex* row = &s_[rc * cols];
      Complex acc = 0.0;
      for (std::size_t ij = 0; ij < cols; ++ij) acc += row[ij] * in[ij];
      o[rc] = acc;
    }
    return out;
  }

 private:
  std::size_t din_;
  std::size_t dout_;
  std::vector<Complex> s_;
};

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

CMatrix bloch_state(double theta, double phi) {
  return CMatrix::column({std::cos(theta / 2), std::polar(1.0, phi) * std::sin(theta / 2)});
}

CMatrix bloch_state_perp(double theta, double phi) {
  return CMatrix::column({-std::polar(1.0, -phi) * std::sin(theta / 2), std::cos(theta / 2)});
}

void require_qubit_input(const QuantumChannel& ch) {
  if (ch.din() != 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "qubit-input channel required, got din = " + std::to_string(ch.din()));
  }
}

}  // namespace

double spectrum_entropy(std::span<const double> eigenvalues) {
  double h = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -kEntropyClipTolerance) {
      throw Error(ErrorCode::kNotDensityMatrix,
                  "eigenvalue " + std::to_string(lambda) + " below tolerance");
    }
    h -= xlog2x(std::max(lambda, 0.0));
  }
  return std::max(h, 0.0);
}

double von_neumann_entropy(const CMatrix& rho) {
  if (rho.rows() == 2 && rho.cols() == 2) {
    if (hermiticity_defect(rho) > kHermitianTolerance) {
      throw Error(ErrorCode::kNonHermitian, "entropy of a non-Hermitian matrix");
    }
    const auto [hi, lo] = hermitian_eigenvalues_2x2(rho);
    const std::array<double, 2> ev{hi, lo};
    return spectrum_entropy(ev);
  }
  const auto ev = hermitian_eigenvalues(rho);
  return spectrum_entropy(ev);
}

// ---------------------------------------------------------------------------

Ensemble::Ensemble(std::vector<EnsembleItem> items) : items_(std::move(items)) {
  if (items_.empty()) throw Error(ErrorCode::kInvalidState, "empty ensemble");
  const std::size_t d = items_.front().state.rows();
  double total = 0.0;
  for (const auto& item : items_) {
    if (!(item.weight >= 0.0)) throw Error(ErrorCode::kInvalidState, "negative ensemble weight");
    if (item.state.rows() != d || item.state.cols() != d) {
      throw Error(ErrorCode::kInvalidState, "ensemble states differ in dimension");
    }
    if (hermiticity_defect(item.state) > kHermitianTolerance ||
        std::abs(item.state.trace() - 1.0) > 1e-10 ||
        hermitian_eigenvalues(item.state).back() < -kEntropyClipTolerance) {
      throw Error(ErrorCode::kInvalidState, "ensemble state is not a density matrix");
    }
    total += item.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidState, "ensemble weights sum to " + std::to_string(total));
  }
}

CMatrix Ensemble::average() const {
  CMatrix avg(dimension(), dimension());
  for (const auto& item : items_) avg += item.state * item.weight;
  return avg;
}

double holevo_information(const QuantumChannel& ch, const Ensemble& ens) {
  if (ens.dimension() != ch.din()) {
    throw Error(ErrorCode::kDimensionMismatch, "ensemble does not match channel input");
  }
  CMatrix avg(ch.dout(), ch.dout());
  double conditional = 0.0;
  for (const auto& item : ens.items()) {
    if (item.weight == 0.0) continue;
    const CMatrix out = ch.apply(item.state);
    avg += out * item.weight;
    conditional += item.weight * von_neumann_entropy(out);
  }
  return std::max(von_neumann_entropy(avg) - conditional, 0.0);
}

// ---------------------------------------------------------------------------

ReducedEnsembleParams::ReducedEnsembleParams(double q_in, double p0_in, double p1_in)
    : q(q_in), p0(p0_in), p1(p1_in) {
  for (double v : {q, p0, p1}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kOutOfRange, "ensemble parameter outside [0, 1]");
    }
  }
}

CMatrix reduced_basis_state(double p) {
  return CMatrix::column({std::sqrt(p), std::sqrt(1.0 - p)});
}

Ensemble reduced_ensemble(const ReducedEnsembleParams& params) {
  const CMatrix z = pauli::Z();
  const CMatrix psi0 = CMatrix::projector(reduced_basis_state(params.p0));
  const CMatrix psi1 = CMatrix::projector(reduced_basis_state(params.p1));
  return Ensemble({{params.q / 2, psi0},
                   {params.q / 2, z * psi0 * z},
                   {(1.0 - params.q) / 2, psi1},
                   {(1.0 - params.q) / 2, z * psi1 * z}});
}

std::string_view to_string(CapacityKind kind) {
  switch (kind) {
    case CapacityKind::kExactCapacity:
      return "exact_capacity";
    case CapacityKind::kLowerBound:
      return "lower_bound";
    case CapacityKind::kUpperBound:
      return "upper_bound";
  }
  return "unknown";
}

double CapacityResult::coordinate(std::string_view name) const {
  for (const auto& [key, value] : argmax) {
    if (key == name) return value;
  }
  throw Error(ErrorCode::kOutOfRange, "no coordinate named " + std::string(name));
}

DiagonalChannelBuilder interference_builder(const ControlState& omega) {
  return [omega](double a, double b) {
    return interference_channel(CMatrix::diagonal({a, b}), omega);
  };
}

CapacityResult reduced_capacity(double a, double b, const DiagonalChannelBuilder& build,
                                bool refine, CapacityKind kind) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw Error(ErrorCode::kNegativeSingularValue, "diagonal entries of F must be nonnegative");
  }
  const QuantumChannel ch = build(a, b);
  require_qubit_input(ch);
  const TransferMap map(ch);
  auto h_pure = [&](double p) {
    return von_neumann_entropy(map.apply(CMatrix::projector(reduced_basis_state(p))));
  };
  auto h_mean = [&](double t) { return von_neumann_entropy(map.apply(CMatrix::diagonal({t, 1.0 - t}))); };

  constexpr std::size_t kSteps = 32;
  constexpr double kStep = 1.0 / kSteps;
  std::array<double, kSteps + 1> pure{};
  for (std::size_t k = 0; k <= kSteps; ++k) pure[k] = h_pure(k * kStep);
  // With every parameter on the grid, q p0 + (1 - q) p1 is a multiple of 1/32^2.
  std::vector<double> mean(kSteps * kSteps + 1);
  for (std::size_t j = 0; j < mean.size(); ++j) {
    mean[j] = h_mean(static_cast<double>(j) / static_cast<double>(kSteps * kSteps));
  }

  double best = -1.0;
  std::array<std::size_t, 3> at{0, 0, 0};
  for (std::size_t kq = 0; kq <= kSteps; ++kq) {
    const double q = kq * kStep;
    for (std::size_t k0 = 0; k0 <= kSteps; ++k0) {
      for (std::size_t k1 = 0; k1 <= kSteps; ++k1) {
        const double chi =
            mean[kq * k0 + (kSteps - kq) * k1] - q * pure[k0] - (1.0 - q) * pure[k1];
        if (chi > best) {
          best = chi;
          at = {kq, k0, k1};
        }
      }
    }
  }
  std::vector<double> x{at[0] * kStep, at[1] * kStep, at[2] * kStep};

  if (refine) {
    const Objective chi = [&](std::span<const double> v) {
      const double q = v[0];
      return h_mean(q * v[1] + (1.0 - q) * v[2]) - q * h_pure(v[1]) - (1.0 - q) * h_pure(v[2]);
    };
    CoordinateRefineOptions opts;
    opts.bracket = {kStep, kStep, kStep};
    opts.lower = {0.0, 0.0, 0.0};
    opts.upper = {1.0, 1.0, 1.0};
    const OptimumPoint refined = coordinate_refine(chi, x, opts);
    if (refined.value > best) {
      best = refined.value;
      x = refined.x;
    }
  }
  CapacityResult result;
  result.value_bits = std::max(best, 0.0);
  result.argmax = {{"q", x[0]}, {"p0", x[1]}, {"p1", x[2]}, {"a", a}, {"b", b}};
  result.kind = kind;
  return result;
}

// ---------------------------------------------------------------------------

FConstraintRegion::FConstraintRegion(FRegionKind kind_in, double a_in, double b_in)
    : kind(kind_in), a(a_in), b(b_in) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw Error(ErrorCode::kNegativeSingularValue, "region coordinates must be nonnegative");
  }
  if (!admits(a, b)) throw Error(ErrorCode::kOutOfRange, "(a, b) violates the region constraint");
}

FConstraintRegion FConstraintRegion::of_operator(const CMatrix& f) {
  const auto sv = singular_values(f);
  if (sv.size() != 2) throw Error(ErrorCode::kDimensionMismatch, "F must be 2x2");
  return FConstraintRegion(FRegionKind::kSingularValuesOfGivenF, sv[0], sv[1]);
}

bool FConstraintRegion::admits(double x, double y) const {
  switch (kind) {
    case FRegionKind::kSingularValuesOfGivenF:
      return true;
    case FRegionKind::kFreeQuadratic:
      return x * x + y * y <= 0.5 + 1e-12;
    case FRegionKind::kFreeLinear:
      return x + y <= 0.5 + 1e-12;
  }
  return false;
}

std::pair<double, double> region_point(FRegionKind kind, double radius, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  switch (kind) {
    case FRegionKind::kFreeQuadratic:
      return {std::max(radius * std::numbers::sqrt2 / 2 * c, 0.0),
              std::max(radius * std::numbers::sqrt2 / 2 * s, 0.0)};
    case FRegionKind::kFreeLinear:
      return {radius / 2 * c * c, radius / 2 * s * s};
    case FRegionKind::kSingularValuesOfGivenF:
      break;
  }
  throw Error(ErrorCode::kOutOfRange, "a given-F region has no polar parametrization");
}

RegionScan scan_region(FRegionKind kind, const DiagonalChannelBuilder& build, bool refine) {
  if (kind == FRegionKind::kSingularValuesOfGivenF) {
    throw Error(ErrorCode::kOutOfRange, "a given-F region has no polar parametrization");
  }
  auto evaluate = [&](double r, double angle) {
    const auto [a, b] = region_point(kind, std::clamp(r, 0.0, 1.0), std::clamp(angle, 0.0, kPi / 2));
    return reduced_capacity(a, b, build, refine);
  };

  constexpr std::size_t kCells = 9;
  RegionScan scan;
  for (std::size_t i = 0; i < kCells; ++i) {
    scan.radii.push_back(static_cast<double>(i) / (kCells - 1));
    scan.angles.push_back(static_cast<double>(i) * (kPi / 2) / (kCells - 1));
  }
  const auto grid = parallel_map(kCells * kCells, [&](std::size_t idx) {
    return evaluate(scan.radii[idx / kCells], scan.angles[idx % kCells]);
  });
  for (const auto& g : grid) scan.values.push_back(g.value_bits);
  const std::size_t best_idx = first_argmax(scan.values);
  scan.best = grid[best_idx];
  double r = scan.radii[best_idx / kCells];
  double angle = scan.angles[best_idx % kCells];

  if (refine) {
    const Objective objective = [&](std::span<const double> v) {
      return evaluate(v[0], v[1]).value_bits;
    };
    CoordinateRefineOptions opts;
    opts.bracket = {1.0 / (kCells - 1), (kPi / 2) / (kCells - 1)};
    opts.lower = {0.0, 0.0};
    opts.upper = {1.0, kPi / 2};
    opts.max_passes = 8;
    const OptimumPoint refined = coordinate_refine(objective, {r, angle}, opts);
    if (refined.value > scan.best.value_bits) {
      const CapacityResult candidate = evaluate(refined.x[0], refined.x[1]);
      if (candidate.value_bits > scan.best.value_bits) {
        scan.best = candidate;
        r = refined.x[0];
        angle = refined.x[1];
      }
    }
  }
  scan.best.argmax.emplace_back("radius", r);
  scan.best.argmax.emplace_back("angle", angle);
  return scan;
}

CapacityResult maximize_over_region(const FConstraintRegion& region,
                                    const DiagonalChannelBuilder& build, bool refine) {
  if (region.kind == FRegionKind::kSingularValuesOfGivenF) {
    return reduced_capacity(region.a, region.b, build, refine);
  }
  return scan_region(region.kind, build, refine).best;
}

// ---------------------------------------------------------------------------

CapacityResult orthogonal_lower_bound(const QuantumChannel& ch, bool refine) {
  require_qubit_input(ch);
  const TransferMap map(ch);

  // (theta, phi, q) and (pi - theta, phi + pi, 1 - q) describe the same
  // ensemble, so theta in [0, pi/2] covers the full pi/32 grid.
  constexpr std::size_t kTheta = 17;
  constexpr std::size_t kPhi = 64;
  constexpr std::size_t kQ = 32;
  constexpr double kAngleStep = kPi / 32;

  struct CellBest {
    double value = -1.0;
    std::size_t kq = 0;
  };
  const auto cells = parallel_map(kTheta * kPhi, [&](std::size_t idx) {
    const double theta = static_cast<double>(idx / kPhi) * kAngleStep;
    const double phi = static_cast<double>(idx % kPhi) * kAngleStep;
    const CMatrix out0 = map.apply(CMatrix::projector(bloch_state(theta, phi)));
    const CMatrix out1 = map.apply(CMatrix::projector(bloch_state_perp(theta, phi)));
    const double h0 = von_neumann_entropy(out0);
    const double h1 = von_neumann_entropy(out1);
    CellBest cell;
    for (std::size_t k = 0; k <= kQ; ++k) {
      const double q = static_cast<double>(k) / kQ;
      double chi = 0.0;
      if (k != 0 && k != kQ) {
        chi = von_neumann_entropy(out0 * q + out1 * (1.0 - q)) - q * h0 - (1.0 - q) * h1;
      }
      if (chi > cell.value) cell = {chi, k};
    }
    return cell;
  });
  std::vector<double> values;
  for (const auto& c : cells) values.push_back(c.value);
  const std::size_t best_idx = first_argmax(values);
  double best = cells[best_idx].value;
  std::vector<double> x{static_cast<double>(best_idx / kPhi) * kAngleStep,
                        static_cast<double>(best_idx % kPhi) * kAngleStep,
                        static_cast<double>(cells[best_idx].kq) / kQ};

  if (refine) {
    const Objective chi = [&](std::span<const double> v) {
      const CMatrix out0 = map.apply(CMatrix::projector(bloch_state(v[0], v[1])));
      const CMatrix out1 = map.apply(CMatrix::projector(bloch_state_perp(v[0], v[1])));
      const double q = v[2];
      return von_neumann_entropy(out0 * q + out1 * (1.0 - q)) - q * von_neumann_entropy(out0) -
             (1.0 - q) * von_neumann_entropy(out1);
    };
    CoordinateRefineOptions opts;
    opts.bracket = {kAngleStep, kAngleStep, 1.0 / kQ};
    opts.lower = {0.0, -2 * kPi, 0.0};
    opts.upper = {kPi, 4 * kPi, 1.0};
    const OptimumPoint refined = coordinate_refine(chi, x, opts);
    if (refined.value > best) {
      best = refined.value;
      x = refined.x;
    }
  }
  CapacityResult result;
  result.value_bits = std::max(best, 0.0);
  result.argmax = {{"theta", x[0]}, {"phi", x[1]}, {"q", x[2]}};
  result.kind = CapacityKind::kLowerBound;
  return result;
}

double analytic_upper_bound(double f_norm, std::size_t d) {
  if (d == 0) throw Error(ErrorCode::kOutOfRange, "dimension must be positive");
  const double inv_d = 1.0 / static_cast<double>(d);
  if (!(f_norm >= 0.0) || f_norm * f_norm > inv_d + 1e-12) {
    throw Error(ErrorCode::kOutOfRange, "f_norm must lie in [0, 1/sqrt(d)]");
  }
  const double f2 = std::min(f_norm * f_norm, inv_d);
  const double x = (inv_d + f2) / 2;
  const double y = (inv_d - f2) / 2;
  return std::log2(2.0 * static_cast<double>(d)) * inv_d + xlog2x(x) + xlog2x(y);
}

// ---------------------------------------------------------------------------

CapacityResult oracle_holevo(const QuantumChannel& ch, const OracleOptions& options) {
  require_qubit_input(ch);
  if (options.n_states == 0 || options.n_states > 4) {
    throw Error(ErrorCode::kOutOfRange, "oracle ensembles hold between 1 and 4 states");
  }
  if (options.restarts == 0) throw Error(ErrorCode::kOutOfRange, "oracle needs a restart");
  const TransferMap map(ch);
  const std::size_t n = options.n_states;

  // Layout: theta_i, phi_i, u_i per state; weights are u_i^2 / sum u^2.
  auto weights_of = [n](std::span<const double> v) {
    std::vector<double> w(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = v[3 * i + 2] * v[3 * i + 2];
      total += w[i];
    }
    for (auto& wi : w) wi = total > 0.0 ? wi / total : 1.0 / static_cast<double>(n);
    return w;
  };
  const Objective chi = [&](std::span<const double> v) {
    const auto w = weights_of(v);
    CMatrix avg(map.dout(), map.dout());
    double conditional = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const CMatrix out = map.apply(CMatrix::projector(bloch_state(v[3 * i], v[3 * i + 1])));
      avg += out * w[i];
      conditional += w[i] * von_neumann_entropy(out);
    }
    return von_neumann_entropy(avg) - conditional;
  };

  const auto runs = parallel_map(options.restarts, [&](std::size_t r) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    Rng rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> start(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      start[3 * i] = std::acos(1.0 - 2.0 * unit(rng));
      start[3 * i + 1] = 2.0 * kPi * unit(rng);
      start[3 * i + 2] = 0.2 + 0.8 * unit(rng);
    }
    NelderMeadOptions coarse;
    coarse.initial_step = 0.4;
    coarse.max_evaluations = 600 * n;
    OptimumPoint best = nelder_mead_maximize(chi, start, coarse);
    NelderMeadOptions polish;
    polish.initial_step = 0.05;
    polish.max_evaluations = 400 * n;
    const OptimumPoint polished = nelder_mead_maximize(chi, best.x, polish);
    if (polished.value > best.value) best = polished;
    return best;
  });
  std::vector<double> values;
  for (const auto& run : runs) values.push_back(run.value);
  const OptimumPoint& best = runs[first_argmax(values)];

  CapacityResult result;
  result.value_bits = std::max(best.value, 0.0);
  result.kind = CapacityKind::kLowerBound;
  const auto w = weights_of(best.x);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string idx = std::to_string(i);
    result.argmax.emplace_back("theta" + idx, best.x[3 * i]);
    result.argmax.emplace_back("phi" + idx, best.x[3 * i + 1]);
    result.argmax.emplace_back("weight" + idx, w[i]);
  }
  return result;
}

bool control_state_dominance_check(const ControlledChannelBuilder& build, std::size_t samples,
                                   const OracleOptions& options) {
  const double reference = oracle_holevo(build(ControlState::plus()), options).value_bits;
  Rng rng(options.seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const ControlState omega(CMatrix::projector(random_pure_state(2, rng)));
    if (oracle_holevo(build(omega), options).value_bits > reference + 1e-4) return false;
  }
  return true;
}

}  // namespace latentlink
