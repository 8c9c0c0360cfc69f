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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "latentlink/capacity.hpp"
#include "latentlink/channel.hpp"
#include "latentlink/error.hpp"
#include "latentlink/experiments.hpp"
#include "test_support.hpp"

namespace latentlink {
namespace {

using testing::kPi;

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no latentlink::Error thrown";
  return ErrorCode::kInapplicable;
}

QuantumChannel then_unitary(const QuantumChannel& ch, const CMatrix& u) {
  std::vector<CMatrix> ks;
  for (const auto& k : ch.kraus()) ks.push_back(u * k);
  return QuantumChannel(ks);
}

CMatrix random_admissible_f(Rng& rng) {
  return interference_operator(pauli_realization(
      {random_phase(rng), random_phase(rng), random_phase(rng), random_phase(rng)}));
}

// --- entropy -----------------------------------------------------------------

TEST(VonNeumannEntropy, Examples) {
  EXPECT_NEAR(von_neumann_entropy(CMatrix::identity(2) * 0.5), 1.0, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(CMatrix::identity(4) * 0.25), 2.0, 1e-14);
  EXPECT_NEAR(von_neumann_entropy(CMatrix::projector(testing::ket_plus())), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(CMatrix::diagonal({0.75, 0.25})), binary_entropy(0.25), 1e-15);
}

TEST(VonNeumannEntropy, Errors) {
  CMatrix skew = CMatrix::identity(2) * 0.5;
  skew(0, 1) = 0.1;
  EXPECT_EQ(code_of([&] { von_neumann_entropy(skew); }), ErrorCode::kNonHermitian);
  EXPECT_EQ(code_of([] { von_neumann_entropy(CMatrix::diagonal({1.2, -0.2})); }), ErrorCode::kNotDensityMatrix);
}

TEST(VonNeumannEntropy, ClosedFormMatchesSpectrum) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const CMatrix rho = random_density_matrix(2, rng);
    const auto ev = hermitian_eigenvalues(rho);
    EXPECT_NEAR(von_neumann_entropy(rho), binary_entropy(ev.front()), 1e-12);
    EXPECT_NEAR(spectrum_entropy(ev), binary_entropy(ev.front()), 1e-12);
  }
}

TEST(VonNeumannEntropy, UnitaryInvariance) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix rho = random_density_matrix(4, rng);
    const CMatrix u = random_unitary(4, rng);
    EXPECT_NEAR(von_neumann_entropy(u * rho * u.adjoint()), von_neumann_entropy(rho), 1e-12);
  }
}

// --- Holevo information ----------------------------------------------------------

Ensemble basis_ensemble() {
  return Ensemble({{0.5, CMatrix::diagonal({1.0, 0.0})}, {0.5, CMatrix::diagonal({0.0, 1.0})}});
}

TEST(HolevoInformation, Examples) {
  EXPECT_NEAR(holevo_information(identity_channel(2), basis_ensemble()), 1.0, 1e-14);
  EXPECT_NEAR(holevo_information(depolarizing_qubit_channel(), basis_ensemble()), 0.0, 1e-14);
  const Ensemble single({{1.0, CMatrix::diagonal({0.5, 0.5})}});
  EXPECT_NEAR(holevo_information(identity_channel(2), single), 0.0, 1e-14);
}

TEST(Ensemble, Validation) {
  const CMatrix p0 = CMatrix::diagonal({1.0, 0.0});
  EXPECT_EQ(code_of([] { Ensemble({}); }), ErrorCode::kInvalidState);
  EXPECT_EQ(code_of([&] { Ensemble({{0.7, p0}, {0.7, p0}}); }), ErrorCode::kInvalidState);
  EXPECT_EQ(code_of([&] { Ensemble({{1.5, p0}, {-0.5, p0}}); }), ErrorCode::kInvalidState);
  EXPECT_EQ(code_of([&] { Ensemble({{0.5, p0}, {0.5, CMatrix::identity(4) * 0.25}}); }), ErrorCode::kInvalidState);
  EXPECT_EQ(code_of([] { Ensemble({{1.0, CMatrix::diagonal({0.5, 0.4})}}); }), ErrorCode::kInvalidState);
}

TEST(HolevoInformation, OutputUnitaryCovariance) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const QuantumChannel ch = interference_channel(random_admissible_f(rng), ControlState::plus());
    std::vector<EnsembleItem> items;
    for (int k = 0; k < 3; ++k) items.push_back({1.0 / 3, CMatrix::projector(random_pure_state(2, rng))});
    const Ensemble ens(items);
    EXPECT_NEAR(holevo_information(then_unitary(ch, random_unitary(4, rng)), ens), holevo_information(ch, ens),
                1e-12);
  }
}

TEST(HolevoInformation, InputUnitaryCovariance) {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const CMatrix u = random_unitary(2, rng);
    const QuantumChannel ch = interference_channel(random_admissible_f(rng), ControlState::plus());
    std::vector<CMatrix> ks;
    for (const auto& k : ch.kraus()) ks.push_back(k * u.adjoint());
    const QuantumChannel rotated(ks);
    std::vector<EnsembleItem> items, rotated_items;
    for (int k = 0; k < 3; ++k) {
      const CMatrix rho = random_density_matrix(2, rng);
      items.push_back({1.0 / 3, rho});
      rotated_items.push_back({1.0 / 3, u * rho * u.adjoint()});
    }
    EXPECT_NEAR(holevo_information(rotated, Ensemble(rotated_items)), holevo_information(ch, Ensemble(items)),
                1e-12);
  }
}

TEST(HolevoInformation, ConcaveInWeights) {
  Rng rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const QuantumChannel ch = interference_channel(random_admissible_f(rng), ControlState::plus());
    std::array<CMatrix, 3> states;
    for (auto& s : states) s = CMatrix::projector(random_pure_state(2, rng));
    auto weights = [&] {
      std::array<double, 3> w{unit(rng), unit(rng), unit(rng)};
      const double t = w[0] + w[1] + w[2];
      for (double& x : w) x /= t;
      return w;
    };
    const auto w1 = weights();
    const auto w2 = weights();
    const double lambda = unit(rng);
    auto chi = [&](const std::array<double, 3>& w) {
      return holevo_information(ch, Ensemble({{w[0], states[0]}, {w[1], states[1]}, {w[2], states[2]}}));
    };
    std::array<double, 3> mix;
    for (int i = 0; i < 3; ++i) mix[i] = lambda * w1[i] + (1 - lambda) * w2[i];
    EXPECT_GE(chi(mix) + 1e-12, lambda * chi(w1) + (1 - lambda) * chi(w2));
  }
}

TEST(HolevoInformation, DataProcessing) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const QuantumChannel ch = perfect_transmission_channel();
    const std::vector<EnsembleItem> items{{0.5, CMatrix::projector(testing::ket_plus())},
                                          {0.5, CMatrix::projector(testing::ket_minus())}};
    const double s = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
    EXPECT_LE(holevo_information(dephase_control(ch, s), Ensemble(items)),
              holevo_information(ch, Ensemble(items)) + 1e-12);
  }
}

// --- reduced family ------------------------------------------------------------------

TEST(ReducedEnsemble, ParametersValidated) {
  EXPECT_EQ(code_of([] { ReducedEnsembleParams(1.1, 0.5, 0.5); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { ReducedEnsembleParams(0.5, -0.1, 0.5); }), ErrorCode::kOutOfRange);
}

TEST(ReducedEnsemble, HolevoMatchesThreeTermFormula) {
  Rng rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double b = 0.5 * unit(rng);
    const double a = std::sqrt(0.5 - b * b) * unit(rng);
    const QuantumChannel ch = interference_builder()(a, b);
    const double q = unit(rng), p0 = unit(rng), p1 = unit(rng);
    const double t = q * p0 + (1 - q) * p1;
    auto psi = [](double p) { return CMatrix::column({std::sqrt(p), std::sqrt(1 - p)}); };
    const double expected = von_neumann_entropy(ch.apply(CMatrix::diagonal({t, 1 - t}))) -
                            q * von_neumann_entropy(ch.apply(CMatrix::projector(psi(p0)))) -
                            (1 - q) * von_neumann_entropy(ch.apply(CMatrix::projector(psi(p1))));
    EXPECT_NEAR(holevo_information(ch, reduced_ensemble({q, p0, p1})), std::max(expected, 0.0), 1e-10);
  }
}

TEST(ReducedCapacity, DominatesFixedParameters) {
  Rng rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = 0.5 * unit(rng), b = 0.5 * unit(rng);
    const auto best = reduced_capacity(a, b, interference_builder());
    const QuantumChannel ch = interference_builder()(a, b);
    for (int k = 0; k < 20; ++k) {
      EXPECT_GE(best.value_bits + 1e-12,
                holevo_information(ch, reduced_ensemble({unit(rng), unit(rng), unit(rng)})));
    }
    EXPECT_NEAR(holevo_information(ch, reduced_ensemble({best.coordinate("q"), best.coordinate("p0"),
                                                         best.coordinate("p1")})),
                best.value_bits, 1e-12);
    EXPECT_EQ(best.coordinate("a"), a);
  }
}

TEST(ReducedCapacity, RefinementNeverLowersGridValue) {
  for (double a : {0.1, 0.3, 0.5}) {
    EXPECT_GE(reduced_capacity(a, 0.2, interference_builder()).value_bits,
              reduced_capacity(a, 0.2, interference_builder(), false).value_bits);
  }
}

TEST(ReducedCapacity, AgreesWithOracle) {
  OracleOptions options;
  options.restarts = 16;
  for (const auto& [a, b] : {std::pair{0.5, 0.5}, std::pair{0.6, 0.2}, std::pair{0.25, 0.1}}) {
    const double reduced = reduced_capacity(a, b, interference_builder()).value_bits;
    const double oracle = oracle_holevo(interference_builder()(a, b), options).value_bits;
    EXPECT_NEAR(reduced, oracle, 1e-3) << a << ", " << b;
  }
}

TEST(ReducedCapacity, MonotoneInSingularValues) {
  std::array<std::array<double, 9>, 9> c{};
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) c[i][j] = reduced_capacity(i / 16.0, j / 16.0, interference_builder()).value_bits;
  }
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      if (i + 1 < 9) EXPECT_GE(c[i + 1][j] + 1e-7, c[i][j]) << i << ", " << j;
      if (j + 1 < 9) EXPECT_GE(c[i][j + 1] + 1e-7, c[i][j]) << i << ", " << j;
      EXPECT_NEAR(c[i][j], c[j][i], 1e-7);
    }
  }
}

TEST(ReducedCapacity, RejectsNegativeSingularValue) {
  EXPECT_EQ(code_of([] { reduced_capacity(-0.1, 0.2, interference_builder()); }),
            ErrorCode::kNegativeSingularValue);
}

TEST(ReducedCapacity, ZeroOperatorCarriesNothing) {
  EXPECT_NEAR(reduced_capacity(0.0, 0.0, interference_builder()).value_bits, 0.0, 1e-12);
}

// --- bound ----------------------------------------------------------------------------

double bound_oracle(double f, double d) {
  const double x = (1 / d + f * f) / 2;
  const double y = (1 / d - f * f) / 2;
  auto xlogx = [](double v) { return v > 0 ? v * std::log2(v) : 0.0; };
  return std::log2(2 * d) / d + xlogx(x) + xlogx(y);
}

TEST(AnalyticUpperBound, Examples) {
  EXPECT_NEAR(analytic_upper_bound(0.0, 2), 0.0, 1e-15);
  EXPECT_NEAR(analytic_upper_bound(0.5, 2), 0.094361, 1e-6);
  EXPECT_NEAR(analytic_upper_bound(1 / std::numbers::sqrt2, 2), 0.5, 1e-12);
  for (std::size_t d : {2u, 3u, 4u}) {
    for (double t : {0.0, 0.3, 0.7, 1.0}) {
      const double f = t / std::sqrt(static_cast<double>(d));
      EXPECT_NEAR(analytic_upper_bound(f, d), bound_oracle(f, static_cast<double>(d)), 1e-14);
    }
  }
}

TEST(AnalyticUpperBound, OutOfRange) {
  EXPECT_EQ(code_of([] { analytic_upper_bound(0.8, 2); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { analytic_upper_bound(-0.1, 2); }), ErrorCode::kOutOfRange);
}

TEST(AnalyticUpperBound, DominatesReducedCapacity) {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const CMatrix f = random_admissible_f(rng);
    const auto sv = singular_values(f);
    const double reduced = reduced_capacity(sv[0], sv[1], interference_builder()).value_bits;
    EXPECT_LE(reduced, analytic_upper_bound(std::min(sv[0], 1 / std::numbers::sqrt2), 2) + 1e-9);
  }
}

// --- regions --------------------------------------------------------------------------

TEST(FConstraintRegion, Admits) {
  const FConstraintRegion quadratic(FRegionKind::kFreeQuadratic);
  EXPECT_TRUE(quadratic.admits(0.5, 0.5));
  EXPECT_FALSE(quadratic.admits(0.6, 0.5));
  const FConstraintRegion linear(FRegionKind::kFreeLinear);
  EXPECT_TRUE(linear.admits(0.25, 0.25));
  EXPECT_FALSE(linear.admits(0.3, 0.25));
  EXPECT_EQ(code_of([] { FConstraintRegion(FRegionKind::kSingularValuesOfGivenF, -0.1, 0.0); }),
            ErrorCode::kNegativeSingularValue);
}

TEST(RegionPoint, StaysInsideRegion) {
  for (double r : {0.0, 0.5, 1.0}) {
    for (double t : {0.0, kPi / 8, kPi / 4, kPi / 2}) {
      const auto [qa, qb] = region_point(FRegionKind::kFreeQuadratic, r, t);
      EXPECT_NEAR(qa * qa + qb * qb, r * r / 2, 1e-15);
      const auto [la, lb] = region_point(FRegionKind::kFreeLinear, r, t);
      EXPECT_NEAR(la + lb, r / 2, 1e-15);
    }
  }
}

TEST(ScanRegion, FreeRegionMaxima) {
  const RegionScan quadratic = scan_region(FRegionKind::kFreeQuadratic, interference_builder());
  EXPECT_NEAR(quadratic.best.value_bits, 0.16, 0.01);
  EXPECT_GE(quadratic.best.value_bits, *std::max_element(quadratic.values.begin(), quadratic.values.end()));
  const RegionScan linear = scan_region(FRegionKind::kFreeLinear, interference_builder());
  EXPECT_NEAR(linear.best.value_bits, 0.024, 0.002);
  EXPECT_LT(linear.best.value_bits, quadratic.best.value_bits);
  EXPECT_EQ(code_of([] { scan_region(FRegionKind::kSingularValuesOfGivenF, interference_builder()); }),
            ErrorCode::kOutOfRange);
}

TEST(MaximizeOverRegion, GivenOperatorUsesSingularValues) {
  const CMatrix f = (pauli::I() + pauli::X() + pauli::Y() + pauli::Z()) * 0.25;
  const auto region = FConstraintRegion::of_operator(f);
  const auto sv = singular_values(f);
  EXPECT_NEAR(std::max(region.a, region.b), sv[0], 1e-14);
  EXPECT_NEAR(maximize_over_region(region, interference_builder()).value_bits,
              reduced_capacity(sv[0], sv[1], interference_builder()).value_bits, 1e-12);
}

// --- general-purpose methods -----------------------------------------------------------

TEST(OrthogonalLowerBound, Examples) {
  const auto id = orthogonal_lower_bound(identity_channel(2));
  EXPECT_NEAR(id.value_bits, 1.0, 1e-9);
  EXPECT_EQ(id.kind, CapacityKind::kLowerBound);
  EXPECT_NEAR(orthogonal_lower_bound(depolarizing_qubit_channel()).value_bits, 0.0, 1e-9);
  EXPECT_NEAR(orthogonal_lower_bound(perfect_transmission_channel()).value_bits, 1.0, 1e-4);
}

TEST(OrthogonalLowerBound, BelowOracle) {
  Rng rng(10);
  OracleOptions options;
  options.restarts = 8;
  for (int trial = 0; trial < 3; ++trial) {
    const QuantumChannel ch = interference_channel(random_admissible_f(rng), ControlState::plus());
    EXPECT_LE(orthogonal_lower_bound(ch).value_bits, oracle_holevo(ch, options).value_bits + 1e-6);
  }
}

TEST(OracleHolevo, IdentityAndDepolarising) {
  OracleOptions options;
  options.restarts = 8;
  EXPECT_NEAR(oracle_holevo(identity_channel(2), options).value_bits, 1.0, 1e-6);
  EXPECT_NEAR(oracle_holevo(depolarizing_qubit_channel(), options).value_bits, 0.0, 1e-9);
}

TEST(OracleHolevo, DeterministicForSeed) {
  const QuantumChannel ch = interference_builder()(0.4, 0.3);
  OracleOptions options;
  options.restarts = 6;
  options.seed = 77;
  EXPECT_EQ(oracle_holevo(ch, options).value_bits, oracle_holevo(ch, options).value_bits);
}

TEST(ControlStateDominance, InterferenceChannel) {
  const CMatrix f = (pauli::I() + pauli::X() + pauli::Y() + pauli::Z()) * 0.25;
  OracleOptions options;
  options.restarts = 8;
  EXPECT_TRUE(control_state_dominance_check(
      [&](const ControlState& omega) { return interference_channel(f, omega); }, 3, options));
}

TEST(CapacityResult, UnknownCoordinate) {
  const CapacityResult r{0.5, {{"q", 0.25}}, CapacityKind::kExactCapacity};
  EXPECT_EQ(r.coordinate("q"), 0.25);
  EXPECT_EQ(code_of([&] { r.coordinate("z"); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(to_string(CapacityKind::kUpperBound), "upper_bound");
}

}  // namespace
}  // namespace latentlink
