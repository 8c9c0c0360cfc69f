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
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "latentlink/capacity.hpp"
#include "latentlink/channel.hpp"
#include "latentlink/error.hpp"
#include "latentlink/experiments.hpp"
#include "test_support.hpp"

namespace latentlink {
namespace {

using testing::kPi;
constexpr double kCoarse = kPi / 4;

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

const ScanResult& coarse_single() {
  static const ScanResult r = scan_single_uncorrelated(kCoarse);
  return r;
}

TEST(PhaseGrid, Sizes) {
  EXPECT_EQ(phase_grid_size(kPi / 8), 16u);
  EXPECT_EQ(phase_grid_size(kPi / 32), 64u);
  EXPECT_THROW(phase_grid_size(0.3), Error);
  EXPECT_THROW(phase_grid_size(-kPi / 8), Error);
  EXPECT_THROW(phase_grid_size(2 * kPi / 2048), Error);
}

TEST(ScanResult, RowMajorCoordinates) {
  const ScanResult& r = coarse_single();
  ASSERT_EQ(r.axes.size(), 3u);
  EXPECT_EQ(r.axes[0].name, "phi1");
  EXPECT_EQ(r.point_count(), 512u);
  EXPECT_EQ(r.values.size(), 512u);
  EXPECT_EQ(r.coordinates(1), (std::vector<double>{0.0, 0.0, kCoarse}));
  EXPECT_EQ(r.coordinates(8), (std::vector<double>{0.0, kCoarse, 0.0}));
  EXPECT_EQ(r.coordinates(64), (std::vector<double>{kCoarse, 0.0, 0.0}));
}

TEST(ScanSingleUncorrelated, PointsMatchIndependentPipeline) {
  const ScanResult& r = coarse_single();
  for (std::size_t idx : {0u, 5u, 77u, 300u, 511u}) {
    const auto c = r.coordinates(idx);
    const CMatrix f = interference_operator(pauli_realization({0.0, c[0], c[1], c[2]}));
    const auto sv = singular_values(f);
    EXPECT_NEAR(r.values[idx], reduced_capacity(sv[0], sv[1], interference_builder()).value_bits, 1e-9);
  }
}

TEST(ScanSingleUncorrelated, BestAtLeastGridAndBounded) {
  const ScanResult& r = coarse_single();
  EXPECT_GE(r.best.value_bits, r.grid_max());
  EXPECT_LE(r.best.value_bits, 0.5);
  EXPECT_GT(r.best.value_bits, 0.1);
  EXPECT_EQ(r.meta.scenario, "single-uncorrelated");
  for (double v : r.values) EXPECT_GE(v, 0.0);
}

TEST(ScanSingleUncorrelated, Deterministic) {
  const ScanResult again = scan_single_uncorrelated(kCoarse);
  EXPECT_EQ(again.values, coarse_single().values);
  EXPECT_EQ(again.best.value_bits, coarse_single().best.value_bits);
}

TEST(ScanSingleCorrelated, SwapPairsReachesOneBit) {
  const ScanResult r = scan_single_correlated(kCoarse);
  EXPECT_NEAR(r.best.value_bits, 1.0, 1e-4);
  EXPECT_EQ(r.point_count(), 64u);
}

TEST(ScanSingleCorrelated, IdentityPermutationCarriesNothing) {
  const ScanResult r = scan_single_correlated(kCoarse, PermutationCorrelation::identity(4), false);
  for (double v : r.values) EXPECT_NEAR(v, 0.0, 1e-9);
}

TEST(ScanNetworkUncorrelated, RandomUnitaryBelowSingleLine) {
  const ScanResult r = scan_network_uncorrelated(kCoarse);
  EXPECT_EQ(r.point_count(), 512u);
  EXPECT_LT(r.best.value_bits, coarse_single().best.value_bits);
  EXPECT_NEAR(r.best.value_bits, 0.018, 0.002);
}

TEST(ScanNetworkUncorrelated, ArbitraryRealization) {
  const ScanResult r = scan_network_uncorrelated(kCoarse, Realization::kArbitrary);
  ASSERT_EQ(r.axes.size(), 2u);
  EXPECT_EQ(r.axes[0].name, "radius");
  EXPECT_NEAR(r.best.value_bits, 0.024, 0.002);
}

TEST(ScanNetworkCorrelated, CrossCheckColumn) {
  const ScanResult r = scan_network_correlated(kCoarse, false);
  ASSERT_EQ(r.columns.size(), 1u);
  EXPECT_EQ(r.columns[0].name, "choi_deviation");
  for (double d : r.columns[0].values) EXPECT_LE(d, 1e-10);
  const auto c = r.coordinates(9);
  const QuantumChannel ch = correlated_network_closed_form(c[0], c[1], ControlState::plus());
  EXPECT_NEAR(r.values[9], orthogonal_lower_bound(ch, false).value_bits, 1e-12);
  const bool noted = std::any_of(r.meta.notes.begin(), r.meta.notes.end(),
                                 [](const auto& n) { return n.first == "crosscheck_max_choi_deviation"; });
  EXPECT_TRUE(noted);
}

TEST(SwitchCapacity, DepolarisingPair) {
  const CapacityResult r = switch_capacity();
  EXPECT_NEAR(r.value_bits, 0.049, 0.002);
  EXPECT_GE(r.value_bits, r.coordinate("orthogonal_bits"));
  EXPECT_GE(r.value_bits, r.coordinate("oracle_bits"));
}

TEST(DephasingCurve, EndpointsAndShape) {
  const std::vector<double> s{0.0, 0.1, 0.25, 0.4, 0.5};
  const DephasingCurves curves = dephasing_curve(s);
  const auto& blue = curves.uncorrelated.values;
  const auto& orange = curves.correlated.values;
  ASSERT_EQ(blue.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_NEAR(orange[i], 1.0 - binary_entropy(s[i]), 1e-4) << s[i];
    if (i > 0) {
      EXPECT_LE(blue[i], blue[i - 1]);
      EXPECT_LE(orange[i], orange[i - 1]);
    }
  }
  EXPECT_NEAR(blue.back(), 0.0, 1e-6);
  EXPECT_NEAR(blue.front(), coarse_single().best.value_bits, 0.01);
}

TEST(DephasingCurve, RejectsBadValues) {
  EXPECT_THROW(dephasing_curve(std::vector<double>{0.0, 0.6}), Error);
  EXPECT_THROW(dephasing_curve(std::vector<double>{0.3, 0.2}), Error);
}

TEST(FNormScatter, RespectsAnalyticBound) {
  const FNormScatter scatter = fnorm_scatter(kCoarse);
  const auto& f = scatter.f_series;
  ASSERT_EQ(f.columns.at(0).name, "f_norm");
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double norm = std::min(f.columns[0].values[i], 1 / std::numbers::sqrt2);
    EXPECT_LE(f.values[i], analytic_upper_bound(norm, 2) + 1e-9);
  }
  const auto& f2 = scatter.f2_series;
  ASSERT_EQ(f2.columns.size(), 2u);
  for (std::size_t i = 0; i < f2.values.size(); ++i) {
    EXPECT_LE(f2.columns[1].values[i], f2.columns[0].values[i] + 1e-12);
  }
}

TEST(WriteCsv, HeaderRowsAndFormat) {
  std::ostringstream out;
  write_csv(coarse_single(), out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "phi1,phi2,phi3,capacity_bits");
  std::getline(in, line);
  char expected[64];
  std::snprintf(expected, sizeof expected, "0,0,0,%.12g", coarse_single().values[0]);
  EXPECT_EQ(line, expected);
  std::size_t rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, coarse_single().point_count());
  std::ostringstream again;
  write_csv(scan_single_uncorrelated(kCoarse), again);
  EXPECT_EQ(out.str(), again.str());
}

TEST(WriteCsv, ExtraColumnsFollowCapacity) {
  ScanResult r;
  r.axes = {{"s", {0.0, 0.5}}};
  r.values = {1.0, 0.25};
  r.columns = {{"extra", {2.0, 3.0}}};
  std::ostringstream out;
  write_csv(r, out);
  EXPECT_EQ(out.str(), "s,capacity_bits,extra\n0,1,2\n0.5,0.25,3\n");
}

TEST(WriteMetaJson, Fields) {
  std::ostringstream out;
  write_meta_json(coarse_single(), out, "2026-01-01T00:00:00Z");
  const auto doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc.at("scenario"), "single-uncorrelated");
  EXPECT_EQ(doc.at("timestamp"), "2026-01-01T00:00:00Z");
  EXPECT_EQ(doc.at("seed").get<std::uint64_t>(), kDefaultSeed);
  EXPECT_TRUE(doc.contains("axes"));
}

}  // namespace
}  // namespace latentlink
