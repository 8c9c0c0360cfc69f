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

#include "latentlink/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <map>
#include <ostream>

#include "latentlink/error.hpp"
#include "latentlink/optimize.hpp"
#include "latentlink/parallel.hpp"

namespace latentlink {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> phase_axis(double step) {
  const std::size_t n = phase_grid_size(step);
  std::vector<double> axis(n);
  for (std::size_t k = 0; k < n; ++k) axis[k] = static_cast<double>(k) * step;
  return axis;
}


using PhaseEvaluator = std::function<CapacityResult(std::span<const double>)>;

/// Coordinate refinement of the phases around `start`; returns the better of
/// the start value and the refined value with phase names appended.
CapacityResult refine_phases(const PhaseEvaluator& eval, std::vector<double> start,
                             CapacityResult at_start, double step,
                             const std::vector<std::string>& names, bool refine) {
  CapacityResult best = std::move(at_start);
  std::vector<double> phases = start;
  if (refine) {
    const Objective objective = [&](std::span<const double> v) { return eval(v).value_bits; };
    CoordinateRefineOptions opts;
    opts.bracket.assign(start.size(), step);
    opts.lower.assign(start.size(), -2 * kTwoPi);
    opts.upper.assign(start.size(), 2 * kTwoPi);
    opts.max_passes = 16;
    const OptimumPoint refined = coordinate_refine(objective, start, opts);
    if (refined.value > best.value_bits) {
      CapacityResult candidate = eval(refined.x);
      if (candidate.value_bits > best.value_bits) {
        best = std::move(candidate);
        phases = refined.x;
      }
    }
  }
  for (std::size_t i = 0; i < names.size(); ++i) best.argmax.emplace_back(names[i], phases[i]);
  return best;
}

ScanResult finish_grid(ScanResult result, const std::vector<CapacityResult>& per_point,
                       const PhaseEvaluator& eval, double step, bool refine) {
  for (const auto& r : per_point) result.values.push_back(r.value_bits);
  const std::size_t best_idx = first_argmax(result.values);
  std::vector<std::string> names;
  for (const auto& axis : result.axes) names.push_back(axis.name);
  result.best = refine_phases(eval, result.coordinates(best_idx), per_point[best_idx], step, names,
                              refine);
  result.best.kind = result.meta.kind;
  return result;
}

/// phi0 = 0 and (phi1, phi2, phi3) on the grid, capacity of C_{omega,F^power}.
/// Points sharing singular values (to 1e-10) share one evaluation.
ScanResult uncorrelated_phase_scan(double step, int power, bool refine) {
  const auto axis = phase_axis(step);
  const std::size_t n = axis.size();
  const DiagonalChannelBuilder build = interference_builder();

  auto operator_at = [power](std::span<const double> p) {
    const CMatrix f = interference_operator(pauli_realization({0.0, p[0], p[1], p[2]}));
    return std::pair<CMatrix, CMatrix>{f, power == 1 ? f : f * f};
  };
  auto evaluate = [&](std::span<const double> p) {
    const auto sv = singular_values(operator_at(p).second);
    return reduced_capacity(sv[0], sv[1], build, true, CapacityKind::kExactCapacity);
  };

  ScanResult result;
  result.axes = {{"phi1", axis}, {"phi2", axis}, {"phi3", axis}};
  const std::size_t count = n * n * n;

  std::vector<double> f_norm(count), power_norm(count);
  std::vector<std::size_t> slot(count);
  std::vector<std::array<double, 2>> unique;
  std::map<std::pair<long long, long long>, std::size_t> seen;
  for (std::size_t idx = 0; idx < count; ++idx) {
    const std::vector<double> p = result.coordinates(idx);
    const auto [f, fp] = operator_at(p);
    const auto sv = singular_values(fp);
    f_norm[idx] = operator_norm(f);
    power_norm[idx] = sv[0];
    const std::pair<long long, long long> key{std::llround(sv[0] * 1e10), std::llround(sv[1] * 1e10)};
    const auto [it, inserted] = seen.emplace(key, unique.size());
    if (inserted) unique.push_back({sv[0], sv[1]});
    slot[idx] = it->second;
  }
  const auto evaluated = parallel_map(unique.size(), [&](std::size_t u) {
    return reduced_capacity(unique[u][0], unique[u][1], build, true, CapacityKind::kExactCapacity);
  });
  std::vector<CapacityResult> per_point(count);
  for (std::size_t idx = 0; idx < count; ++idx) per_point[idx] = evaluated[slot[idx]];

  if (power == 1) {
    result.columns = {{"f_norm", f_norm}};
  } else {
    std::vector<double> squared(count);
    for (std::size_t idx = 0; idx < count; ++idx) squared[idx] = f_norm[idx] * f_norm[idx];
    result.columns = {{"f_norm_squared", squared}, {"f2_norm", power_norm}};
  }
  result.meta.correlation = "uncorrelated";
  result.meta.permutation = "";
  result.meta.realization = "random_unitary";
  result.meta.grid_step = step;
  result.meta.kind = CapacityKind::kExactCapacity;
  result.meta.notes.emplace_back("distinct_operators", std::to_string(unique.size()));
  return finish_grid(std::move(result), per_point, evaluate, step, refine);
}

/// phi0 = phi2 = 0, (phi1, phi3) on the grid.
CorrelatedChannelSpec correlated_pauli_spec(double phi1, double phi3,
                                            const PermutationCorrelation& sigma) {
  return pauli_realization({0.0, phi1, 0.0, phi3}).with_joint(permutation_joint(sigma, 4));
}

std::string permutation_label(const PermutationCorrelation& sigma) {
  std::string label;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i != 0) label += ' ';
    label += std::to_string(sigma(i));
  }
  return label;
}

void validate_s_values(std::span<const double> s_values) {
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    if (!(s_values[i] >= 0.0 && s_values[i] <= 0.5)) {
      throw Error(ErrorCode::kOutOfRange, "dephasing s must lie in [0, 1/2]");
    }
    if (i > 0 && s_values[i] < s_values[i - 1]) {
      throw Error(ErrorCode::kOutOfRange, "dephasing s values must be ascending");
    }
  }
}

std::string format_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::size_t ScanResult::point_count() const {
  std::size_t n = 1;
  for (const auto& axis : axes) n *= axis.values.size();
  return n;
}

std::vector<double> ScanResult::coordinates(std::size_t index) const {
  std::vector<double> coords(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    const std::size_t len = axes[k].values.size();
    coords[k] = axes[k].values[index % len];
    index /= len;
  }
  return coords;
}

double ScanResult::grid_max() const {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

std::size_t phase_grid_size(double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::kOutOfRange, "grid step must be positive");
  }
  const double ratio = kTwoPi / step;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, rounded) || rounded < 1.0 || rounded > 1024) {
    throw Error(ErrorCode::kOutOfRange, "grid step must divide 2pi into at most 1024 points");
  }
  return static_cast<std::size_t>(rounded);
}

PermutationCorrelation swap_pairs_permutation() { return PermutationCorrelation({1, 0, 3, 2}); }

QuantumChannel perfect_transmission_channel(const ControlState& omega) {
  const auto spec = pauli_realization({0.0, 0.0, 0.0, kPi / 2})
                        .with_joint(permutation_joint(swap_pairs_permutation(), 4));
  return effective_single(spec, omega);
}

ScanResult scan_single_uncorrelated(double grid_step, bool refine) {
  ScanResult result = uncorrelated_phase_scan(grid_step, 1, refine);
  result.columns.clear();
  result.meta.scenario = "single-uncorrelated";
  return result;
}

ScanResult scan_single_correlated(double grid_step, const PermutationCorrelation& sigma,
                                  bool refine) {
  if (sigma.size() != 4) throw Error(ErrorCode::kInvalidSpec, "permutation must act on 4 indices");
  const auto axis = phase_axis(grid_step);
  ScanResult result;
  result.axes = {{"phi1", axis}, {"phi3", axis}};
  const PhaseEvaluator evaluate = [&](std::span<const double> p) {
    return orthogonal_lower_bound(
        effective_single(correlated_pauli_spec(p[0], p[1], sigma), ControlState::plus()), refine);
  };
  const auto per_point = parallel_map(result.point_count(), [&](std::size_t idx) {
    return evaluate(result.coordinates(idx));
  });
  result.meta.scenario = "single-correlated";
  result.meta.correlation = "permutation";
  result.meta.permutation = permutation_label(sigma);
  result.meta.realization = "random_unitary";
  result.meta.grid_step = grid_step;
  result.meta.kind = CapacityKind::kLowerBound;
  return finish_grid(std::move(result), per_point, evaluate, grid_step, refine);
}

ScanResult scan_network_uncorrelated(double grid_step, Realization realization, bool refine) {
  if (realization == Realization::kRandomUnitary) {
    ScanResult result = uncorrelated_phase_scan(grid_step, 2, refine);
    result.columns.clear();
    result.meta.scenario = "network-uncorrelated";
    return result;
  }
  const RegionScan region = scan_region(FRegionKind::kFreeLinear, interference_builder(), refine);
  ScanResult result;
  result.axes = {{"radius", region.radii}, {"angle", region.angles}};
  result.values = region.values;
  std::vector<double> g, h;
  for (std::size_t idx = 0; idx < result.values.size(); ++idx) {
    const auto c = result.coordinates(idx);
    const auto [gi, hi] = region_point(FRegionKind::kFreeLinear, c[0], c[1]);
    g.push_back(gi);
    h.push_back(hi);
  }
  result.columns = {{"g", g}, {"h", h}};
  result.best = region.best;
  result.meta.scenario = "network-uncorrelated";
  result.meta.correlation = "uncorrelated";
  result.meta.realization = "arbitrary";
  result.meta.kind = CapacityKind::kExactCapacity;
  result.best.kind = CapacityKind::kExactCapacity;
  return result;
}

ScanResult scan_network_correlated(double grid_step, bool refine) {
  const auto axis = phase_axis(grid_step);
  const PermutationCorrelation sigma = swap_pairs_permutation();
  ScanResult result;
  result.axes = {{"phi1", axis}, {"phi3", axis}};
  const PhaseEvaluator evaluate = [&](std::span<const double> p) {
    return orthogonal_lower_bound(correlated_network_closed_form(p[0], p[1], ControlState::plus()),
                                  refine);
  };
  struct Point {
    CapacityResult capacity;
    double deviation;
  };
  const auto points = parallel_map(result.point_count(), [&](std::size_t idx) {
    const auto p = result.coordinates(idx);
    const auto spec = correlated_pauli_spec(p[0], p[1], sigma);
    const double deviation =
        channel_distance(effective_network(spec, spec, ControlState::plus()),
                         correlated_network_closed_form(p[0], p[1], ControlState::plus()));
    return Point{evaluate(p), deviation};
  });
  std::vector<CapacityResult> per_point;
  std::vector<double> deviations;
  for (const auto& pt : points) {
    per_point.push_back(pt.capacity);
    deviations.push_back(pt.deviation);
  }
  result.columns = {{"choi_deviation", deviations}};
  result.meta.scenario = "network-correlated";
  result.meta.correlation = "permutation";
  result.meta.permutation = permutation_label(sigma);
  result.meta.realization = "random_unitary";
  result.meta.grid_step = grid_step;
  result.meta.kind = CapacityKind::kLowerBound;
  result.meta.notes.emplace_back("crosscheck_max_choi_deviation",
                                 format_g(*std::max_element(deviations.begin(), deviations.end())));
  return finish_grid(std::move(result), per_point, evaluate, grid_step, refine);
}

CapacityResult switch_capacity(std::uint64_t seed, const ControlState& omega) {
  const QuantumChannel dep = depolarizing_qubit_channel();
  const QuantumChannel ch = quantum_switch(dep, dep, omega);
  OracleOptions opts;
  opts.seed = seed;
  const CapacityResult oracle = oracle_holevo(ch, opts);
  const CapacityResult orthogonal = orthogonal_lower_bound(ch);
  CapacityResult best = oracle.value_bits >= orthogonal.value_bits ? oracle : orthogonal;
  best.argmax.emplace_back("oracle_bits", oracle.value_bits);
  best.argmax.emplace_back("orthogonal_bits", orthogonal.value_bits);
  best.kind = CapacityKind::kExactCapacity;
  return best;
}

DephasingCurves dephasing_curve(std::span<const double> s_values) {
  validate_s_values(s_values);
  const std::vector<double> s_axis(s_values.begin(), s_values.end());
  const QuantumChannel perfect = perfect_transmission_channel();
  struct Point {
    CapacityResult uncorrelated;
    CapacityResult correlated;
  };
  const auto points = parallel_map(s_axis.size(), [&](std::size_t i) {
    const double s = s_axis[i];
    const DiagonalChannelBuilder build = [s](double a, double b) {
      return dephase_control(interference_channel(CMatrix::diagonal({a, b}), ControlState::plus()),
                             s);
    };
    return Point{scan_region(FRegionKind::kFreeQuadratic, build).best,
                 orthogonal_lower_bound(dephase_control(perfect, s))};
  });

  auto assemble = [&](bool uncorrelated) {
    ScanResult r;
    r.axes = {{"s", s_axis}};
    std::vector<CapacityResult> per_point;
    for (const auto& pt : points) per_point.push_back(uncorrelated ? pt.uncorrelated : pt.correlated);
    for (const auto& c : per_point) r.values.push_back(c.value_bits);
    const std::size_t best_idx = first_argmax(r.values);
    r.best = per_point[best_idx];
    r.best.argmax.emplace_back("s", s_axis[best_idx]);
    r.meta.scenario = uncorrelated ? "dephasing-uncorrelated" : "dephasing-correlated";
    r.meta.correlation = uncorrelated ? "uncorrelated" : "permutation";
    r.meta.permutation = uncorrelated ? "" : permutation_label(swap_pairs_permutation());
    r.meta.realization = uncorrelated ? "arbitrary" : "random_unitary";
    r.meta.kind = uncorrelated ? CapacityKind::kExactCapacity : CapacityKind::kLowerBound;
    r.best.kind = r.meta.kind;
    return r;
  };
  return {assemble(true), assemble(false)};
}

FNormScatter fnorm_scatter(double grid_step) {
  FNormScatter out{uncorrelated_phase_scan(grid_step, 1, false),
                   uncorrelated_phase_scan(grid_step, 2, false)};
  out.f_series.meta.scenario = "fnorm-single";
  out.f2_series.meta.scenario = "fnorm-network";
  return out;
}

void write_csv(const ScanResult& result, std::ostream& out) {
  for (const auto& axis : result.axes) out << axis.name << ',';
  out << "capacity_bits";
  for (const auto& col : result.columns) out << ',' << col.name;
  out << '\n';
  for (std::size_t idx = 0; idx < result.values.size(); ++idx) {
    for (double c : result.coordinates(idx)) out << format_g(c) << ',';
    out << format_g(result.values[idx]);
    for (const auto& col : result.columns) out << ',' << format_g(col.values[idx]);
    out << '\n';
  }
}

void write_meta_json(const ScanResult& result, std::ostream& out, const std::string& timestamp) {
  using nlohmann::json;
  json doc;
  const ScanMeta& m = result.meta;
  doc["scenario"] = m.scenario;
  doc["correlation"] = m.correlation;
  doc["permutation"] = m.permutation;
  doc["realization"] = m.realization;
  doc["control_state"] = m.control_state;
  doc["dephasing"] = m.dephasing ? json(*m.dephasing) : json(nullptr);
  doc["grid_step"] = m.grid_step ? json(*m.grid_step) : json(nullptr);
  doc["seed"] = m.seed;
  doc["kind"] = std::string(to_string(m.kind));
  json notes = json::object();
  for (const auto& [k, v] : m.notes) notes[k] = v;
  doc["notes"] = notes;
  json axes = json::array();
  for (const auto& axis : result.axes) {
    axes.push_back({{"name", axis.name}, {"points", axis.values.size()}});
  }
  doc["axes"] = axes;
  doc["points"] = result.values.size();
  doc["grid_max_bits"] = result.grid_max();
  json argmax = json::object();
  for (const auto& [k, v] : result.best.argmax) argmax[k] = v;
  doc["best"] = {{"value_bits", result.best.value_bits},
                 {"kind", std::string(to_string(result.best.kind))},
                 {"argmax", argmax}};
  doc["timestamp"] = timestamp;
  out << doc.dump(2) << '\n';
}

}  // namespace latentlink
