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

#include "latentlink/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>

#include "latentlink/channel.hpp"
#include "latentlink/error.hpp"
#include "latentlink/experiments.hpp"
#include "latentlink/random.hpp"

namespace latentlink {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

Check near(std::string label, double target, double achieved, double tol, bool headline = false) {
  return {std::move(label), fmt(target), fmt(achieved), "+-" + fmt(tol, 3),
          std::abs(achieved - target) <= tol, headline};
}

Check at_most(std::string label, double bound, double achieved, bool headline = false) {
  return {std::move(label), "<= " + fmt(bound, 10), fmt(achieved, 4), "-", achieved <= bound,
          headline};
}

Check holds(std::string label, bool ok, std::string achieved, bool headline = false) {
  return {std::move(label), "true", std::move(achieved), "-", ok, headline};
}

Rng seeded(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

std::array<double, 4> random_phases(Rng& rng) {
  return {random_phase(rng), random_phase(rng), random_phase(rng), random_phase(rng)};
}

QuantumChannel marginal_channel(const CorrelatedChannelSpec& spec) {
  std::vector<CMatrix> vs;
  for (const auto& u : spec.unitaries()) vs.push_back(u.v);
  const auto p = spec.first_marginal();
  return random_unitary_channel(vs, p);
}

double min_choi_eigenvalue(const QuantumChannel& ch) { return hermitian_eigenvalues(choi(ch)).back(); }

class Runner {
 public:
  explicit Runner(const ReproduceOptions& options)
      : options_(options), step_(options.fine ? kFineGridStep : kDefaultGridStep) {}

  std::vector<Check> run(std::size_t id) {
    switch (id) {
      case 1: return single_uncorrelated();
      case 2: return perfect_transmission();
      case 3: return analytic_ceiling();
      case 4: return network_uncorrelated();
      case 5: return switch_reproduction();
      case 6: return network_correlated();
      case 7: return dephasing();
      case 8: return oracle_equivalence();
      case 9: return structural();
      case 10: return identity_null();
      default: throw Error(ErrorCode::kOutOfRange, "no criterion " + std::to_string(id));
    }
  }

 private:
  const ScanResult& single_scan() {
    if (!single_scan_) single_scan_ = scan_single_uncorrelated(step_);
    return *single_scan_;
  }

  std::vector<Check> single_uncorrelated() {
    return {near("max capacity (bits)", 0.16, single_scan().best.value_bits, 0.01, true)};
  }

  std::vector<Check> perfect_transmission() {
    const QuantumChannel ch = perfect_transmission_channel();
    const double bound = orthogonal_lower_bound(ch).value_bits;
    double deviation = 0.0;
    for (const double sign : {1.0, -1.0}) {
      const CMatrix pm = CMatrix(2, 2, {0.5, 0.5 * sign, 0.5 * sign, 0.5});
      const CMatrix expected = kron(CMatrix::identity(2) * 0.5, pm);
      deviation = std::max(deviation, max_abs_diff(ch.apply(pm), expected));
    }
    return {near("orthogonal bound (bits)", 1.0, bound, 1e-4, true),
            at_most("outputs for |+>, |-> vs (I/2)(x)|+-><+-|", 1e-10, deviation)};
  }

  std::vector<Check> analytic_ceiling() {
    return {at_most("largest scan value (bits)", 0.5 + 1e-9, single_scan().grid_max(), true),
            near("bound at ||F|| = 1/sqrt2", 0.5, analytic_upper_bound(1 / std::numbers::sqrt2, 2),
                 1e-12)};
  }

  std::vector<Check> network_uncorrelated() {
    const double ru = scan_network_uncorrelated(step_, Realization::kRandomUnitary).best.value_bits;
    const double arb = scan_network_uncorrelated(step_, Realization::kArbitrary).best.value_bits;
    return {near("random-unitary max (bits)", 0.018, ru, 0.002, true),
            near("arbitrary max (bits)", 0.024, arb, 0.002, true)};
  }

  std::vector<Check> switch_reproduction() {
    const double value = switch_capacity(options_.seed).value_bits;
    Rng rng = seeded(options_.seed, 5);
    const auto delta = perfectly_correlated_joint(std::vector<double>(4, 0.25));
    double deviation = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = pauli_realization(random_phases(rng)).with_joint(delta);
      const auto b = pauli_realization(random_phases(rng)).with_joint(delta);
      // The |0> branch applies line A first.
      const QuantumChannel sw =
          quantum_switch(marginal_channel(b), marginal_channel(a), ControlState::plus());
      deviation = std::max(deviation, channel_distance(effective_network(a, b, ControlState::plus()), sw));
    }
    return {near("switch capacity (bits)", 0.049, value, 0.002, true),
            at_most("Choi distance to switch, 10 phase vectors", 1e-10, deviation)};
  }

  std::vector<Check> network_correlated() {
    const ScanResult scan = scan_network_correlated(step_);
    double deviation = 0.0;
    for (const auto& col : scan.columns) {
      if (col.name == "choi_deviation") {
        deviation = *std::max_element(col.values.begin(), col.values.end());
      }
    }
    return {near("max lower bound (bits)", 0.31, scan.best.value_bits, 0.01, true),
            at_most("full vs closed-form Choi distance", 1e-10, deviation)};
  }

  std::vector<Check> dephasing() {
    std::vector<double> s;
    for (int k = 0; k <= 10; ++k) s.push_back(0.05 * k);
    s.back() = 0.5;
    const DephasingCurves curves = dephasing_curve(s);
    auto rise = [](const std::vector<double>& v) {
      double worst = 0.0;
      for (std::size_t i = 1; i < v.size(); ++i) worst = std::max(worst, v[i] - v[i - 1]);
      return worst;
    };
    const auto& blue = curves.uncorrelated.values;
    const auto& orange = curves.correlated.values;
    return {near("uncorrelated at s = 0 (bits)", 0.16, blue.front(), 0.01, true),
            near("correlated at s = 0 (bits)", 1.0, orange.front(), 1e-3, true),
            near("uncorrelated at s = 1/2 (bits)", 0.0, blue.back(), 1e-6),
            near("correlated at s = 1/2 (bits)", 0.0, orange.back(), 1e-6),
            at_most("largest increase, uncorrelated", 0.0, rise(blue)),
            at_most("largest increase, correlated", 0.0, rise(orange))};
  }

  std::vector<Check> oracle_equivalence() {
    Rng rng = seeded(options_.seed, 8);
    OracleOptions opts;
    opts.seed = options_.seed;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const auto spec = pauli_realization(random_phases(rng));
      const auto sv = singular_values(interference_operator(spec));
      const double reduced = reduced_capacity(sv[0], sv[1], interference_builder()).value_bits;
      const double oracle = oracle_holevo(effective_single(spec, ControlState::plus()), opts).value_bits;
      worst = std::max(worst, std::abs(reduced - oracle));
    }
    return {at_most("largest |reduced - oracle| over 20 phase vectors", 1e-3, worst, true)};
  }

  std::vector<Check> structural() {
    Rng rng = seeded(options_.seed, 9);
    const std::array<CMatrix, 4> paulis{pauli::I(), pauli::X(), pauli::Y(), pauli::Z()};
    double tp_defect = 0.0;
    double choi_min = 0.0;
    double f_norm = 0.0;
    double gauge = 0.0;
    std::size_t ppt_failures = 0;
    std::optional<CorrelatedChannelSpec> first;
    for (int trial = 0; trial < 1000; ++trial) {
      // Any W1 V_m W2 over the Paulis keeps the marginal channel depolarising.
      const CMatrix w1 = random_unitary(2, rng);
      const CMatrix w2 = random_unitary(2, rng);
      std::vector<VacuumExtendedUnitary> us;
      for (const auto& p : paulis) us.emplace_back(w1 * p * w2, random_phase(rng));
      const CorrelatedChannelSpec uniform(us, uniform_joint(4));
      std::vector<std::size_t> perm{0, 1, 2, 3};
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto correlated = uniform.with_joint(permutation_joint(PermutationCorrelation(perm), 4));
      const ControlState omega(CMatrix::projector(random_pure_state(2, rng)));
      if (!first) first = uniform;

      const std::array<QuantumChannel, 3> channels{effective_single(uniform, omega),
                                                   effective_single(correlated, omega),
                                                   effective_network(correlated, uniform, omega)};
      for (const auto& ch : channels) {
        tp_defect = std::max(tp_defect, ch.trace_preservation_defect());
        choi_min = std::min(choi_min, min_choi_eigenvalue(ch));
      }
      const CMatrix f = interference_operator(uniform);
      f_norm = std::max(f_norm, operator_norm(f));
      if (!block_ppt_check(f)) ++ppt_failures;

      const double c1 = random_phase(rng);
      const double c2 = random_phase(rng);
      gauge = std::max(gauge, channel_distance(effective_single(uniform.with_phase_offset(c1), omega),
                                               channels[0]));
      gauge = std::max(gauge, channel_distance(effective_single(correlated.with_phase_offset(c1), omega),
                                               channels[1]));
      gauge = std::max(gauge, channel_distance(effective_network(correlated.with_phase_offset(c1),
                                                                 uniform.with_phase_offset(c2), omega),
                                               channels[2]));
    }
    OracleOptions opts;
    opts.seed = options_.seed;
    const CorrelatedChannelSpec spec = *first;
    const bool dominance_uncorrelated = control_state_dominance_check(
        [&](const ControlState& w) { return effective_single(spec, w); }, 20, opts);
    const auto perfect_spec = pauli_realization({0.0, 0.0, 0.0, kPi / 2})
                                  .with_joint(permutation_joint(swap_pairs_permutation(), 4));
    const bool dominance_correlated = control_state_dominance_check(
        [&](const ControlState& w) { return effective_single(perfect_spec, w); }, 20, opts);
    const bool ok = tp_defect <= 1e-9 && choi_min >= -1e-9 &&
                    f_norm <= 1 / std::numbers::sqrt2 + 1e-12 && ppt_failures == 0 &&
                    gauge <= 1e-12 && dominance_uncorrelated && dominance_correlated;
    return {holds("all structural checks, 1000 configurations", ok, ok ? "true" : "false", true),
            at_most("trace-preservation defect", 1e-9, tp_defect),
            {"smallest Choi eigenvalue", ">= -1e-09", fmt(choi_min, 4), "-", choi_min >= -1e-9, false},
            at_most("largest ||F||", 1 / std::numbers::sqrt2 + 1e-12, f_norm),
            holds("block PPT", ppt_failures == 0, std::to_string(ppt_failures) + " failures"),
            at_most("phase-gauge Choi distance", 1e-12, gauge),
            holds("control dominance, uncorrelated, 20 samples", dominance_uncorrelated,
                  dominance_uncorrelated ? "true" : "false"),
            holds("control dominance, correlated, 20 samples", dominance_correlated,
                  dominance_correlated ? "true" : "false")};
  }

  std::vector<Check> identity_null() {
    Rng rng = seeded(options_.seed, 10);
    const auto spec = pauli_realization(random_phases(rng))
                          .with_joint(permutation_joint(PermutationCorrelation::identity(4), 4));
    const QuantumChannel ch = effective_single(spec, ControlState::plus());
    const CMatrix reference = ch.apply(CMatrix::diagonal({1.0, 0.0}));
    double spread = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      spread = std::max(spread, max_abs_diff(ch.apply(random_density_matrix(2, rng)), reference));
    }
    OracleOptions opts;
    opts.seed = options_.seed;
    const double oracle = oracle_holevo(ch, opts).value_bits;
    return {near("oracle capacity (bits)", 0.0, oracle, 1e-6, true),
            at_most("output spread over 50 inputs", 1e-10, spread)};
  }

  ReproduceOptions options_;
  double step_;
  std::optional<ScanResult> single_scan_;
};

}  // namespace

bool CriterionOutcome::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<std::string> criterion_names() {
  return {"single-uncorrelated", "perfect-transmission", "analytic-ceiling",
          "network-uncorrelated", "switch",  "network-correlated",
          "dephasing",         "oracle-equivalence",   "structural",
          "identity-null"};
}

std::vector<CriterionOutcome> run_reproduction(const ReproduceOptions& options) {
  const auto names = criterion_names();
  for (const auto& wanted : options.only) {
    if (std::find(names.begin(), names.end(), wanted) == names.end()) {
      throw Error(ErrorCode::kOutOfRange, "unknown criterion '" + wanted + "'");
    }
  }
  Runner runner(options);
  std::vector<CriterionOutcome> outcomes;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), names[i]) == options.only.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    CriterionOutcome outcome;
    outcome.id = i + 1;
    outcome.name = names[i];
    outcome.checks = runner.run(i + 1);
    outcome.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

void print_reproduction_table(const std::vector<CriterionOutcome>& outcomes, std::ostream& out,
                              bool verbose) {
  char line[256];
  std::snprintf(line, sizeof line, "%-4s %-2s %-21s %-44s %-12s %-12s %-10s %s\n", "", "#",
                "criterion", "check", "target", "achieved", "tolerance", "time");
  out << line;
  for (const auto& o : outcomes) {
    bool first = true;
    for (const auto& c : o.checks) {
      if (!verbose && !c.headline) continue;
      const char* status = verbose ? (c.pass ? "PASS" : "FAIL") : (o.pass() ? "PASS" : "FAIL");
      std::snprintf(line, sizeof line, "%-4s %-2zu %-21s %-44s %-12s %-12s %-10s %s\n", status, o.id,
                    o.name.c_str(), c.label.c_str(), c.target.c_str(), c.achieved.c_str(),
                    c.tolerance.c_str(), first ? (fmt(o.seconds, 3) + "s").c_str() : "");
      out << line;
      first = false;
    }
  }
}

}  // namespace latentlink
