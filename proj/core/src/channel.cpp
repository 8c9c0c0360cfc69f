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

#include "latentlink/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "latentlink/error.hpp"

namespace latentlink {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kKrausDropThreshold = 1e-14;

double wrap_phase(double phase) {
  double w = std::fmod(phase, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

Complex expi(double phase) { return std::polar(1.0, phase); }

struct PureComponent {
  double weight;
  CMatrix vector;  // 2x1
};

/// Spectral decomposition of the control state; zero-weight terms dropped.
std::vector<PureComponent> pure_components(const ControlState& omega) {
  const HermitianEigen eig = hermitian_eigen(omega.omega());
  std::vector<PureComponent> out;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (eig.values[k] <= kKrausDropThreshold) continue;
    out.push_back({eig.values[k], CMatrix::column({eig.vectors(0, k), eig.vectors(1, k)})});
  }
  return out;
}

/// (a (x) |0><0| + b (x) |1><1|) (I (x) |w>) for d x d blocks a, b.
CMatrix controlled_kraus(const CMatrix& a, const CMatrix& b, const CMatrix& w) {
  const std::size_t d = a.rows();
  CMatrix k(2 * d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) {
      k(2 * r, s) = a(r, s) * w(0, 0);
      k(2 * r + 1, s) = b(r, s) * w(1, 0);
    }
  }
  return k;
}

void check_joint(const JointDistribution& joint, std::size_t r) {
  if (joint.size() != r) {
    throw Error(ErrorCode::kInvalidSpec, "joint must have " + std::to_string(r) + " rows");
  }
  double total = 0.0;
  for (const auto& row : joint) {
    if (row.size() != r) {
      throw Error(ErrorCode::kInvalidSpec, "joint must have " + std::to_string(r) + " columns");
    }
    for (double p : row) {
      if (!std::isfinite(p) || p < 0.0) {
        throw Error(ErrorCode::kInvalidSpec, "joint has a negative or non-finite entry");
      }
      total += p;
    }
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    throw Error(ErrorCode::kInvalidSpec, "joint sums to " + std::to_string(total));
  }
}

}  // namespace

VacuumExtendedUnitary::VacuumExtendedUnitary(CMatrix v_in, double phase_in)
    : v(std::move(v_in)), phase(wrap_phase(phase_in)) {
  if (!v.is_square()) throw Error(ErrorCode::kInvalidSpec, "unitary must be square");
  if (!std::isfinite(phase_in)) throw Error(ErrorCode::kInvalidSpec, "phase must be finite");
  const double defect = max_abs_diff(v.adjoint() * v, CMatrix::identity(v.rows()));
  if (defect > kUnitarityTolerance) {
    throw Error(ErrorCode::kInvalidSpec, "V^dagger V deviates from I by " + std::to_string(defect));
  }
}

// ---------------------------------------------------------------------------

CorrelatedChannelSpec::CorrelatedChannelSpec(std::vector<VacuumExtendedUnitary> unitaries,
                                             JointDistribution joint)
    : unitaries_(std::move(unitaries)), joint_(std::move(joint)) {
  if (unitaries_.empty()) throw Error(ErrorCode::kInvalidSpec, "no unitaries");
  const std::size_t d = unitaries_.front().v.rows();
  for (const auto& u : unitaries_) {
    if (u.v.rows() != d) throw Error(ErrorCode::kInvalidSpec, "unitaries differ in dimension");
  }
  check_joint(joint_, unitaries_.size());
}

std::vector<double> CorrelatedChannelSpec::first_marginal() const {
  std::vector<double> p(size(), 0.0);
  for (std::size_t m = 0; m < size(); ++m) {
    for (std::size_t n = 0; n < size(); ++n) p[m] += joint_[m][n];
  }
  return p;
}

std::vector<double> CorrelatedChannelSpec::second_marginal() const {
  std::vector<double> p(size(), 0.0);
  for (std::size_t m = 0; m < size(); ++m) {
    for (std::size_t n = 0; n < size(); ++n) p[n] += joint_[m][n];
  }
  return p;
}

bool CorrelatedChannelSpec::is_symmetric() const {
  for (std::size_t m = 0; m < size(); ++m) {
    for (std::size_t n = m + 1; n < size(); ++n) {
      if (std::abs(joint_[m][n] - joint_[n][m]) > kProbabilityTolerance) return false;
    }
  }
  return true;
}

bool CorrelatedChannelSpec::is_locally_uniform() const {
  const double u = 1.0 / static_cast<double>(size());
  const auto p1 = first_marginal();
  const auto p2 = second_marginal();
  for (std::size_t m = 0; m < size(); ++m) {
    if (std::abs(p1[m] - u) > kProbabilityTolerance || std::abs(p2[m] - u) > kProbabilityTolerance) {
      return false;
    }
  }
  return true;
}

bool CorrelatedChannelSpec::is_independent() const {
  const auto p1 = first_marginal();
  const auto p2 = second_marginal();
  for (std::size_t m = 0; m < size(); ++m) {
    for (std::size_t n = 0; n < size(); ++n) {
      if (std::abs(joint_[m][n] - p1[m] * p2[n]) > kProbabilityTolerance) return false;
    }
  }
  return true;
}

CorrelatedChannelSpec CorrelatedChannelSpec::with_joint(JointDistribution joint) const {
  return CorrelatedChannelSpec(unitaries_, std::move(joint));
}

CorrelatedChannelSpec CorrelatedChannelSpec::with_phases(std::span<const double> phases) const {
  if (phases.size() != size()) {
    throw Error(ErrorCode::kInvalidSpec, "expected " + std::to_string(size()) + " phases");
  }
  std::vector<VacuumExtendedUnitary> next;
  next.reserve(size());
  for (std::size_t m = 0; m < size(); ++m) next.emplace_back(unitaries_[m].v, phases[m]);
  return CorrelatedChannelSpec(std::move(next), joint_);
}

CorrelatedChannelSpec CorrelatedChannelSpec::with_phase_offset(double offset) const {
  std::vector<double> phases;
  for (const auto& u : unitaries_) phases.push_back(u.phase + offset);
  return with_phases(phases);
}

// ---------------------------------------------------------------------------

QuantumChannel::QuantumChannel(std::vector<CMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw Error(ErrorCode::kInvalidSpec, "empty Kraus family");
  din_ = kraus_.front().cols();
  dout_ = kraus_.front().rows();
  for (const auto& k : kraus_) {
    if (k.cols() != din_ || k.rows() != dout_) {
      throw Error(ErrorCode::kDimensionMismatch, "Kraus operators differ in shape");
    }
  }
  const double defect = trace_preservation_defect();
  if (defect > kTracePreservationTolerance) {
    throw Error(ErrorCode::kInvalidSpec,
                "sum K^dagger K deviates from I by " + std::to_string(defect));
  }
}

CMatrix QuantumChannel::apply(const CMatrix& rho) const {
  if (rho.rows() != din_ || rho.cols() != din_) {
    throw Error(ErrorCode::kDimensionMismatch, "input state does not match channel input");
  }
  CMatrix out(dout_, dout_);
  for (const auto& k : kraus_) out += sandwich(k, rho);
  return out;
}

double QuantumChannel::trace_preservation_defect() const {
  CMatrix sum(din_, din_);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  return max_abs_diff(sum, CMatrix::identity(din_));
}

// ---------------------------------------------------------------------------

ControlState::ControlState(CMatrix omega) : omega_(std::move(omega)) {
  if (omega_.rows() != 2 || omega_.cols() != 2) {
    throw Error(ErrorCode::kInvalidState, "control state must be 2x2");
  }
  if (hermiticity_defect(omega_) > kHermitianTolerance) {
    throw Error(ErrorCode::kInvalidState, "control state is not Hermitian");
  }
  if (std::abs(omega_.trace() - 1.0) > 1e-10) {
    throw Error(ErrorCode::kInvalidState, "control state does not have unit trace");
  }
  if (hermitian_eigenvalues_2x2(omega_).second < -1e-12) {
    throw Error(ErrorCode::kInvalidState, "control state has a negative eigenvalue");
  }
}

ControlState ControlState::plus() { return ControlState(CMatrix(2, 2, {0.5, 0.5, 0.5, 0.5})); }
ControlState ControlState::minus() { return ControlState(CMatrix(2, 2, {0.5, -0.5, -0.5, 0.5})); }
ControlState ControlState::zero() { return ControlState(CMatrix::diagonal({1.0, 0.0})); }
ControlState ControlState::one() { return ControlState(CMatrix::diagonal({0.0, 1.0})); }

ControlState ControlState::from_bloch(double theta, double phi) {
  const CMatrix v = CMatrix::column({std::cos(theta / 2), expi(phi) * std::sin(theta / 2)});
  return ControlState(CMatrix::projector(v));
}

// ---------------------------------------------------------------------------

PermutationCorrelation::PermutationCorrelation(std::vector<std::size_t> sigma)
    : sigma_(std::move(sigma)) {
  std::vector<bool> hit(sigma_.size(), false);
  for (std::size_t image : sigma_) {
    if (image >= sigma_.size() || hit[image]) {
      throw Error(ErrorCode::kInvalidSpec, "permutation is not a bijection");
    }
    hit[image] = true;
  }
}

PermutationCorrelation PermutationCorrelation::identity(std::size_t r) {
  std::vector<std::size_t> sigma(r);
  for (std::size_t i = 0; i < r; ++i) sigma[i] = i;
  return PermutationCorrelation(std::move(sigma));
}

PermutationCorrelation PermutationCorrelation::from_transpositions(
    std::size_t r, std::span<const std::array<std::size_t, 2>> pairs) {
  std::vector<std::size_t> sigma = identity(r).images();
  std::vector<bool> used(r, false);
  for (const auto& [i, j] : pairs) {
    if (i >= r || j >= r || i == j || used[i] || used[j]) {
      throw Error(ErrorCode::kInvalidSpec, "transpositions must be disjoint pairs within range");
    }
    used[i] = used[j] = true;
    std::swap(sigma[i], sigma[j]);
  }
  return PermutationCorrelation(std::move(sigma));
}

// ---------------------------------------------------------------------------

CorrelatedChannelSpec pauli_realization(std::array<double, 4> phases) {
  const std::array<CMatrix, 4> paulis{pauli::I(), pauli::X(), pauli::Y(), pauli::Z()};
  std::vector<VacuumExtendedUnitary> unitaries;
  for (std::size_t m = 0; m < 4; ++m) unitaries.emplace_back(paulis[m], phases[m]);
  return CorrelatedChannelSpec(std::move(unitaries), uniform_joint(4));
}

JointDistribution uniform_joint(std::size_t r) {
  const double p = 1.0 / static_cast<double>(r * r);
  return JointDistribution(r, std::vector<double>(r, p));
}

JointDistribution permutation_joint(const PermutationCorrelation& sigma, std::size_t r) {
  if (sigma.size() != r) {
    throw Error(ErrorCode::kInvalidSpec, "permutation size does not match r");
  }
  JointDistribution joint(r, std::vector<double>(r, 0.0));
  for (std::size_t n = 0; n < r; ++n) joint[sigma(n)][n] = 1.0 / static_cast<double>(r);
  return joint;
}

JointDistribution perfectly_correlated_joint(std::span<const double> marginal) {
  JointDistribution joint(marginal.size(), std::vector<double>(marginal.size(), 0.0));
  for (std::size_t m = 0; m < marginal.size(); ++m) joint[m][m] = marginal[m];
  return joint;
}

CMatrix interference_operator(const CorrelatedChannelSpec& spec) {
  if (!spec.is_independent()) {
    throw Error(ErrorCode::kNotIndependent, "joint distribution does not factorize");
  }
  const auto p1 = spec.first_marginal();
  CMatrix f(spec.dimension(), spec.dimension());
  for (std::size_t m = 0; m < spec.size(); ++m) {
    f += spec.unitaries()[m].v * (p1[m] * expi(-spec.unitaries()[m].phase));
  }
  return f;
}

QuantumChannel effective_single(const CorrelatedChannelSpec& spec, const ControlState& omega) {
  const auto components = pure_components(omega);
  const auto& us = spec.unitaries();
  std::vector<CMatrix> kraus;
  for (std::size_t m = 0; m < spec.size(); ++m) {
    for (std::size_t n = 0; n < spec.size(); ++n) {
      const double p = spec.joint()[m][n];
      if (p <= 0.0) continue;
      const CMatrix first = us[m].v * expi(us[n].phase);
      const CMatrix second = us[n].v * expi(us[m].phase);
      for (const auto& c : components) {
        kraus.push_back(controlled_kraus(first, second, c.vector) * std::sqrt(p * c.weight));
      }
    }
  }
  return QuantumChannel(std::move(kraus));
}

SymmetricDecomposition effective_single_symmetric_decomposition(const CorrelatedChannelSpec& spec,
                                                                const CMatrix& rho) {
  if (!spec.is_symmetric()) throw Error(ErrorCode::kNotSymmetric, "joint is not symmetric");
  const std::size_t d = spec.dimension();
  if (rho.rows() != d || rho.cols() != d) {
    throw Error(ErrorCode::kDimensionMismatch, "rho does not match message dimension");
  }
  const auto& us = spec.unitaries();
  SymmetricDecomposition out{CMatrix(d, d), CMatrix(d, d)};
  for (std::size_t m = 0; m < spec.size(); ++m) {
    for (std::size_t n = 0; n < spec.size(); ++n) {
      const double p = spec.joint()[m][n];
      if (p <= 0.0) continue;
      out.c_part += sandwich(us[m].v, rho) * p;
      out.g_part += us[m].v * rho * us[n].v.adjoint() * (p * expi(us[n].phase - us[m].phase));
    }
  }
  return out;
}

QuantumChannel effective_network(const CorrelatedChannelSpec& spec_a,
                                 const CorrelatedChannelSpec& spec_b, const ControlState& omega) {
  if (spec_a.dimension() != spec_b.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch, "network lines act on different dimensions");
  }
  const auto components = pure_components(omega);
  const auto& ua = spec_a.unitaries();
  const auto& ub = spec_b.unitaries();
  std::vector<CMatrix> kraus;
  for (std::size_t m = 0; m < spec_a.size(); ++m) {
    for (std::size_t n = 0; n < spec_a.size(); ++n) {
      const double pa = spec_a.joint()[m][n];
      if (pa <= 0.0) continue;
      for (std::size_t k = 0; k < spec_b.size(); ++k) {
        for (std::size_t l = 0; l < spec_b.size(); ++l) {
          const double pb = spec_b.joint()[k][l];
          if (pb <= 0.0) continue;
          const CMatrix first = ub[l].v * ua[m].v * expi(ub[k].phase + ua[n].phase);
          const CMatrix second = ua[n].v * ub[k].v * expi(ua[m].phase + ub[l].phase);
          for (const auto& c : components) {
            kraus.push_back(controlled_kraus(first, second, c.vector) *
                            std::sqrt(pa * pb * c.weight));
          }
        }
      }
    }
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel quantum_switch(const QuantumChannel& a, const QuantumChannel& b,
                              const ControlState& omega) {
  if (a.din() != a.dout() || b.din() != b.dout() || a.din() != b.din()) {
    throw Error(ErrorCode::kDimensionMismatch, "switch needs two channels on the same system");
  }
  const auto components = pure_components(omega);
  std::vector<CMatrix> kraus;
  for (const auto& am : a.kraus()) {
    for (const auto& bk : b.kraus()) {
      for (const auto& c : components) {
        kraus.push_back(controlled_kraus(am * bk, bk * am, c.vector) * std::sqrt(c.weight));
      }
    }
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel dephase_control(const QuantumChannel& ch, double s) {
  if (!(s >= 0.0 && s <= 0.5)) {
    throw Error(ErrorCode::kOutOfRange, "dephasing s must lie in [0, 1/2], got " + std::to_string(s));
  }
  if (ch.dout() % 2 != 0) {
    throw Error(ErrorCode::kDimensionMismatch, "channel output has no control qubit");
  }
  const CMatrix z_on_control = kron(CMatrix::identity(ch.dout() / 2), pauli::Z());
  std::vector<CMatrix> kraus;
  for (const auto& k : ch.kraus()) {
    if (s < 1.0) kraus.push_back(k * std::sqrt(1.0 - s));
    if (s > 0.0) kraus.push_back(z_on_control * k * std::sqrt(s));
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel symmetric_block_channel(const std::function<CMatrix(const CMatrix&)>& interference,
                                       std::size_t d, const ControlState& omega) {
  const CMatrix& w = omega.omega();
  const CMatrix zwz = pauli::Z() * w * pauli::Z();
  const std::size_t dout = 2 * d;
  CMatrix j(d * dout, d * dout);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      CMatrix unit(d, d);
      unit(i, k) = 1.0;
      const CMatrix g = interference(unit);
      // Depolarising part: Tr(|i><k|) I/d.
      CMatrix base(d, d);
      if (i == k) base = CMatrix::identity(d) * (1.0 / static_cast<double>(d));
      const CMatrix out = kron((base + g) * 0.5, w) + kron((base - g) * 0.5, zwz);
      for (std::size_t r = 0; r < dout; ++r) {
        for (std::size_t c = 0; c < dout; ++c) j(i * dout + r, k * dout + c) = out(r, c);
      }
    }
  }
  return channel_from_choi(j, d, dout);
}

QuantumChannel interference_channel(const CMatrix& f, const ControlState& omega) {
  if (!f.is_square()) throw Error(ErrorCode::kNonSquare, "interference operator must be square");
  const CMatrix f_adj = f.adjoint();
  return symmetric_block_channel([&](const CMatrix& rho) { return f * rho * f_adj; }, f.rows(),
                                 omega);
}

QuantumChannel correlated_network_closed_form(double d01, double d23, const ControlState& omega) {
  const double weight = std::cos(2.0 * d01) + std::cos(2.0 * d23);
  const CMatrix x = pauli::X();
  return symmetric_block_channel(
      [&](const CMatrix& rho) { return (rho * weight + x * rho * x * 2.0) * 0.125; }, 2, omega);
}

// ---------------------------------------------------------------------------

QuantumChannel identity_channel(std::size_t d) { return QuantumChannel({CMatrix::identity(d)}); }

QuantumChannel unitary_channel(const CMatrix& u) { return QuantumChannel({u}); }

QuantumChannel random_unitary_channel(std::span<const CMatrix> unitaries,
                                      std::span<const double> probs) {
  if (unitaries.size() != probs.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "unitaries and probabilities differ in length");
  }
  std::vector<CMatrix> kraus;
  for (std::size_t m = 0; m < unitaries.size(); ++m) {
    if (probs[m] < 0.0) throw Error(ErrorCode::kInvalidSpec, "negative probability");
    if (probs[m] == 0.0) continue;
    kraus.push_back(unitaries[m] * std::sqrt(probs[m]));
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel depolarizing_qubit_channel() {
  const std::array<CMatrix, 4> paulis{pauli::I(), pauli::X(), pauli::Y(), pauli::Z()};
  const std::array<double, 4> probs{0.25, 0.25, 0.25, 0.25};
  return random_unitary_channel(paulis, probs);
}

CMatrix choi(const QuantumChannel& ch) {
  const std::size_t din = ch.din();
  const std::size_t dout = ch.dout();
  CMatrix j(din * dout, din * dout);
  for (const auto& k : ch.kraus()) {
    for (std::size_t i = 0; i < din; ++i) {
      for (std::size_t r = 0; r < dout; ++r) {
        const Complex left = k(r, i);
        if (left == Complex(0.0, 0.0)) continue;
        for (std::size_t l = 0; l < din; ++l) {
          for (std::size_t c = 0; c < dout; ++c) {
            j(i * dout + r, l * dout + c) += left * std::conj(k(c, l));
          }
        }
      }
    }
  }
  return j;
}

QuantumChannel channel_from_choi(const CMatrix& j, std::size_t din, std::size_t dout) {
  if (j.rows() != din * dout || j.cols() != din * dout) {
    throw Error(ErrorCode::kDimensionMismatch, "Choi matrix does not match din*dout");
  }
  const HermitianEigen eig = hermitian_eigen(j);
  std::vector<CMatrix> kraus;
  for (std::size_t e = 0; e < eig.values.size(); ++e) {
    const double lambda = eig.values[e];
    if (lambda < -kTracePreservationTolerance) {
      throw Error(ErrorCode::kInvalidSpec,
                  "map is not completely positive (Choi eigenvalue " + std::to_string(lambda) + ")");
    }
    if (lambda <= kKrausDropThreshold) continue;
    CMatrix k(dout, din);
    const double scale = std::sqrt(lambda);
    for (std::size_t i = 0; i < din; ++i) {
      for (std::size_t r = 0; r < dout; ++r) k(r, i) = scale * eig.vectors(i * dout + r, e);
    }
    kraus.push_back(k);
  }
  return QuantumChannel(std::move(kraus));
}

double channel_distance(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.din() != b.din() || a.dout() != b.dout()) {
    throw Error(ErrorCode::kDimensionMismatch, "channels differ in shape");
  }
  return max_abs_diff(choi(a), choi(b));
}

bool channels_equal(const QuantumChannel& a, const QuantumChannel& b, double tol) {
  return channel_distance(a, b) < tol;
}

bool block_ppt_check(const CMatrix& f) {
  if (!f.is_square()) throw Error(ErrorCode::kNonSquare, "F must be square");
  const std::size_t d = f.rows();
  CMatrix phi(d * d, 1);
  for (std::size_t k = 0; k < d; ++k) phi(k * d + k, 0) = 1.0 / std::sqrt(static_cast<double>(d));
  const CMatrix f_local = kron(f, CMatrix::identity(d));
  const CMatrix g = sandwich(f_local, CMatrix::projector(phi));
  const CMatrix mixed = CMatrix::identity(d * d) * (1.0 / static_cast<double>(d * d));
  for (const double sign : {1.0, -1.0}) {
    const CMatrix block = partial_transpose(mixed + g * sign, {d, d}, Subsystem::kB);
    if (hermitian_eigenvalues(block).back() < -1e-10) return false;
  }
  return true;
}

}  // namespace latentlink
