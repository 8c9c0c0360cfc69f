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

// Channel construction on the message (x) control representation.
//
// The message system has dimension d, the control is a qubit, and composite
// indices are ordered message-major: |r>_M |c>_C  <->  2*r + c.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "latentlink/linalg.hpp"

namespace latentlink {

inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kProbabilityTolerance = 1e-12;
inline constexpr double kTracePreservationTolerance = 1e-9;
inline constexpr double kChannelEqualityTolerance = 1e-10;

/// A one-particle unitary together with the phase it imprints relative to
/// the vacuum. Phases are wrapped into [0, 2pi).
struct VacuumExtendedUnitary {
  VacuumExtendedUnitary(CMatrix v, double phase);

  CMatrix v;
  double phase;
};

/// Row-major r x r matrix of joint probabilities p(m, n): unitary m acts at the
/// first use, unitary n at the second.
using JointDistribution = std::vector<std::vector<double>>;

/// Two-use random-unitary channel with correlated noise.
class CorrelatedChannelSpec {
 public:
  /// Throws kInvalidSpec when a unitary is not unitary, dimensions disagree,
  /// the joint is not r x r, has negative entries, or does not sum to one.
  CorrelatedChannelSpec(std::vector<VacuumExtendedUnitary> unitaries, JointDistribution joint);

  const std::vector<VacuumExtendedUnitary>& unitaries() const noexcept { return unitaries_; }
  const JointDistribution& joint() const noexcept { return joint_; }
  std::size_t size() const noexcept { return unitaries_.size(); }
  std::size_t dimension() const noexcept { return unitaries_.front().v.rows(); }

  std::vector<double> first_marginal() const;
  std::vector<double> second_marginal() const;

  bool is_symmetric() const;
  bool is_locally_uniform() const;
  /// p(m, n) == p1(m) p2(n) within kProbabilityTolerance.
  bool is_independent() const;

  CorrelatedChannelSpec with_joint(JointDistribution joint) const;
  CorrelatedChannelSpec with_phases(std::span<const double> phases) const;
  /// Adds `offset` to every vacuum phase.
  CorrelatedChannelSpec with_phase_offset(double offset) const;

 private:
  std::vector<VacuumExtendedUnitary> unitaries_;
  JointDistribution joint_;
};

/// CPTP map stored as a Kraus family; each operator is dout x din.
class QuantumChannel {
 public:
  /// Throws kDimensionMismatch on inconsistent shapes and kInvalidSpec if
  /// sum K^dagger K deviates from the identity by more than 1e-9.
  explicit QuantumChannel(std::vector<CMatrix> kraus);

  std::size_t din() const noexcept { return din_; }
  std::size_t dout() const noexcept { return dout_; }
  const std::vector<CMatrix>& kraus() const noexcept { return kraus_; }

  CMatrix apply(const CMatrix& rho) const;
  /// max |sum K^dagger K - I|.
  double trace_preservation_defect() const;

 private:
  std::vector<CMatrix> kraus_;
  std::size_t din_;
  std::size_t dout_;
};

/// Density matrix of the control qubit.
class ControlState {
 public:
  /// Throws kInvalidState unless omega is a 2x2 density matrix.
  explicit ControlState(CMatrix omega);

  static ControlState plus();
  static ControlState minus();
  static ControlState zero();
  static ControlState one();
  /// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
  static ControlState from_bloch(double theta, double phi);

  const CMatrix& omega() const noexcept { return omega_; }

 private:
  CMatrix omega_;
};

/// Bijection on {0, ..., r-1}; sigma[n] is the image of n.
class PermutationCorrelation {
 public:
  /// Throws kInvalidSpec when `sigma` is not a bijection.
  explicit PermutationCorrelation(std::vector<std::size_t> sigma);

  static PermutationCorrelation identity(std::size_t r);
  /// Product of disjoint transpositions, e.g. {{0, 1}, {2, 3}}.
  static PermutationCorrelation from_transpositions(
      std::size_t r, std::span<const std::array<std::size_t, 2>> pairs);

  std::size_t size() const noexcept { return sigma_.size(); }
  std::size_t operator()(std::size_t n) const { return sigma_.at(n); }
  const std::vector<std::size_t>& images() const noexcept { return sigma_; }

 private:
  std::vector<std::size_t> sigma_;
};

// ---------------------------------------------------------------------------
// Realizations and joints

/// Pauli unitaries I, X, Y, Z with the given vacuum phases and a uniform,
/// independent joint p(m, n) = 1/16.
CorrelatedChannelSpec pauli_realization(std::array<double, 4> phases);

JointDistribution uniform_joint(std::size_t r);
/// p(m, n) = 1/r when m == sigma(n).
JointDistribution permutation_joint(const PermutationCorrelation& sigma, std::size_t r);
/// p(m, n) = marginal[m] * delta_mn.
JointDistribution perfectly_correlated_joint(std::span<const double> marginal);

/// sum_m p1(m) e^{-i phi_m} V_m. Throws kNotIndependent unless the joint
/// factorizes.
CMatrix interference_operator(const CorrelatedChannelSpec& spec);

// ---------------------------------------------------------------------------
// Effective channels

/// rho -> sum p(m,n) W_mn (rho (x) omega) W_mn^dagger with
/// W_mn = e^{i phi_n} V_m (x) |0><0| + e^{i phi_m} V_n (x) |1><1|.
QuantumChannel effective_single(const CorrelatedChannelSpec& spec, const ControlState& omega);

struct SymmetricDecomposition {
  CMatrix c_part;  // sum p(m,n) V_m rho V_m^dagger
  CMatrix g_part;  // sum p(m,n) e^{i(phi_n - phi_m)} V_m rho V_n^dagger
};

/// Definite-time and interference terms of a symmetric spec. Throws
/// kNotSymmetric.
SymmetricDecomposition effective_single_symmetric_decomposition(const CorrelatedChannelSpec& spec,
                                                                const CMatrix& rho);

/// Two correlated lines traversed in opposite orders by the two branches.
/// Throws kDimensionMismatch when the specs act on different dimensions.
QuantumChannel effective_network(const CorrelatedChannelSpec& spec_a,
                                 const CorrelatedChannelSpec& spec_b, const ControlState& omega);

/// Kraus operators A_m B_k (x) |0><0| + B_k A_m (x) |1><1|, control fixed to omega.
QuantumChannel quantum_switch(const QuantumChannel& a, const QuantumChannel& b,
                              const ControlState& omega);

/// Follows `ch` (output message (x) control) with control dephasing
/// omega -> s Z omega Z + (1 - s) omega. Throws kOutOfRange unless s in [0, 1/2].
QuantumChannel dephase_control(const QuantumChannel& ch, double s);

/// rho -> (I/d + G(rho))/2 (x) omega + (I/d - G(rho))/2 (x) Z omega Z for a
/// linear map G on d x d matrices. Throws kInvalidSpec if the result is not
/// completely positive.
QuantumChannel symmetric_block_channel(const std::function<CMatrix(const CMatrix&)>& interference,
                                       std::size_t d, const ControlState& omega);

/// Superposition of two independent depolarising channels with interference
/// operator F, G(rho) = F rho F^dagger. Completely positive iff Tr F^dagger F <= 1/d.
QuantumChannel interference_channel(const CMatrix& f, const ControlState& omega);

/// Closed form of the two-line network with both joints given by the
/// permutation (0 1)(2 3) on Pauli unitaries: G = K with
/// K(rho) = ([cos 2 d01 + cos 2 d23] rho + 2 X rho X) / 8,
/// d01 = phi1 - phi0, d23 = phi3 - phi2.
QuantumChannel correlated_network_closed_form(double d01, double d23, const ControlState& omega);

// ---------------------------------------------------------------------------
// Elementary channels and fingerprints

QuantumChannel identity_channel(std::size_t d);
QuantumChannel unitary_channel(const CMatrix& u);
/// sum_m probs[m] U_m rho U_m^dagger.
QuantumChannel random_unitary_channel(std::span<const CMatrix> unitaries,
                                      std::span<const double> probs);
/// Qubit depolarising channel with Pauli Kraus operators V_m / 2.
QuantumChannel depolarizing_qubit_channel();

/// sum_ij |i><j| (x) ch(|i><j|); input factor first, (din*dout) square.
CMatrix choi(const QuantumChannel& ch);
/// Kraus family from the spectral decomposition of a Choi matrix in the
/// layout produced by choi().
QuantumChannel channel_from_choi(const CMatrix& j, std::size_t din, std::size_t dout);
/// Choi-matrix max-entry distance.
double channel_distance(const QuantumChannel& a, const QuantumChannel& b);
bool channels_equal(const QuantumChannel& a, const QuantumChannel& b,
                    double tol = kChannelEqualityTolerance);

/// Both (I (x) I)/d^2 +- (F (x) I)|Phi+><Phi+|(F (x) I)^dagger have partial
/// transposes with minimum eigenvalue >= -1e-10.
bool block_ppt_check(const CMatrix& f);

}  // namespace latentlink
