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
#include <numeric>

#include "latentlink/error.hpp"
#include "latentlink/linalg.hpp"
#include "test_support.hpp"

namespace latentlink {
namespace {

using testing::MatrixNear;

TEST(HermitianEigenvalues, PauliZ) {
  const auto ev = hermitian_eigenvalues(pauli::Z());
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_NEAR(ev[0], 1.0, 1e-14);
  EXPECT_NEAR(ev[1], -1.0, 1e-14);
}

TEST(HermitianEigenvalues, ScalarFourByFour) {
  for (double v : hermitian_eigenvalues(CMatrix::identity(4) * 0.25)) EXPECT_NEAR(v, 0.25, 1e-14);
}

TEST(HermitianEigenvalues, PartialTransposeOfBellState) {
  const auto ev = hermitian_eigenvalues(partial_transpose(testing::bell_projector(), {2, 2}, Subsystem::kB));
  const std::vector<double> expected{0.5, 0.5, 0.5, -0.5};
  ASSERT_EQ(ev.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], expected[i], 1e-12);
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  CMatrix m = pauli::X();
  m(0, 1) = 1.0 + 1e-8;
  try {
    hermitian_eigenvalues(m);
    FAIL() << "expected NonHermitian";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonHermitian);
  }
}

TEST(HermitianEigenvalues, SymmetrizesWithinTolerance) {
  CMatrix m = pauli::X();
  m(0, 1) = 1.0 + 1e-12;
  EXPECT_NO_THROW(hermitian_eigenvalues(m));
}

TEST(HermitianEigenvalues, RejectsNonSquare) {
  try {
    hermitian_eigenvalues(CMatrix(2, 4));
    FAIL() << "expected NonSquare";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonSquare);
  }
}

TEST(HermitianEigenvalues, ClosedFormAgreesWithGeneralSolver) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const CMatrix h = testing::random_hermitian(2, rng);
    const auto general = hermitian_eigenvalues(h);
    const auto [hi, lo] = hermitian_eigenvalues_2x2(h);
    EXPECT_NEAR(general[0], hi, 1e-10);
    EXPECT_NEAR(general[1], lo, 1e-10);
  }
}

TEST(HermitianEigenProperty, TraceAndReconstruction) {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = std::size_t{1} << (1 + trial % 3);
    const CMatrix h = testing::random_hermitian(d, rng);
    const HermitianEigen eig = hermitian_eigen(h);
    ASSERT_TRUE(std::is_sorted(eig.values.rbegin(), eig.values.rend()));
    const double sum = std::accumulate(eig.values.begin(), eig.values.end(), 0.0);
    EXPECT_NEAR(sum, h.trace().real(), 1e-9);
    CMatrix lambda(d, d);
    for (std::size_t i = 0; i < d; ++i) lambda(i, i) = eig.values[i];
    EXPECT_TRUE(MatrixNear(eig.vectors * lambda * eig.vectors.adjoint(), h, 1e-9));
  }
}

TEST(SingularValues, Identity) {
  const auto sv = singular_values(CMatrix::identity(2));
  EXPECT_NEAR(sv[0], 1.0, 1e-14);
  EXPECT_NEAR(sv[1], 1.0, 1e-14);
}

TEST(SingularValues, Diagonal) {
  const auto sv = singular_values(CMatrix::diagonal({0.6, 0.3}));
  EXPECT_NEAR(sv[0], 0.6, 1e-14);
  EXPECT_NEAR(sv[1], 0.3, 1e-14);
}

TEST(SingularValues, PauliSumMatchesGramEigenvalues) {
  const CMatrix f = (pauli::I() + pauli::X() + pauli::Y() + pauli::Z()) * 0.25;
  // Oracle: eigenvalues of the 2x2 Gram matrix from trace and determinant.
  const CMatrix g = f.adjoint() * f;
  const double t = g.trace().real();
  const double det = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).real();
  const double disc = std::sqrt(t * t / 4 - det);
  const auto sv = singular_values(f);
  EXPECT_NEAR(sv[0], std::sqrt(t / 2 + disc), 1e-12);
  EXPECT_NEAR(sv[1], std::sqrt(std::max(t / 2 - disc, 0.0)), 1e-12);
  EXPECT_NEAR(operator_norm(f), sv[0], 0.0);
}

TEST(SingularValues, RejectsNonSquare) {
  EXPECT_THROW(singular_values(CMatrix(2, 1)), Error);
}

TEST(SingularValuesProperty, UnitaryInvariance) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = trial % 2 == 0 ? 2 : 4;
    CMatrix m(d, d);
    std::normal_distribution<double> n(0.0, 1.0);
    for (auto& z : m.entries()) z = Complex(n(rng), n(rng));
    const auto base = singular_values(m);
    const auto moved = singular_values(random_unitary(d, rng) * m * random_unitary(d, rng));
    for (std::size_t i = 0; i < d; ++i) EXPECT_NEAR(base[i], moved[i], 1e-9);
    for (double s : base) EXPECT_GE(s, 0.0);
  }
}

TEST(Kron, ZWithIdentity) {
  EXPECT_EQ(kron(pauli::Z(), CMatrix::identity(2)), CMatrix::diagonal({1.0, 1.0, -1.0, -1.0}));
}

TEST(Kron, TraceMultiplies) {
  const CMatrix omega = CMatrix::projector(testing::ket_plus());
  EXPECT_NEAR(std::abs(kron(CMatrix::diagonal({1.0, 0.0}), omega).trace() - omega.trace()), 0.0, 1e-15);
}

TEST(Kron, InvolutionsSquareToIdentity) {
  const CMatrix xz = kron(pauli::X(), pauli::Z());
  EXPECT_EQ(xz * xz, CMatrix::identity(4));
  EXPECT_EQ(kron(CMatrix::identity(2), CMatrix::identity(4)), CMatrix::identity(8));
}

TEST(PartialTranspose, ProductState) {
  Rng rng(3);
  const CMatrix sigma = random_density_matrix(2, rng);
  const CMatrix tau = random_density_matrix(2, rng);
  EXPECT_TRUE(MatrixNear(partial_transpose(kron(sigma, tau), {2, 2}, Subsystem::kB),
                         kron(sigma, tau.transpose()), 1e-15));
  EXPECT_TRUE(MatrixNear(partial_transpose(kron(sigma, tau), {2, 2}, Subsystem::kA),
                         kron(sigma.transpose(), tau), 1e-15));
}

TEST(PartialTranspose, BellStateIsHalfSwap) {
  EXPECT_TRUE(MatrixNear(partial_transpose(testing::bell_projector(), {2, 2}, Subsystem::kB),
                         testing::swap_gate() * 0.5, 1e-15));
}

TEST(PartialTranspose, InvolutionIsExact) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix m = testing::random_hermitian(8, rng);
    for (const BipartiteDims dims : {BipartiteDims{2, 4}, BipartiteDims{4, 2}}) {
      for (const Subsystem s : {Subsystem::kA, Subsystem::kB}) {
        const CMatrix once = partial_transpose(m, dims, s);
        EXPECT_EQ(partial_transpose(once, dims, s), m);
        EXPECT_EQ(once.trace(), m.trace());
      }
    }
  }
}

TEST(PartialTranspose, DimensionMismatch) {
  try {
    partial_transpose(CMatrix(4, 4), {2, 4}, Subsystem::kB);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(PartialTrace, ControlOfMaximallyMixedMessage) {
  const CMatrix omega = CMatrix::projector(testing::ket_plus());
  const CMatrix joint = kron(CMatrix::identity(2) * 0.5, omega);
  EXPECT_TRUE(MatrixNear(partial_trace(joint, {2, 2}, Subsystem::kA), CMatrix::identity(2) * 0.5, 1e-15));
  EXPECT_TRUE(MatrixNear(partial_trace(joint, {2, 2}, Subsystem::kB), omega, 1e-15));
}

TEST(PartialTrace, BellMarginal) {
  EXPECT_TRUE(MatrixNear(partial_trace(testing::bell_projector(), {2, 2}, Subsystem::kA),
                         CMatrix::identity(2) * 0.5, 1e-15));
}

TEST(PartialTrace, ProductKeepsScaledFactor) {
  Rng rng(4);
  const CMatrix sigma = random_density_matrix(4, rng);
  const CMatrix tau = random_density_matrix(2, rng) * 3.0;
  EXPECT_TRUE(MatrixNear(partial_trace(kron(sigma, tau), {4, 2}, Subsystem::kA), sigma * 3.0, 1e-12));
}

TEST(PartialTrace, DimensionMismatch) {
  EXPECT_THROW(partial_trace(CMatrix(4, 4), {4, 2}, Subsystem::kA), Error);
}

TEST(CMatrix, RejectsOversizedDimensions) {
  EXPECT_THROW(CMatrix(9, 1), Error);
  EXPECT_THROW(CMatrix(0, 2), Error);
  EXPECT_THROW(CMatrix(2, 2, {1.0, 2.0, 3.0}), Error);
}

TEST(CMatrix, AdjointAndProducts) {
  const CMatrix y = pauli::Y();
  EXPECT_EQ(y.adjoint(), y);
  EXPECT_TRUE(MatrixNear(pauli::X() * pauli::Y(), pauli::Z() * Complex(0.0, 1.0), 1e-15));
  EXPECT_THROW(pauli::X() * CMatrix(4, 4), Error);
}

}  // namespace
}  // namespace latentlink
