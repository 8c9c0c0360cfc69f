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

// Dense complex matrices for the small dimensions (at most 8) that occur in
// single-particle channel work. Storage is inline and row-major so matrices
// are cheap value types with no heap traffic.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace latentlink {

using Complex = std::complex<double>;

class CMatrix {
 public:
  static constexpr std::size_t kMaxDim = 8;

  /// 1x1 zero matrix.
  CMatrix() : CMatrix(1, 1) {}
  /// rows x cols zero matrix; both must lie in [1, kMaxDim].
  CMatrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; `entries.size()` must equal rows*cols.
  CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);
  CMatrix(std::size_t rows, std::size_t cols, std::span<const Complex> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const Complex> diag);
  static CMatrix diagonal(std::initializer_list<Complex> diag);
  /// Column vector.
  static CMatrix column(std::initializer_list<Complex> entries);
  static CMatrix column(std::span<const Complex> entries);
  /// |v><v| for a column vector v.
  static CMatrix projector(const CMatrix& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return rows_ * cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<Complex> entries() noexcept { return {data_.data(), size()}; }
  std::span<const Complex> entries() const noexcept { return {data_.data(), size()}; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conjugate() const;
  Complex trace() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex scalar);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  friend bool operator==(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

enum class Subsystem { kA, kB };

struct BipartiteDims {
  std::size_t a;
  std::size_t b;
};

/// Largest |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
/// Largest |m_ij - conj(m_ji)|.
double hermiticity_defect(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);
/// A * rho * A^dagger.
CMatrix sandwich(const CMatrix& a, const CMatrix& rho);

CMatrix partial_transpose(const CMatrix& m, BipartiteDims dims, Subsystem subsystem);
CMatrix partial_trace(const CMatrix& m, BipartiteDims dims, Subsystem keep);

inline constexpr double kHermitianTolerance = 1e-10;

/// Eigenvalues in descending order. Throws kNonSquare or kNonHermitian
/// (deviation above kHermitianTolerance); the input is symmetrized first.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

/// Closed-form eigenvalues of a 2x2 Hermitian matrix, descending.
std::pair<double, double> hermitian_eigenvalues_2x2(const CMatrix& m);

struct HermitianEigen {
  std::vector<double> values;  // descending
  CMatrix vectors;             // column k pairs with values[k]
};

HermitianEigen hermitian_eigen(const CMatrix& m);

/// Singular values in descending order. Throws kNonSquare.
std::vector<double> singular_values(const CMatrix& m);

double operator_norm(const CMatrix& m);

namespace pauli {
CMatrix I();
CMatrix X();
CMatrix Y();
CMatrix Z();
}  // namespace pauli

}  // namespace latentlink
