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

#include "latentlink/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "latentlink/error.hpp"

namespace latentlink {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonHermitian: return "NonHermitian";
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotIndependent: return "NotIndependent";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::kNegativeSingularValue: return "NegativeSingularValue";
    case ErrorCode::kInapplicable: return "Inapplicable";
  }
  return "Unknown";
}

namespace {

void check_dim(std::size_t n, const char* what) {
  if (n == 0 || n > CMatrix::kMaxDim) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " must be in [1, 8], got " + std::to_string(n));
  }
}

void require_square(const CMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw Error(ErrorCode::kNonSquare, std::string(op) + ": " + std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()));
  }
}

void require_same_shape(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "shape mismatch");
  }
}

CMatrix symmetrized(const CMatrix& m) {
  require_square(m, "hermitian eigendecomposition");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTolerance) {
    throw Error(ErrorCode::kNonHermitian, "max |m - m^dagger| = " + std::to_string(defect));
  }
  CMatrix h = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    h(i, i) = Complex(m(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
    }
  }
  return h;
}

template <int N>
using FixedMatrix = Eigen::Matrix<Complex, N, N, Eigen::RowMajor>;
using DynamicMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Mat>
Mat to_eigen(const CMatrix& m) {
  Mat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
    }
  }
  return out;
}

template <typename Mat>
void eigenvalues_impl(const CMatrix& h, std::vector<double>& out) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(to_eigen<Mat>(h), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  out.resize(static_cast<std::size_t>(ev.size()));
  // Eigen sorts ascending.
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    out[static_cast<std::size_t>(ev.size() - 1 - i)] = ev(i);
  }
}

template <typename Mat>
HermitianEigen eigen_impl(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(to_eigen<Mat>(h), Eigen::ComputeEigenvectors);
  const auto& ev = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  const auto n = static_cast<std::size_t>(ev.size());
  HermitianEigen result{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const auto src = static_cast<Eigen::Index>(n - 1 - k);
    result.values[k] = ev(src);
    for (std::size_t r = 0; r < n; ++r) {
      result.vectors(r, k) = vecs(static_cast<Eigen::Index>(r), src);
    }
  }
  return result;
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_dim(rows, "rows");
  check_dim(cols, "cols");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries)
    : CMatrix(rows, cols, std::span<const Complex>(entries.begin(), entries.size())) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::span<const Complex> entries)
    : CMatrix(rows, cols) {
  if (entries.size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(entries.size()));
  }
  std::copy(entries.begin(), entries.end(), data_.begin());
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::diagonal(std::initializer_list<Complex> diag) {
  return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

CMatrix CMatrix::column(std::initializer_list<Complex> entries) {
  return column(std::span<const Complex>(entries.begin(), entries.size()));
}

CMatrix CMatrix::column(std::span<const Complex> entries) {
  return CMatrix(entries.size(), 1, entries);
}

CMatrix CMatrix::projector(const CMatrix& v) {
  if (v.cols() != 1) throw Error(ErrorCode::kDimensionMismatch, "projector needs a column vector");
  return v * v.adjoint();
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

CMatrix CMatrix::conjugate() const {
  CMatrix out = *this;
  for (auto& z : out.entries()) z = std::conj(z);
  return out;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scalar) {
  for (std::size_t i = 0; i < size(); ++i) data_[i] *= scalar;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return std::equal(a.entries().begin(), a.entries().end(), b.entries().begin());
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

double hermiticity_defect(const CMatrix& m) {
  require_square(m, "hermiticity_defect");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
      }
    }
  }
  return out;
}

CMatrix sandwich(const CMatrix& a, const CMatrix& rho) { return a * rho * a.adjoint(); }

CMatrix partial_transpose(const CMatrix& m, BipartiteDims dims, Subsystem subsystem) {
  require_square(m, "partial_transpose");
  if (m.rows() != dims.a * dims.b) {
    throw Error(ErrorCode::kDimensionMismatch, "partial_transpose: rows != dA*dB");
  }
  CMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < dims.a; ++i) {
    for (std::size_t j = 0; j < dims.b; ++j) {
      for (std::size_t k = 0; k < dims.a; ++k) {
        for (std::size_t l = 0; l < dims.b; ++l) {
          // <i j| m |k l>
          const Complex v = m(i * dims.b + j, k * dims.b + l);
          if (subsystem == Subsystem::kB) {
            out(i * dims.b + l, k * dims.b + j) = v;
          } else {
            out(k * dims.b + j, i * dims.b + l) = v;
          }
        }
      }
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, BipartiteDims dims, Subsystem keep) {
  require_square(m, "partial_trace");
  if (m.rows() != dims.a * dims.b) {
    throw Error(ErrorCode::kDimensionMismatch, "partial_trace: rows != dA*dB");
  }
  if (keep == Subsystem::kA) {
    CMatrix out(dims.a, dims.a);
    for (std::size_t i = 0; i < dims.a; ++i) {
      for (std::size_t k = 0; k < dims.a; ++k) {
        for (std::size_t j = 0; j < dims.b; ++j) out(i, k) += m(i * dims.b + j, k * dims.b + j);
      }
    }
    return out;
  }
  CMatrix out(dims.b, dims.b);
  for (std::size_t j = 0; j < dims.b; ++j) {
    for (std::size_t l = 0; l < dims.b; ++l) {
      for (std::size_t i = 0; i < dims.a; ++i) out(j, l) += m(i * dims.b + j, i * dims.b + l);
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  const CMatrix h = symmetrized(m);
  std::vector<double> out;
  switch (h.rows()) {
    case 1: out = {h(0, 0).real()}; break;
    case 2: eigenvalues_impl<FixedMatrix<2>>(h, out); break;
    case 4: eigenvalues_impl<FixedMatrix<4>>(h, out); break;
    case 8: eigenvalues_impl<FixedMatrix<8>>(h, out); break;
    default: eigenvalues_impl<DynamicMatrix>(h, out); break;
  }
  return out;
}

std::pair<double, double> hermitian_eigenvalues_2x2(const CMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "hermitian_eigenvalues_2x2 needs a 2x2 matrix");
  }
  const CMatrix h = symmetrized(m);
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
  return {mean + radius, mean - radius};
}

HermitianEigen hermitian_eigen(const CMatrix& m) {
  const CMatrix h = symmetrized(m);
  switch (h.rows()) {
    case 2: return eigen_impl<FixedMatrix<2>>(h);
    case 4: return eigen_impl<FixedMatrix<4>>(h);
    case 8: return eigen_impl<FixedMatrix<8>>(h);
    default: return eigen_impl<DynamicMatrix>(h);
  }
}

std::vector<double> singular_values(const CMatrix& m) {
  require_square(m, "singular_values");
  Eigen::JacobiSVD<DynamicMatrix> svd(to_eigen<DynamicMatrix>(m));
  const auto& sv = svd.singularValues();
  std::vector<double> out(static_cast<std::size_t>(sv.size()));
  for (Eigen::Index i = 0; i < sv.size(); ++i) out[static_cast<std::size_t>(i)] = sv(i);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double operator_norm(const CMatrix& m) { return singular_values(m).front(); }

namespace pauli {
CMatrix I() { return CMatrix::identity(2); }
CMatrix X() { return CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
CMatrix Y() { return CMatrix(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}); }
CMatrix Z() { return CMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }
}  // namespace pauli

}  // namespace latentlink
