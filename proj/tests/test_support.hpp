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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <numbers>

#include "latentlink/linalg.hpp"
#include "latentlink/random.hpp"

namespace latentlink::testing {

inline constexpr double kPi = std::numbers::pi;

inline ::testing::AssertionResult MatrixNear(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return ::testing::AssertionFailure() << "shapes differ";
  }
  const double d = max_abs_diff(a, b);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max entry difference " << d << " > " << tol;
}

inline CMatrix random_hermitian(std::size_t d, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = n(rng);
    for (std::size_t j = i + 1; j < d; ++j) {
      m(i, j) = Complex(n(rng), n(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

inline CMatrix ket_plus() { return CMatrix::column({1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2}); }
inline CMatrix ket_minus() { return CMatrix::column({1 / std::numbers::sqrt2, -1 / std::numbers::sqrt2}); }

/// |Phi+><Phi+| on 2 x 2.
inline CMatrix bell_projector() {
  return CMatrix::projector(CMatrix::column({1 / std::numbers::sqrt2, 0.0, 0.0, 1 / std::numbers::sqrt2}));
}

inline CMatrix swap_gate() {
  CMatrix s(4, 4);
  s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
  return s;
}

}  // namespace latentlink::testing
