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

#include "latentlink/random.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

namespace latentlink {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

CMatrix random_unitary(std::size_t d, Rng& rng) {
  Eigen::MatrixXcd g(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) g(r, c) = gaussian(rng);
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  const Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  CMatrix u(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    // Fix the column phases so the distribution is Haar.
    const Complex diag = r(c, c);
    const Complex phase = std::abs(diag) > 0.0 ? diag / std::abs(diag) : Complex(1.0);
    for (std::size_t row = 0; row < d; ++row) u(row, c) = q(row, c) * phase;
  }
  return u;
}

CMatrix random_pure_state(std::size_t d, Rng& rng) {
  CMatrix v(d, 1);
  double norm = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    v(i, 0) = gaussian(rng);
    norm += std::norm(v(i, 0));
  }
  return v * (1.0 / std::sqrt(norm));
}

CMatrix random_density_matrix(std::size_t d, Rng& rng) {
  CMatrix g(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) g(r, c) = gaussian(rng);
  }
  CMatrix rho = g * g.adjoint();
  return rho * (1.0 / rho.trace().real());
}

double random_phase(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  return u(rng);
}

}  // namespace latentlink
