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

// Seeded samplers for property checks and optimizer restarts.

#include <cstddef>
#include <random>

#include "latentlink/linalg.hpp"

namespace latentlink {

using Rng = std::mt19937_64;

/// Haar-distributed unitary.
CMatrix random_unitary(std::size_t d, Rng& rng);
/// Normalized column vector with i.i.d. complex Gaussian amplitudes.
CMatrix random_pure_state(std::size_t d, Rng& rng);
/// Hilbert-Schmidt distributed density matrix.
CMatrix random_density_matrix(std::size_t d, Rng& rng);
/// Uniform phase in [0, 2pi).
double random_phase(Rng& rng);

}  // namespace latentlink
