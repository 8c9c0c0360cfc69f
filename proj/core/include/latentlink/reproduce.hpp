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

// The acceptance checks, shared by `latentlink reproduce` and the
// acceptance test binary.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "latentlink/capacity.hpp"

namespace latentlink {

struct Check {
  std::string label;
  std::string target;
  std::string achieved;
  std::string tolerance;
  bool pass = false;
  /// Shown in the default table; the rest only in verbose mode.
  bool headline = false;
};

struct CriterionOutcome {
  std::size_t id = 0;
  std::string name;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool pass() const;
};

struct ReproduceOptions {
  /// pi/32 scan grids instead of pi/8.
  bool fine = false;
  /// Criterion names to run; empty runs all.
  std::vector<std::string> only;
  std::uint64_t seed = kDefaultSeed;
};

/// In run order.
std::vector<std::string> criterion_names();

/// Throws kOutOfRange for an unknown name in options.only.
std::vector<CriterionOutcome> run_reproduction(const ReproduceOptions& options);

void print_reproduction_table(const std::vector<CriterionOutcome>& outcomes, std::ostream& out,
                              bool verbose = false);

}  // namespace latentlink
