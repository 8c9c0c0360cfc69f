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

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace latentlink::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitReproduceFailed = 1;
inline constexpr int kExitInvalidArgs = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitInapplicable = 4;

/// "k*pi/n", "pi/n", "k*pi", "pi" or plain radians. Throws
/// std::invalid_argument on anything else.
double parse_angle(std::string_view text);

/// Comma-separated "i-j" pairs; the empty string is the identity.
std::vector<std::array<std::size_t, 2>> parse_transpositions(std::string_view text);

/// Splits on commas and trims blanks; the empty string gives no items.
std::vector<std::string> parse_list(std::string_view text);

/// Comma-separated reals.
std::vector<double> parse_real_list(std::string_view text);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latentlink::cli
