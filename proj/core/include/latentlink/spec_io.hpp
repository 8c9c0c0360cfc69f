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

// JSON form of a correlated channel spec:
//   {"unitaries": [{"matrix": [[re, im], ...], "phase": f}, ...],
//    "joint": [[f, ...], ...]}
// Matrices are flat row-major lists of d*d complex entries.

#include <filesystem>
#include <string>
#include <string_view>

#include "latentlink/channel.hpp"

namespace latentlink {

/// Throws Error(kInvalidSpec) with a "line:column" or field path prefix.
CorrelatedChannelSpec parse_channel_spec(std::string_view json_text);
/// Throws Error(kInvalidSpec) on parse or validation failure and
/// std::system_error when the file cannot be read.
CorrelatedChannelSpec load_channel_spec(const std::filesystem::path& path);

std::string channel_spec_to_json(const CorrelatedChannelSpec& spec);

}  // namespace latentlink
