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

#include "latentlink/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "latentlink/error.hpp"

namespace latentlink {

std::size_t worker_count() {
  if (const char* env = std::getenv("LATENTLINK_THREADS")) {
    const std::string_view text(env);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && end == text.data() + text.size() && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace detail {
bool& inside_parallel_region() {
  thread_local bool inside = false;
  return inside;
}
}  // namespace detail

std::size_t first_argmax(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::kOutOfRange, "argmax of an empty range");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace latentlink
