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

// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include <cstdio>
#include <cstring>
#include <string>

#include "latentlink/reproduce.hpp"

int main(int argc, char** argv) {
  latentlink::ReproduceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--fine") == 0) options.fine = true;
  }
  const auto outcomes = latentlink::run_reproduction(options);
  bool all = true;
  for (const auto& o : outcomes) {
    std::string summary;
    for (const auto& c : o.checks) {
      if (!summary.empty()) summary += "; ";
      summary += c.label + " = " + c.achieved + " (target " + c.target +
                 (c.tolerance == "-" ? "" : " " + c.tolerance) + (c.pass ? "" : ", FAILED") + ")";
    }
    std::printf("%s [%zu] %s (%.1fs): %s\n", o.pass() ? "PASS" : "FAIL", o.id, o.name.c_str(),
                o.seconds, summary.c_str());
    all = all && o.pass();
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
