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

#include "latentlink/spec_io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <system_error>

#include "latentlink/error.hpp"

namespace latentlink {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kInvalidSpec, where + ": " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double number_at(const json& node, const std::string& where) {
  if (!node.is_number()) fail(where, "expected a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) fail(where, "expected a finite number");
  return v;
}

CMatrix parse_matrix(const json& node, const std::string& where) {
  if (!node.is_array() || node.empty()) fail(where, "expected a non-empty array of [re, im] pairs");
  const std::size_t n = node.size();
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d * d != n) fail(where, std::to_string(n) + " entries is not a square count");
  if (d > CMatrix::kMaxDim) fail(where, "dimension above " + std::to_string(CMatrix::kMaxDim));
  CMatrix m(d, d);
  for (std::size_t k = 0; k < n; ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const json& entry = node[k];
    if (!entry.is_array() || entry.size() != 2) fail(at, "expected a [re, im] pair");
    m(k / d, k % d) = Complex(number_at(entry[0], at + "[0]"), number_at(entry[1], at + "[1]"));
  }
  return m;
}

}  // namespace

CorrelatedChannelSpec parse_channel_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    fail(line_column(json_text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  if (!doc.is_object()) fail("document", "expected an object");
  if (!doc.contains("unitaries")) fail("unitaries", "missing field");
  if (!doc.contains("joint")) fail("joint", "missing field");

  const json& us = doc["unitaries"];
  if (!us.is_array() || us.empty()) fail("unitaries", "expected a non-empty array");
  std::vector<VacuumExtendedUnitary> unitaries;
  for (std::size_t i = 0; i < us.size(); ++i) {
    const std::string where = "unitaries[" + std::to_string(i) + "]";
    const json& u = us[i];
    if (!u.is_object()) fail(where, "expected an object");
    if (!u.contains("matrix")) fail(where + ".matrix", "missing field");
    if (!u.contains("phase")) fail(where + ".phase", "missing field");
    CMatrix v = parse_matrix(u["matrix"], where + ".matrix");
    const double phase = number_at(u["phase"], where + ".phase");
    try {
      unitaries.emplace_back(std::move(v), phase);
    } catch (const Error& e) {
      fail(where, e.detail());
    }
  }

  const json& jn = doc["joint"];
  if (!jn.is_array()) fail("joint", "expected an array of rows");
  JointDistribution joint;
  for (std::size_t m = 0; m < jn.size(); ++m) {
    const std::string where = "joint[" + std::to_string(m) + "]";
    if (!jn[m].is_array()) fail(where, "expected an array");
    std::vector<double> row;
    for (std::size_t n = 0; n < jn[m].size(); ++n) {
      row.push_back(number_at(jn[m][n], where + "[" + std::to_string(n) + "]"));
    }
    joint.push_back(std::move(row));
  }
  try {
    return CorrelatedChannelSpec(std::move(unitaries), std::move(joint));
  } catch (const Error& e) {
    fail("spec", e.detail());
  }
}

CorrelatedChannelSpec load_channel_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::system_error(std::make_error_code(std::errc::no_such_file_or_directory),
                            "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_channel_spec(buffer.str());
}

std::string channel_spec_to_json(const CorrelatedChannelSpec& spec) {
  json doc;
  doc["unitaries"] = json::array();
  for (const auto& u : spec.unitaries()) {
    json entries = json::array();
    for (const Complex& z : u.v.entries()) entries.push_back({z.real(), z.imag()});
    doc["unitaries"].push_back({{"matrix", entries}, {"phase", u.phase}});
  }
  doc["joint"] = spec.joint();
  return doc.dump(2);
}

}  // namespace latentlink
