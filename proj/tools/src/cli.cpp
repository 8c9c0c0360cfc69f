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

#include "latentlink_cli/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "latentlink/capacity.hpp"
#include "latentlink/channel.hpp"
#include "latentlink/error.hpp"
#include "latentlink/experiments.hpp"
#include "latentlink/reproduce.hpp"
#include "latentlink/spec_io.hpp"

namespace latentlink::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kPi = std::numbers::pi;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

struct ScanConfig {
  std::string scenario;
  std::string grid = "pi/8";
  bool fine = false;
  std::optional<std::string> perm;
  std::string realization = "random_unitary";
  std::string s_values = "0,0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4,0.45,0.5";
  std::uint64_t seed = kDefaultSeed;
  std::string out_dir = ".";
  bool no_refine = false;
};

struct CapacityConfig {
  std::string spec_path;
  std::string method;
  std::uint64_t seed = kDefaultSeed;
};

struct ReproduceConfig {
  bool fine = false;
  std::vector<std::string> only;
  std::uint64_t seed = kDefaultSeed;
  bool verbose = false;
};

/// Raised for argument problems found after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a capacity method does not apply to the given spec.
struct InapplicableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_argmax(const CapacityResult& r) {
  std::string text;
  char buf[64];
  for (const auto& [name, value] : r.argmax) {
    std::snprintf(buf, sizeof buf, "%s%s=%.6g", text.empty() ? "" : " ", name.c_str(), value);
    text += buf;
  }
  return text;
}

double validated_grid_step(const ScanConfig& cfg) {
  if (cfg.fine) return kFineGridStep;
  double step = 0.0;
  try {
    step = parse_angle(cfg.grid);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const int n : {4, 8, 16, 32}) {
    if (std::abs(step - kPi / n) < 1e-9) return kPi / n;
  }
  throw UsageError("--grid must be one of pi/4, pi/8, pi/16, pi/32");
}

struct Output {
  std::string stem;
  ScanResult result;
};

int cmd_scan(const ScanConfig& cfg, std::ostream& out, std::ostream& err) {
  // Every argument is checked before anything touches the file system.
  static const std::vector<std::string> kScenarios{"single-uncorrelated", "single-correlated",
                                                   "network-uncorrelated", "network-correlated",
                                                   "dephasing", "fnorm"};
  if (std::find(kScenarios.begin(), kScenarios.end(), cfg.scenario) == kScenarios.end()) {
    throw UsageError("unknown scenario '" + cfg.scenario + "'");
  }
  const double step = validated_grid_step(cfg);
  std::optional<PermutationCorrelation> sigma;
  if (cfg.perm) {
    if (cfg.scenario != "single-correlated") {
      throw UsageError("--perm only applies to single-correlated");
    }
    try {
      const auto pairs = parse_transpositions(*cfg.perm);
      sigma = PermutationCorrelation::from_transpositions(4, pairs);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    } catch (const Error& e) {
      throw UsageError("--perm: " + e.detail());
    }
  }
  if (cfg.realization != "random_unitary" && cfg.realization != "arbitrary") {
    throw UsageError("--realization must be random_unitary or arbitrary");
  }
  std::vector<double> s_values;
  if (cfg.scenario == "dephasing") {
    try {
      s_values = parse_real_list(cfg.s_values);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    for (std::size_t i = 0; i < s_values.size(); ++i) {
      if (!(s_values[i] >= 0.0 && s_values[i] <= 0.5)) throw UsageError("--s values must lie in [0, 0.5]");
      if (i > 0 && s_values[i] < s_values[i - 1]) throw UsageError("--s values must be ascending");
    }
    if (s_values.empty()) throw UsageError("--s needs at least one value");
  }
  const fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    err << "error: cannot create output directory " << dir << "\n";
    return kExitIo;
  }

  const bool refine = !cfg.no_refine;
  std::vector<Output> outputs;
  if (cfg.scenario == "single-uncorrelated") {
    outputs.push_back({cfg.scenario, scan_single_uncorrelated(step, refine)});
  } else if (cfg.scenario == "single-correlated") {
    outputs.push_back(
        {cfg.scenario, scan_single_correlated(step, sigma.value_or(swap_pairs_permutation()), refine)});
  } else if (cfg.scenario == "network-uncorrelated") {
    const bool arbitrary = cfg.realization == "arbitrary";
    outputs.push_back({arbitrary ? "network-uncorrelated-arbitrary" : cfg.scenario,
                       scan_network_uncorrelated(
                           step, arbitrary ? Realization::kArbitrary : Realization::kRandomUnitary,
                           refine)});
  } else if (cfg.scenario == "network-correlated") {
    outputs.push_back({cfg.scenario, scan_network_correlated(step, refine)});
  } else if (cfg.scenario == "dephasing") {
    DephasingCurves curves = dephasing_curve(s_values);
    outputs.push_back({"dephasing-uncorrelated", std::move(curves.uncorrelated)});
    outputs.push_back({"dephasing-correlated", std::move(curves.correlated)});
  } else {
    FNormScatter scatter = fnorm_scatter(step);
    outputs.push_back({"fnorm-single", std::move(scatter.f_series)});
    outputs.push_back({"fnorm-network", std::move(scatter.f2_series)});
  }

  const std::string stamp = utc_timestamp();
  for (auto& o : outputs) {
    o.result.meta.seed = cfg.seed;
    const fs::path csv = dir / (o.stem + ".csv");
    const fs::path meta = dir / (o.stem + ".meta.json");
    std::ofstream csv_out(csv);
    std::ofstream meta_out(meta);
    if (!csv_out || !meta_out) {
      err << "error: cannot write " << csv << "\n";
      return kExitIo;
    }
    write_csv(o.result, csv_out);
    write_meta_json(o.result, meta_out, stamp);
    if (!csv_out.flush() || !meta_out.flush()) {
      err << "error: write failed in " << dir << "\n";
      return kExitIo;
    }
    char line[64];
    std::snprintf(line, sizeof line, "%.6f", o.result.best.value_bits);
    out << o.stem << ": max " << line << " (" << to_string(o.result.best.kind) << ") at "
        << format_argmax(o.result.best) << "\n";
    out << "  wrote " << csv.string() << "\n";
  }
  return kExitOk;
}

/// The C-part sum p1(m) V_m rho V_m^dagger equals Tr(rho) I/d on a spanning
/// set of inputs.
bool marginal_is_depolarising(const CorrelatedChannelSpec& spec) {
  const std::size_t d = spec.dimension();
  const auto p = spec.first_marginal();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      CMatrix unit(d, d);
      unit(i, j) = 1.0;
      CMatrix image(d, d);
      for (std::size_t m = 0; m < spec.size(); ++m) {
        image += sandwich(spec.unitaries()[m].v, unit) * p[m];
      }
      CMatrix expected(d, d);
      if (i == j) expected = CMatrix::identity(d) * (1.0 / static_cast<double>(d));
      if (max_abs_diff(image, expected) > 1e-10) return false;
    }
  }
  return true;
}

int cmd_capacity(const CapacityConfig& cfg, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> kMethods{"reduced", "orthogonal", "oracle", "bound"};
  if (std::find(kMethods.begin(), kMethods.end(), cfg.method) == kMethods.end()) {
    throw UsageError("--method must be reduced, orthogonal, oracle or bound");
  }
  std::optional<CorrelatedChannelSpec> loaded;
  try {
    loaded = load_channel_spec(cfg.spec_path);
  } catch (const std::system_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << cfg.spec_path << ": " << e.detail() << "\n";
    return kExitInvalidArgs;
  }
  const CorrelatedChannelSpec& spec = *loaded;

  auto require = [](bool ok, const std::string& why) {
    if (!ok) throw InapplicableError(why);
  };
  CapacityResult result;
  if (cfg.method == "reduced" || cfg.method == "bound") {
    require(spec.is_independent(), "method '" + cfg.method + "' needs an independent joint");
    require(spec.is_locally_uniform() && marginal_is_depolarising(spec),
            "method '" + cfg.method + "' needs a completely depolarising marginal channel");
  }
  if (cfg.method != "bound") require(spec.dimension() == 2, "method needs qubit unitaries");

  if (cfg.method == "reduced") {
    const auto sv = singular_values(interference_operator(spec));
    result = reduced_capacity(sv[0], sv[1], interference_builder());
  } else if (cfg.method == "orthogonal") {
    result = orthogonal_lower_bound(effective_single(spec, ControlState::plus()));
  } else if (cfg.method == "oracle") {
    OracleOptions opts;
    opts.seed = cfg.seed;
    result = oracle_holevo(effective_single(spec, ControlState::plus()), opts);
  } else {
    const double f = operator_norm(interference_operator(spec));
    const std::size_t d = spec.dimension();
    require(f * f <= 1.0 / static_cast<double>(d) + 1e-12, "||F|| exceeds 1/sqrt(d)");
    result.value_bits = analytic_upper_bound(std::min(f, 1.0 / std::sqrt(static_cast<double>(d))), d);
    result.kind = CapacityKind::kUpperBound;
    result.argmax = {{"f_norm", f}};
  }
  json doc;
  doc["method"] = cfg.method;
  doc["value_bits"] = result.value_bits;
  doc["kind"] = std::string(to_string(result.kind));
  json argmax = json::object();
  for (const auto& [k, v] : result.argmax) argmax[k] = v;
  doc["argmax"] = argmax;
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_reproduce(const ReproduceConfig& cfg, std::ostream& out) {
  ReproduceOptions opts;
  opts.fine = cfg.fine;
  opts.seed = cfg.seed;
  for (const auto& entry : cfg.only) {
    for (const auto& name : parse_list(entry)) opts.only.push_back(name);
  }
  const auto names = criterion_names();
  for (const auto& name : opts.only) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw UsageError("unknown criterion '" + name + "'");
    }
  }
  const auto outcomes = run_reproduction(opts);
  print_reproduction_table(outcomes, out, cfg.verbose);
  const bool all = std::all_of(outcomes.begin(), outcomes.end(),
                               [](const CriterionOutcome& o) { return o.pass(); });
  out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all ? kExitOk : kExitReproduceFailed;
}

}  // namespace

double parse_angle(std::string_view raw) {
  const std::string text = trim(raw);
  const auto pi_at = text.find("pi");
  if (pi_at == std::string::npos) return parse_number<double>(text, "angle");
  double k = 1.0;
  if (pi_at > 0) {
    if (text[pi_at - 1] != '*') throw std::invalid_argument("invalid angle '" + text + "'");
    k = static_cast<double>(parse_number<long long>(trim(text.substr(0, pi_at - 1)), "angle"));
  }
  const std::string rest = trim(text.substr(pi_at + 2));
  double n = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw std::invalid_argument("invalid angle '" + text + "'");
    const long long denom = parse_number<long long>(trim(rest.substr(1)), "angle");
    if (denom <= 0) throw std::invalid_argument("angle denominator must be positive");
    n = static_cast<double>(denom);
  }
  return k * kPi / n;
}

std::vector<std::array<std::size_t, 2>> parse_transpositions(std::string_view text) {
  std::vector<std::array<std::size_t, 2>> pairs;
  for (const auto& item : parse_list(text)) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      throw std::invalid_argument("transposition '" + item + "' is not of the form i-j");
    }
    pairs.push_back({parse_number<std::size_t>(trim(item.substr(0, dash)), "index"),
                     parse_number<std::size_t>(trim(item.substr(dash + 1)), "index")});
  }
  return pairs;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> values;
  for (const auto& item : parse_list(text)) values.push_back(parse_number<double>(item, "number"));
  return values;
}

std::vector<std::string> parse_list(std::string_view text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  const std::string s(text);
  if (trim(s).empty()) return items;
  while (true) {
    const auto comma = s.find(',', start);
    items.push_back(trim(std::string_view(s).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacities of single-particle channels with correlated noise", "latentlink"};
  app.require_subcommand(1);

  ScanConfig scan_cfg;
  auto* scan = app.add_subcommand("scan", "Run a phase-grid scan and write CSV plus JSON meta");
  scan->add_option("--scenario", scan_cfg.scenario,
                   "single-uncorrelated | single-correlated | network-uncorrelated | "
                   "network-correlated | dephasing | fnorm")
      ->required();
  scan->add_option("--grid", scan_cfg.grid, "Grid step: pi/4, pi/8, pi/16 or pi/32 (k*pi/n or radians)");
  scan->add_flag("--fine", scan_cfg.fine, "Use the pi/32 grid");
  scan->add_option("--perm", scan_cfg.perm, "Transpositions for single-correlated, e.g. 0-1,2-3");
  scan->add_option("--realization", scan_cfg.realization, "random_unitary | arbitrary");
  scan->add_option("--s", scan_cfg.s_values, "Dephasing values, comma-separated and ascending");
  scan->add_option("--seed", scan_cfg.seed, "Seed recorded in the meta file");
  scan->add_option("--out", scan_cfg.out_dir, "Output directory");
  scan->add_flag("--no-refine", scan_cfg.no_refine, "Skip local refinement");

  CapacityConfig cap_cfg;
  auto* capacity = app.add_subcommand("capacity", "Evaluate one channel spec");
  capacity->add_option("spec", cap_cfg.spec_path, "Channel spec JSON file")->required();
  capacity->add_option("--method", cap_cfg.method, "reduced | orthogonal | oracle | bound")->required();
  capacity->add_option("--seed", cap_cfg.seed, "Oracle restart seed");

  ReproduceConfig rep_cfg;
  auto* reproduce = app.add_subcommand("reproduce", "Run the acceptance checks and print a table");
  reproduce->add_flag("--fine", rep_cfg.fine, "Use pi/32 scan grids");
  reproduce->add_option("--only", rep_cfg.only, "Criterion names, comma-separated or repeated");
  reproduce->add_option("--seed", rep_cfg.seed, "Seed for sampled checks");
  reproduce->add_flag("--verbose", rep_cfg.verbose, "Show every sub-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArgs;
  }

  try {
    if (*scan) return cmd_scan(scan_cfg, out, err);
    if (*capacity) return cmd_capacity(cap_cfg, out, err);
    return cmd_reproduce(rep_cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  } catch (const InapplicableError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  }
}

}  // namespace latentlink::cli
