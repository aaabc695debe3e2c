// Copyright 2026 The ioncat Authors
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

#include "ioncat/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "ioncat/grover.hpp"
#include "ioncat/register.hpp"
#include "ioncat/report.hpp"

namespace ioncat::cli {
namespace {

using nlohmann::json;

struct RawFlags {
  std::string ions;
  std::string alpha = "2.0";
  std::string target;
  std::string mode = "correlated-diffusion";
  std::string iterations = "auto";
  std::string cutoff = "auto";
  std::string epsilon = "1e-12";
  std::string seed = "0";
  std::string format = "json";
  std::string output = "stdout";
  std::string modulus;
  bool postselect = false;
};

[[noreturn]] void bad_value(std::string_view flag, std::string_view text, std::string_view want) {
  throw UsageError(std::string(flag) + ": invalid value '" + std::string(text) + "' (expected " +
                   std::string(want) + ")");
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    return std::nullopt;
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) {
      return std::nullopt;
    }
  }
  return value;
}

int parse_int(std::string_view flag, std::string_view text) {
  const auto v = parse_number<int>(text);
  if (!v) {
    bad_value(flag, text, "an integer");
  }
  return *v;
}

double parse_real(std::string_view flag, std::string_view text) {
  const auto v = parse_number<double>(text);
  if (!v) {
    bad_value(flag, text, "a real number");
  }
  return *v;
}

Complex parse_alpha(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    return {parse_real("--alpha", text), 0.0};
  }
  return {parse_real("--alpha", text.substr(0, comma)),
          parse_real("--alpha", text.substr(comma + 1))};
}

// "start:stop:step", stop included when within a small fraction of a step.
std::vector<double> parse_real_range(std::string_view flag, std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    bad_value(flag, text, "start:stop:step");
  }
  const double start = parse_real(flag, text.substr(0, first));
  const double stop = parse_real(flag, text.substr(first + 1, second - first - 1));
  const double step = parse_real(flag, text.substr(second + 1));
  if (!(step > 0.0) || stop < start) {
    bad_value(flag, text, "start <= stop and step > 0");
  }
  std::vector<double> values;
  for (long i = 0;; ++i) {
    const double v = start + static_cast<double>(i) * step;
    if (v > stop + 1e-9 * step) {
      break;
    }
    values.push_back(v);
    if (values.size() > 100'000) {
      bad_value(flag, text, "at most 100000 values");
    }
  }
  return values;
}

// "a..b" inclusive, or a single integer.
std::vector<int> parse_int_range(std::string_view flag, std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    return {parse_int(flag, text)};
  }
  const int lo = parse_int(flag, text.substr(0, dots));
  const int hi = parse_int(flag, text.substr(dots + 2));
  if (hi < lo) {
    bad_value(flag, text, "a..b with a <= b");
  }
  std::vector<int> values;
  for (int v = lo; v <= hi; ++v) {
    values.push_back(v);
  }
  return values;
}

void add_protocol_flags(CLI::App* sub, RawFlags& raw, bool target_required) {
  sub->add_option("--ions", raw.ions, "number of ions m (register size N = 2^m)")->required();
  sub->add_option("--alpha", raw.alpha, "coherent amplitude re[,im]");
  auto* target = sub->add_option("--target", raw.target, "marked register index k0");
  if (target_required) {
    target->required();
  }
  sub->add_option("--cutoff", raw.cutoff, "Fock cutoff: auto|int");
  sub->add_option("--epsilon", raw.epsilon, "tail tolerance for the automatic cutoff");
  sub->add_option("--format", raw.format, "json|csv");
  sub->add_option("--output", raw.output, "output path or stdout");
}

void add_search_flags(CLI::App* sub, RawFlags& raw) {
  sub->add_option("--mode", raw.mode,
                  "correlated-diffusion|amplitude-amplification|electronic-diffusion|ideal-model");
  sub->add_option("--iterations", raw.iterations, "auto|int|a..b");
  sub->add_option("--seed", raw.seed, "measurement seed");
  sub->add_flag("--postselect", raw.postselect, "condition on the target outcome");
}

ProtocolConfig build_config(const RawFlags& raw) {
  ProtocolConfig cfg;
  cfg.qubits = parse_int("--ions", raw.ions);
  if (cfg.qubits < 1 || cfg.qubits > 12) {
    throw UsageError("--ions: " + raw.ions + " is outside the supported range 1..12");
  }
  cfg.alpha = parse_alpha(raw.alpha);
  cfg.k0 = raw.target.empty() ? 0 : parse_int("--target", raw.target);
  const int dim = 1 << cfg.qubits;
  if (cfg.k0 < 0 || cfg.k0 >= dim) {
    throw UsageError("--target: " + std::to_string(cfg.k0) + " is out of range for " +
                     std::to_string(cfg.qubits) + " ion(s); k0 must satisfy 0 <= k0 < 2^m = " +
                     std::to_string(dim));
  }
  try {
    cfg.mode = parse_grover_mode(raw.mode);
  } catch (const ParameterError&) {
    bad_value("--mode", raw.mode,
              "correlated-diffusion|amplitude-amplification|electronic-diffusion|ideal-model");
  }
  if (raw.cutoff != "auto") {
    cfg.cutoff = parse_int("--cutoff", raw.cutoff);
    if (*cfg.cutoff < dim - 1) {
      throw UsageError("--cutoff: must be at least N-1 = " + std::to_string(dim - 1));
    }
  }
  cfg.epsilon = parse_real("--epsilon", raw.epsilon);
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) {
    throw UsageError("--epsilon: must lie in (0, 1)");
  }
  const auto seed = parse_number<std::uint64_t>(raw.seed);
  if (!seed) {
    bad_value("--seed", raw.seed, "an unsigned integer");
  }
  cfg.seed = *seed;
  cfg.postselect = raw.postselect;
  return cfg;
}

json document(std::string_view verb, json payload) {
  json j;
  j["schema_version"] = std::string(kSchemaVersion);
  j["verb"] = std::string(verb);
  j["rows"] = std::move(payload);
  return j;
}

void write_table(const CliCommand& cmd, std::string_view verb, const Table& table,
                 std::ostream& out) {
  if (cmd.format == OutputFormat::Csv) {
    table.write_csv(out);
  } else {
    out << document(verb, table.to_json()).dump(2) << '\n';
  }
}

void execute_prepare(const CliCommand& cmd, std::ostream& out) {
  const auto report = run_protocol(cmd.config);
  if (cmd.format == OutputFormat::Csv) {
    Table table(run_row_columns());
    table.add_row(run_row(report));
    table.write_csv(out);
  } else {
    out << report_to_json(report).dump(2) << '\n';
  }
}

void execute_entangle_only(const CliCommand& cmd, std::ostream& out) {
  const auto prep = prepare_entangled(cmd.config);
  const double p = prep.weights.weights[static_cast<std::size_t>(cmd.config.k0)];
  if (cmd.format == OutputFormat::Csv) {
    Table table({"k", "weight"});
    for (std::size_t k = 0; k < prep.weights.weights.size(); ++k) {
      table.add_row({static_cast<std::int64_t>(k), prep.weights.weights[k]});
    }
    table.write_csv(out);
    return;
  }
  json j;
  j["schema_version"] = std::string(kSchemaVersion);
  j["config"] = config_to_json(cmd.config);
  j["cutoff"] = prep.cutoff;
  j["tail_bound"] = prep.tail_bound;
  j["sector_weights"] = prep.weights.weights;
  j["baseline_probability"] = p;
  if (p > 0.0) {
    const double theta = std::asin(std::sqrt(std::min(p, 1.0)));
    const auto t = optimal_iterations(theta);
    j["theta_effective"] = theta;
    j["t_exact"] = t.exact;
    j["t_rounded"] = t.rounded;
  }
  out << j.dump(2) << '\n';
}

void execute_model(const CliCommand& cmd, std::ostream& out) {
  Table table({"N", "iteration", "theta", "t_exact", "t_rounded", "a", "b",
               "success_probability", "a_unit_branch", "b_unit_branch"});
  for (int n : cmd.moduli) {
    const double theta = grover_angle(n);
    const auto t = optimal_iterations(theta);
    std::vector<int> iterations = cmd.iteration_values;
    if (iterations.empty()) {
      iterations.push_back(t.rounded);
    }
    for (int j : iterations) {
      const auto norm = model_amplitudes(n, j);
      const auto unit = model_amplitudes(n, j, AmplitudeConvention::UnitBranch);
      table.add_row({std::int64_t{n}, std::int64_t{j}, theta, t.exact,
                     std::int64_t{t.rounded}, norm.marked, norm.unmarked,
                     norm.marked * norm.marked, unit.marked, unit.unmarked});
    }
  }
  write_table(cmd, "model", table, out);
}

void execute_sweep(const CliCommand& cmd, std::ostream& out) {
  std::vector<ProtocolConfig> configs;
  const bool by_alpha = cmd.verb == Verb::SweepAlpha;
  const std::size_t count = by_alpha ? cmd.alpha_values.size() : cmd.iteration_values.size();
  for (std::size_t i = 0; i < count; ++i) {
    ProtocolConfig cfg = cmd.config;
    // Row i draws with seed + i.
    cfg.seed = cmd.config.seed + i;
    if (by_alpha) {
      cfg.alpha = {cmd.alpha_values[i], 0.0};
    } else {
      cfg.iterations = cmd.iteration_values[i];
    }
    configs.push_back(cfg);
  }
  Table table(run_row_columns());
  for (const auto& report : run_sweep(configs)) {
    table.add_row(run_row(report));
  }
  write_table(cmd, by_alpha ? "sweep-alpha" : "sweep-iterations", table, out);
}

}  // namespace

CliCommand parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Ion-trap multi-phonon coherent state preparation simulator", "ioncat"};
  app.require_subcommand(1, 1);
  RawFlags raw;

  auto* prepare = app.add_subcommand("prepare", "full protocol run with Grover search");
  add_protocol_flags(prepare, raw, true);
  add_search_flags(prepare, raw);

  auto* entangle_only =
      app.add_subcommand("entangle-only", "stop after entangling; report sector weights");
  add_protocol_flags(entangle_only, raw, false);

  auto* model = app.add_subcommand("model", "closed-form Grover amplitudes and iteration counts");
  model->add_option("--N", raw.modulus, "register size N (int or a..b)");
  model->add_option("--ions", raw.ions, "number of ions m, N = 2^m");
  model->add_option("--iterations", raw.iterations, "auto|int|a..b");
  model->add_option("--format", raw.format, "json|csv");
  model->add_option("--output", raw.output, "output path or stdout");

  auto* sweep_alpha = app.add_subcommand("sweep-alpha", "protocol runs over an alpha range");
  add_protocol_flags(sweep_alpha, raw, true);
  add_search_flags(sweep_alpha, raw);

  auto* sweep_iterations =
      app.add_subcommand("sweep-iterations", "protocol runs over an iteration range");
  add_protocol_flags(sweep_iterations, raw, true);
  add_search_flags(sweep_iterations, raw);

  std::vector<const char*> argv{"ioncat"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  CliCommand cmd;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    cmd.help = true;
    cmd.help_text = app.help();
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (raw.format == "json") {
    cmd.format = OutputFormat::Json;
  } else if (raw.format == "csv") {
    cmd.format = OutputFormat::Csv;
  } else {
    bad_value("--format", raw.format, "json|csv");
  }
  cmd.output = raw.output;

  if (model->parsed()) {
    cmd.verb = Verb::Model;
    if (!raw.modulus.empty() && !raw.ions.empty()) {
      throw UsageError("--N and --ions are mutually exclusive");
    }
    if (!raw.modulus.empty()) {
      cmd.moduli = parse_int_range("--N", raw.modulus);
    } else if (!raw.ions.empty()) {
      for (int m : parse_int_range("--ions", raw.ions)) {
        if (m < 1 || m > 30) {
          throw UsageError("--ions: must lie in 1..30");
        }
        cmd.moduli.push_back(1 << m);
      }
    } else {
      throw UsageError("model requires --N or --ions");
    }
    for (int n : cmd.moduli) {
      if (n < 2) {
        throw UsageError("--N: register size must be >= 2, got " + std::to_string(n));
      }
    }
    if (raw.iterations != "auto") {
      cmd.iteration_values = parse_int_range("--iterations", raw.iterations);
      if (cmd.iteration_values.front() < 0) {
        throw UsageError("--iterations: counts must be >= 0");
      }
    }
    return cmd;
  }

  if (sweep_alpha->parsed()) {
    cmd.verb = Verb::SweepAlpha;
    cmd.alpha_values = parse_real_range("--alpha", raw.alpha);
    raw.alpha = std::to_string(cmd.alpha_values.front());
  } else if (sweep_iterations->parsed()) {
    cmd.verb = Verb::SweepIterations;
    if (raw.iterations.find("..") == std::string::npos) {
      bad_value("--iterations", raw.iterations, "a range a..b");
    }
    cmd.iteration_values = parse_int_range("--iterations", raw.iterations);
    if (cmd.iteration_values.front() < 0) {
      throw UsageError("--iterations: counts must be >= 0");
    }
  } else {
    cmd.verb = entangle_only->parsed() ? Verb::EntangleOnly : Verb::Prepare;
  }

  cmd.config = build_config(raw);
  if (cmd.verb == Verb::Prepare && raw.iterations != "auto") {
    cmd.config.iterations = parse_int("--iterations", raw.iterations);
    if (*cmd.config.iterations < 0) {
      throw UsageError("--iterations: count must be >= 0");
    }
  }
  return cmd;
}

void execute(const CliCommand& cmd, std::ostream& out) {
  if (cmd.help) {
    out << cmd.help_text;
    return;
  }
  switch (cmd.verb) {
    case Verb::Prepare:
      execute_prepare(cmd, out);
      break;
    case Verb::EntangleOnly:
      execute_entangle_only(cmd, out);
      break;
    case Verb::Model:
      execute_model(cmd, out);
      break;
    case Verb::SweepAlpha:
    case Verb::SweepIterations:
      execute_sweep(cmd, out);
      break;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const auto cmd = parse_args(args);
    if (cmd.output == "stdout" || cmd.output == "-") {
      execute(cmd, out);
    } else {
      std::ofstream file(cmd.output);
      if (!file) {
        throw UsageError("--output: cannot open '" + cmd.output + "' for writing");
      }
      execute(cmd, file);
    }
    return kExitSuccess;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalIntegrityError& e) {
    err << "numerical integrity: " << e.what() << '\n';
    return kExitNumericalIntegrity;
  } catch (const DegenerateMeasurementError& e) {
    err << "degenerate measurement: " << e.what() << '\n';
    return kExitDegenerateMeasurement;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IndexError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace ioncat::cli
