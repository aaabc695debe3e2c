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

#include "ioncat/report.hpp"

#include <array>
#include <charconv>
#include <system_error>

#include "ioncat/errors.hpp"

namespace ioncat {
namespace {

using nlohmann::json;

template <typename T>
T required(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw ParameterError(std::string("report is missing key '") + key + "'");
  }
  return j.at(key).get<T>();
}

std::string csv_cell(const Table::Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<V, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<V, bool>) {
          return v ? "true" : "false";
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    throw ParameterError("cannot format floating-point value");
  }
  return std::string(buf.data(), end);
}

json config_to_json(const ProtocolConfig& cfg) {
  json j;
  j["ions"] = cfg.qubits;
  j["alpha"] = {cfg.alpha.real(), cfg.alpha.imag()};
  j["target"] = cfg.k0;
  j["mode"] = std::string(to_string(cfg.mode));
  j["iterations"] = cfg.iterations ? json(*cfg.iterations) : json("auto");
  j["cutoff"] = cfg.cutoff ? json(*cfg.cutoff) : json("auto");
  j["epsilon"] = cfg.epsilon;
  j["seed"] = cfg.seed;
  j["postselect"] = cfg.postselect;
  return j;
}

ProtocolConfig config_from_json(const json& j) {
  ProtocolConfig cfg;
  cfg.qubits = required<int>(j, "ions");
  const auto alpha = required<std::vector<double>>(j, "alpha");
  if (alpha.size() != 2) {
    throw ParameterError("config alpha must be [re, im]");
  }
  cfg.alpha = {alpha[0], alpha[1]};
  cfg.k0 = required<int>(j, "target");
  cfg.mode = parse_grover_mode(required<std::string>(j, "mode"));
  if (j.at("iterations").is_number_integer()) {
    cfg.iterations = j.at("iterations").get<int>();
  }
  if (j.at("cutoff").is_number_integer()) {
    cfg.cutoff = j.at("cutoff").get<int>();
  }
  cfg.epsilon = required<double>(j, "epsilon");
  cfg.seed = required<std::uint64_t>(j, "seed");
  cfg.postselect = required<bool>(j, "postselect");
  return cfg;
}

json report_to_json(const SimulationReport& r) {
  json trace = json::array();
  for (const auto& rec : r.trace) {
    trace.push_back({{"iteration", rec.iteration},
                     {"marked_amplitude", rec.marked},
                     {"unmarked_amplitude", rec.unmarked},
                     {"success_probability", rec.success}});
  }
  json j;
  j["schema_version"] = std::string(kSchemaVersion);
  j["config"] = config_to_json(r.config);
  j["cutoff"] = r.cutoff;
  j["tail_bound"] = r.tail_bound;
  j["sector_weights"] = r.sector_weights.weights;
  j["baseline_probability"] = r.baseline_probability;
  j["theta_effective"] = r.theta_effective;
  j["t_exact"] = r.t_exact;
  j["t_rounded"] = r.t_rounded;
  j["iterations_run"] = r.iterations_run;
  j["success_probability"] = r.success_probability;
  j["outcome"] = {{"k", r.outcome}, {"probability", r.outcome_probability}};
  j["fidelity_to_target"] = r.fidelity_to_target;
  j["trace"] = std::move(trace);
  return j;
}

SimulationReport report_from_json(const json& j) {
  if (required<std::string>(j, "schema_version") != kSchemaVersion) {
    throw ParameterError("unsupported report schema version");
  }
  SimulationReport r;
  r.config = config_from_json(j.at("config"));
  r.cutoff = required<int>(j, "cutoff");
  r.tail_bound = required<double>(j, "tail_bound");
  r.sector_weights.weights = required<std::vector<double>>(j, "sector_weights");
  r.sector_weights.modulus = static_cast<int>(r.sector_weights.weights.size());
  r.baseline_probability = required<double>(j, "baseline_probability");
  r.theta_effective = required<double>(j, "theta_effective");
  r.t_exact = required<double>(j, "t_exact");
  r.t_rounded = required<int>(j, "t_rounded");
  r.iterations_run = required<int>(j, "iterations_run");
  r.success_probability = required<double>(j, "success_probability");
  r.outcome = j.at("outcome").at("k").get<int>();
  r.outcome_probability = j.at("outcome").at("probability").get<double>();
  r.fidelity_to_target = required<double>(j, "fidelity_to_target");
  for (const auto& rec : j.at("trace")) {
    r.trace.push_back({rec.at("iteration").get<int>(),
                       rec.at("marked_amplitude").get<double>(),
                       rec.at("unmarked_amplitude").get<double>(),
                       rec.at("success_probability").get<double>()});
  }
  return r;
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw DimensionError("table row has " + std::to_string(row.size()) + " cells, expected " +
                         std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

void Table::write_csv(std::ostream& out) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    out << (c ? "," : "") << columns_[c];
  }
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << csv_cell(row[c]);
    }
    out << '\n';
  }
}

json Table::to_json() const {
  json rows = json::array();
  for (const auto& row : rows_) {
    json obj = json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::visit([&](const auto& v) { obj[columns_[c]] = v; }, row[c]);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

std::vector<std::string> run_row_columns() {
  return {"ions",          "alpha_re",           "alpha_im",         "target",
          "mode",          "seed",               "postselect",       "cutoff",
          "tail_bound",    "baseline_probability", "theta_effective", "t_exact",
          "t_rounded",     "iterations_run",     "success_probability", "outcome",
          "outcome_probability", "fidelity_to_target"};
}

std::vector<Table::Cell> run_row(const SimulationReport& r) {
  return {std::int64_t{r.config.qubits},
          r.config.alpha.real(),
          r.config.alpha.imag(),
          std::int64_t{r.config.k0},
          std::string(to_string(r.config.mode)),
          std::uint64_t{r.config.seed},
          r.config.postselect,
          std::int64_t{r.cutoff},
          r.tail_bound,
          r.baseline_probability,
          r.theta_effective,
          r.t_exact,
          std::int64_t{r.t_rounded},
          std::int64_t{r.iterations_run},
          r.success_probability,
          std::int64_t{r.outcome},
          r.outcome_probability,
          r.fidelity_to_target};
}

}  // namespace ioncat
