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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ioncat/protocol.hpp"

namespace ioncat {

inline constexpr std::string_view kSchemaVersion = "1.0";

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

nlohmann::json config_to_json(const ProtocolConfig& cfg);
ProtocolConfig config_from_json(const nlohmann::json& j);

/// Single-run document: config, theta_effective, t_exact, t_rounded,
/// success_probability, fidelity_to_target, sector_weights, trace, cutoff,
/// tail_bound, schema_version (plus baseline, outcome and iteration count).
nlohmann::json report_to_json(const SimulationReport& report);
SimulationReport report_from_json(const nlohmann::json& j);

/// Rectangular result table written as CSV or as a JSON array of row objects.
class Table {
 public:
  using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string, bool>;

  explicit Table(std::vector<std::string> columns);

  void add_row(std::vector<Cell> row);
  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

  void write_csv(std::ostream& out) const;
  nlohmann::json to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Columns shared by every per-run CSV row.
std::vector<std::string> run_row_columns();
std::vector<Table::Cell> run_row(const SimulationReport& report);

}  // namespace ioncat
