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

#include <ostream>
#include <string>
#include <vector>

#include "ioncat/errors.hpp"
#include "ioncat/protocol.hpp"

namespace ioncat::cli {

/// Bad command line: unknown flag, missing flag, malformed value, or a value
/// outside its domain.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Verb { Prepare, EntangleOnly, Model, SweepAlpha, SweepIterations };
enum class OutputFormat { Json, Csv };

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumericalIntegrity = 3;
inline constexpr int kExitDegenerateMeasurement = 4;

struct CliCommand {
  Verb verb = Verb::Prepare;
  ProtocolConfig config;
  OutputFormat format = OutputFormat::Json;
  std::string output = "stdout";
  bool help = false;
  std::string help_text;

  std::vector<double> alpha_values;   ///< sweep-alpha rows
  std::vector<int> iteration_values;  ///< sweep-iterations rows, model columns
  std::vector<int> moduli;            ///< model: register sizes N
};

/// `args` excludes the program name. Throws UsageError.
CliCommand parse_args(const std::vector<std::string>& args);

/// Writes the report document for `cmd` to `out`. Library errors propagate.
void execute(const CliCommand& cmd, std::ostream& out);

/// parse_args + execute with errors mapped to exit codes and reported on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ioncat::cli
