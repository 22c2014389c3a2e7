// Copyright 2026 The oagame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver. Exit status 0 on success, 1 on diagnostics or on a
// computed figure drifting from its recorded value, 2 on usage errors and
// unreadable or unwritable files.

#ifndef OAGAME_CLI_H_
#define OAGAME_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "oagame/engine.h"
#include "oagame/report.h"

namespace oagame {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming the default output format.
inline constexpr const char* kFormatEnvVar = "OAGAME_FORMAT";

std::string version_string();

struct CliOutcome {
  int status = kExitOk;
  std::optional<Report> report;
};

// `args` excludes the program name. The rendered report goes to `out` unless
// --output names a file; diagnostics go to `err`.
CliOutcome run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Values this repository has on record for the bundled fixtures, produced by
// the brute-force oracle in the test tree.
struct RecordedFigures {
  std::uint64_t action_profiles;
  std::uint64_t row_space;
  std::uint64_t admissible;
  std::int64_t max_global_utility;
  std::uint64_t max_global_utility_rows;
  // Projection of the bundled game onto (Academics, Editors) under max-gu at
  // the cells of table5.bmx, row-major in its action order, rendered "(u1,u2)".
  std::vector<std::string> projected_cells;
};

const RecordedFigures& recorded_figures();

// Full analysis of the bundled fixtures with the comparison block filled in.
Report reproduce_report(const EngineOptions& options = {});

}  // namespace oagame

#endif  // OAGAME_CLI_H_
