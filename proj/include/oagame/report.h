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

#ifndef OAGAME_REPORT_H_
#define OAGAME_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "oagame/engine.h"
#include "oagame/equilibrium.h"

namespace oagame {

struct InputDigest {
  std::string name;
  std::string fnv1a64;

  bool operator==(const InputDigest&) const = default;
};

std::string fnv1a64_hex(std::string_view bytes);

// Generic string table: scenario rows, payoff tables.
struct RowTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const RowTable&) const = default;
};

// One column per player, then per variable, then GU, then U_<player>.
RowTable scenario_table(const GameSpec& game, const std::vector<ScenarioRow>& rows);
// One column per player, then U_<player>; infeasible cells print "-".
RowTable payoff_rows(const PayoffTable& table);

// One published figure next to the value computed here and the value this
// repository has on record. status is "match" (computed equals the published
// figure), "documented-deviation" (computed equals the recorded value but not
// the published one) or "drift" (computed differs from the record).
struct Comparison {
  std::string claim;
  std::string paper;
  std::string computed;
  std::string recorded;
  std::string status;

  bool operator==(const Comparison&) const = default;
};

Comparison compare(std::string claim, std::string paper, std::string computed, std::string recorded);

struct ExpectedUtilityReport {
  MixedStrategy row;
  MixedStrategy col;
  Rational row_utility;
  Rational col_utility;

  bool operator==(const ExpectedUtilityReport&) const = default;
};

struct Report {
  std::string tool = "oagame";
  std::string version;
  std::string command;
  std::vector<InputDigest> inputs;
  std::optional<EnumerationReport> enumeration;
  std::optional<RowTable> rows;
  std::optional<Bimatrix> bimatrix;
  std::optional<DominanceResult> dominance;
  std::vector<EquilibriumCertificate> certificates;
  std::optional<bool> degenerate;
  std::optional<ExpectedUtilityReport> expected;
  std::vector<Comparison> comparison;
  std::vector<std::string> notes;

  bool operator==(const Report&) const = default;
};

enum class OutputFormat { kTable, kDelimited, kJson };

std::optional<OutputFormat> parse_output_format(std::string_view text);

nlohmann::ordered_json report_to_json(const Report& report);
// Inverse of report_to_json. Throws nlohmann::json::exception or
// std::invalid_argument on malformed input.
Report report_from_json(const nlohmann::json& tree);

std::string emit_report(const Report& report, OutputFormat format);

}  // namespace oagame

#endif  // OAGAME_REPORT_H_
