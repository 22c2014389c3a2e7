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

// Scenario enumeration: action profiles, admissible scenario rows under the
// game's rules, global-utility maxima and payoff tables.

#ifndef OAGAME_ENGINE_H_
#define OAGAME_ENGINE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oagame/dsl.h"
#include "oagame/model.h"
#include "oagame/payoff.h"

namespace oagame {

struct Semantics {
  // Only per-row implication filtering exists today.
  enum class Mode { kImplicationFilter };

  Binding binding = Binding::kStrict;
  Mode mode = Mode::kImplicationFilter;

  bool operator==(const Semantics&) const = default;
};

std::string to_string(const Semantics& semantics);

struct EngineOptions {
  // Number of threads enumerating action-profile ranges. Output does not
  // depend on it.
  int workers = 1;
};

struct EnumerationReport {
  std::uint64_t action_profiles = 0;
  std::uint64_t row_space = 0;
  std::uint64_t admissible = 0;
  std::optional<std::int64_t> max_global_utility;  // empty when nothing is admissible
  std::uint64_t max_global_utility_rows = 0;
  Semantics semantics;

  bool operator==(const EnumerationReport&) const = default;
};

// How a payoff vector is chosen among the admissible completions of a
// (partial) action profile. Ties go to the first completion in canonical
// order: players then variables in declaration order, values in declared order.
struct CompletionPolicy {
  enum class Kind { kMaxGlobalUtility, kOptimistic, kPessimistic, kFixed };

  Kind kind = Kind::kMaxGlobalUtility;
  int player = -1;  // subject of optimistic/pessimistic
  // kFixed: -1 leaves an entry free.
  std::vector<int> fixed_actions;
  std::vector<int> fixed_outcomes;

  static CompletionPolicy max_global_utility() { return {}; }
  static CompletionPolicy optimistic(int player) { return {Kind::kOptimistic, player, {}, {}}; }
  static CompletionPolicy pessimistic(int player) { return {Kind::kPessimistic, player, {}, {}}; }
  static CompletionPolicy fixed(std::vector<int> actions, std::vector<int> outcomes) {
    return {Kind::kFixed, -1, std::move(actions), std::move(outcomes)};
  }

  bool operator==(const CompletionPolicy&) const = default;
};

// Parses "max-gu", "optimistic:<player>", "pessimistic:<player>" and
// "fixed:<Name>=<value>;<Name>=<value>..." (names are players or variables).
CompletionPolicy parse_policy(std::string_view text, const GameSpec& game);
std::string to_string(const CompletionPolicy& policy, const GameSpec& game);

// The game's rules re-bound under `semantics.binding` if it differs from the
// binding the game was parsed with.
std::vector<Rule> effective_rules(const GameSpec& game, const Semantics& semantics);

// All Π|A_i| profiles in canonical lexicographic order.
std::vector<ActionProfile> enumerate_profiles(const GameSpec& game);
void for_each_profile(const GameSpec& game, const std::function<void(const ActionProfile&)>& visit);

bool atom_holds(const Atom& atom, const ScenarioRow& row);
// condition => consequence, and (not condition) => otherwise when present.
bool rule_satisfied(const Rule& rule, const ScenarioRow& row);

struct AdmissibleSet {
  std::vector<ScenarioRow> rows;
  EnumerationReport report;
};

AdmissibleSet admissible_rows(const ValidatedGame& game, const Semantics& semantics = {},
                              const EngineOptions& options = {});
// Counts only; same figures as admissible_rows().report.
EnumerationReport enumeration_report(const ValidatedGame& game, const Semantics& semantics = {},
                                     const EngineOptions& options = {});

struct TopRows {
  bool empty = true;  // nothing admissible
  std::int64_t max_global_utility = 0;
  std::vector<ScenarioRow> rows;
};

TopRows top_gu_rows(const ValidatedGame& game, const Semantics& semantics = {}, const EngineOptions& options = {});

// Index of the candidate the policy picks among admissible rows (for kFixed,
// the first candidate matching the fragments), or empty when none qualifies.
std::optional<std::size_t> select_completion(const GameSpec& game, const std::vector<ScenarioRow>& candidates,
                                             const CompletionPolicy& policy);

// Utility vectors for every action profile; profiles without an admissible
// completion matching the policy are infeasible.
PayoffTable derive_payoff_table(const ValidatedGame& game, const Semantics& semantics,
                                const CompletionPolicy& policy, const EngineOptions& options = {});

}  // namespace oagame

#endif  // OAGAME_ENGINE_H_
