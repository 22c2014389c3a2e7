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

#ifndef OAGAME_MODEL_H_
#define OAGAME_MODEL_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oagame {

// Position of a construct in a .game source. Lines and columns are 1-based,
// columns count bytes.
struct SourceSpan {
  int line = 0;
  int column_start = 0;
  int column_end = 0;

  bool operator==(const SourceSpan&) const = default;
};

// Raised when a name (player, action, variable, value) cannot be resolved.
class ResolutionError : public std::runtime_error {
 public:
  ResolutionError(std::string subject, std::string token, const std::string& what)
      : std::runtime_error(what), subject_(std::move(subject)), token_(std::move(token)) {}
  const std::string& subject() const { return subject_; }
  const std::string& token() const { return token_; }

 private:
  std::string subject_;
  std::string token_;
};

// Raised by agent_utility for a player that has no utility definition.
class MissingUtilityError : public std::runtime_error {
 public:
  explicit MissingUtilityError(const std::string& player)
      : std::runtime_error("player '" + player + "' has no utility definition"),
        player_(player) {}
  const std::string& player() const { return player_; }

 private:
  std::string player_;
};

struct PlayerDef {
  std::string name;
  std::vector<std::string> actions;
  std::vector<std::string> aliases;

  bool operator==(const PlayerDef&) const = default;
};

struct OutcomeValue {
  std::string name;
  std::int64_t score = 0;

  bool operator==(const OutcomeValue&) const = default;
};

struct ValueAlias {
  std::string alias;
  std::string canonical;

  bool operator==(const ValueAlias&) const = default;
};

struct OutcomeVarDef {
  std::string name;
  std::string owner;
  std::vector<OutcomeValue> values;
  std::vector<ValueAlias> value_aliases;
  std::vector<std::string> aliases;

  // Index of a value name or alias, compared after name normalisation.
  std::optional<int> find_value(std::string_view token) const;
  std::int64_t max_score() const;

  bool operator==(const OutcomeVarDef&) const = default;
};

struct UtilityDef {
  std::string player;
  std::vector<std::string> terms;

  bool operator==(const UtilityDef&) const = default;
};

// One atom of a rule. Outcome atoms appear in both conditions and
// assignments, action atoms only in conditions. An inert atom carries a
// reference that did not resolve under lenient binding: as a condition it
// never holds, as an assignment it is always considered satisfied.
struct Atom {
  enum class Kind { kAction, kOutcome, kInert };

  Kind kind = Kind::kOutcome;
  int subject = -1;  // player index (kAction) or variable index (kOutcome)
  int value = -1;    // action index or value index
  std::string lhs;   // source spelling, kept for inert atoms and diagnostics
  std::string rhs;

  static Atom action(int player, int action) { return {Kind::kAction, player, action, {}, {}}; }
  static Atom outcome(int variable, int value) { return {Kind::kOutcome, variable, value, {}, {}}; }
  static Atom inert(std::string lhs, std::string rhs) {
    return {Kind::kInert, -1, -1, std::move(lhs), std::move(rhs)};
  }

  // Structural equality: resolved atoms compare by indices, inert ones by text.
  bool operator==(const Atom& other) const;
};

struct Rule {
  std::vector<Atom> condition;
  std::vector<Atom> consequence;
  std::vector<Atom> otherwise;
  std::string source;
  SourceSpan span;

  bool has_otherwise() const { return !otherwise.empty(); }
  bool is_inert() const;

  // Source text and span are not part of a rule's structure.
  bool operator==(const Rule& other) const {
    return condition == other.condition && consequence == other.consequence &&
           otherwise == other.otherwise;
  }
};

enum class Binding { kStrict, kLenient };

struct GameSpec {
  std::string name;
  std::vector<PlayerDef> players;
  std::vector<OutcomeVarDef> variables;
  std::vector<Rule> rules;
  std::vector<UtilityDef> utilities;
  Binding binding = Binding::kStrict;

  std::optional<int> find_player(std::string_view name) const;
  std::optional<int> find_variable(std::string_view name) const;
  int player_index(std::string_view name) const;
  int variable_index(std::string_view name) const;
  const UtilityDef* utility_for(std::string_view player) const;

  bool operator==(const GameSpec& other) const {
    return name == other.name && players == other.players && variables == other.variables &&
           rules == other.rules && utilities == other.utilities;
  }
};

// Action index per player, in player declaration order.
using ActionProfile = std::vector<int>;
// Value index per outcome variable, in variable declaration order.
using OutcomeAssignment = std::vector<int>;

struct ScenarioRow {
  ActionProfile actions;
  OutcomeAssignment outcomes;

  bool operator==(const ScenarioRow&) const = default;
  auto operator<=>(const ScenarioRow&) const = default;
};

// Lower-cases ASCII letters, collapses whitespace runs and trims. Used for
// every name comparison in the model.
std::string normalize_name(std::string_view text);

std::int64_t value_of(const OutcomeVarDef& var, std::string_view value_name);
std::int64_t value_of(const OutcomeVarDef& var, int value_index);

std::int64_t agent_utility(const GameSpec& game, std::string_view player, const ScenarioRow& row);
std::int64_t global_utility(const GameSpec& game, const ScenarioRow& row);
// Utility of every player in declaration order; players without a utility
// definition score zero.
std::vector<std::int64_t> utility_vector(const GameSpec& game, const ScenarioRow& row);

// Builds a row from display names. Throws ResolutionError on unknown names or
// when the maps are not total.
ScenarioRow make_row(const GameSpec& game,
                     const std::vector<std::pair<std::string, std::string>>& actions,
                     const std::vector<std::pair<std::string, std::string>>& outcomes);

}  // namespace oagame

#endif  // OAGAME_MODEL_H_
