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

#include "oagame/model.h"

#include <algorithm>
#include <cctype>

namespace oagame {

std::string normalize_name(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

bool Atom::operator==(const Atom& other) const {
  if (kind != other.kind) return false;
  if (kind == Kind::kInert) {
    return normalize_name(lhs) == normalize_name(other.lhs) &&
           normalize_name(rhs) == normalize_name(other.rhs);
  }
  return subject == other.subject && value == other.value;
}

bool Rule::is_inert() const {
  auto inert = [](const Atom& a) { return a.kind == Atom::Kind::kInert; };
  return std::any_of(condition.begin(), condition.end(), inert) ||
         std::any_of(consequence.begin(), consequence.end(), inert) ||
         std::any_of(otherwise.begin(), otherwise.end(), inert);
}

std::optional<int> OutcomeVarDef::find_value(std::string_view token) const {
  const std::string key = normalize_name(token);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (normalize_name(values[i].name) == key) return static_cast<int>(i);
  }
  for (const ValueAlias& alias : value_aliases) {
    if (normalize_name(alias.alias) != key) continue;
    const std::string canonical = normalize_name(alias.canonical);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (normalize_name(values[i].name) == canonical) return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

std::int64_t OutcomeVarDef::max_score() const {
  std::int64_t best = values.empty() ? 0 : values.front().score;
  for (const OutcomeValue& v : values) best = std::max(best, v.score);
  return best;
}

std::optional<int> GameSpec::find_player(std::string_view name) const {
  const std::string key = normalize_name(name);
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (normalize_name(players[i].name) == key) return static_cast<int>(i);
  }
  for (std::size_t i = 0; i < players.size(); ++i) {
    for (const std::string& alias : players[i].aliases) {
      if (normalize_name(alias) == key) return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

std::optional<int> GameSpec::find_variable(std::string_view name) const {
  const std::string key = normalize_name(name);
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (normalize_name(variables[i].name) == key) return static_cast<int>(i);
  }
  for (std::size_t i = 0; i < variables.size(); ++i) {
    for (const std::string& alias : variables[i].aliases) {
      if (normalize_name(alias) == key) return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

int GameSpec::player_index(std::string_view name) const {
  if (auto index = find_player(name)) return *index;
  throw ResolutionError("player", std::string(name),
                        "unknown player '" + std::string(name) + "'");
}

int GameSpec::variable_index(std::string_view name) const {
  if (auto index = find_variable(name)) return *index;
  throw ResolutionError("variable", std::string(name),
                        "unknown outcome variable '" + std::string(name) + "'");
}

const UtilityDef* GameSpec::utility_for(std::string_view player) const {
  const auto index = find_player(player);
  if (!index) return nullptr;
  for (const UtilityDef& u : utilities) {
    if (find_player(u.player) == index) return &u;
  }
  return nullptr;
}

std::int64_t value_of(const OutcomeVarDef& var, std::string_view value_name) {
  if (auto index = var.find_value(value_name)) return var.values[*index].score;
  throw ResolutionError(var.name, std::string(value_name),
                        "variable '" + var.name + "' has no value '" + std::string(value_name) + "'");
}

std::int64_t value_of(const OutcomeVarDef& var, int value_index) {
  return var.values.at(static_cast<std::size_t>(value_index)).score;
}

std::int64_t agent_utility(const GameSpec& game, std::string_view player, const ScenarioRow& row) {
  const UtilityDef* def = game.utility_for(player);
  if (def == nullptr) throw MissingUtilityError(std::string(player));
  std::int64_t total = 0;
  for (const std::string& term : def->terms) {
    const int v = game.variable_index(term);
    total += value_of(game.variables[v], row.outcomes.at(v));
  }
  return total;
}

std::int64_t global_utility(const GameSpec& game, const ScenarioRow& row) {
  std::int64_t total = 0;
  for (std::size_t v = 0; v < game.variables.size(); ++v) {
    total += value_of(game.variables[v], row.outcomes.at(v));
  }
  return total;
}

std::vector<std::int64_t> utility_vector(const GameSpec& game, const ScenarioRow& row) {
  std::vector<std::int64_t> out;
  out.reserve(game.players.size());
  for (const PlayerDef& p : game.players) {
    out.push_back(game.utility_for(p.name) ? agent_utility(game, p.name, row) : 0);
  }
  return out;
}

ScenarioRow make_row(const GameSpec& game,
                     const std::vector<std::pair<std::string, std::string>>& actions,
                     const std::vector<std::pair<std::string, std::string>>& outcomes) {
  ScenarioRow row;
  row.actions.assign(game.players.size(), -1);
  row.outcomes.assign(game.variables.size(), -1);
  for (const auto& [player, action] : actions) {
    const int p = game.player_index(player);
    const auto& names = game.players[p].actions;
    auto it = std::find_if(names.begin(), names.end(), [&](const std::string& a) {
      return normalize_name(a) == normalize_name(action);
    });
    if (it == names.end()) {
      throw ResolutionError(game.players[p].name, action,
                            "player '" + game.players[p].name + "' has no action '" + action + "'");
    }
    row.actions[p] = static_cast<int>(it - names.begin());
  }
  for (const auto& [variable, value] : outcomes) {
    const int v = game.variable_index(variable);
    auto index = game.variables[v].find_value(value);
    if (!index) {
      throw ResolutionError(game.variables[v].name, value,
                            "variable '" + game.variables[v].name + "' has no value '" + value + "'");
    }
    row.outcomes[v] = *index;
  }
  for (std::size_t p = 0; p < row.actions.size(); ++p) {
    if (row.actions[p] < 0) {
      throw ResolutionError(game.players[p].name, "", "row has no action for '" + game.players[p].name + "'");
    }
  }
  for (std::size_t v = 0; v < row.outcomes.size(); ++v) {
    if (row.outcomes[v] < 0) {
      throw ResolutionError(game.variables[v].name, "",
                            "row has no value for '" + game.variables[v].name + "'");
    }
  }
  return row;
}

}  // namespace oagame
