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

// Reader and writer for the line-oriented .game format:
//
//   # comment
//   game "Open Access"
//   player Funders alias Funder actions: "Demand publications", "Perish"
//   variable Income alias "Editor income" owner: Editors values: More=1, Less=0 valias Maximal->More
//   utility Editors = Income
//   rule if Funder=`Demand publications' and Editors=`Grant TA' then Editor's Income = `More'.
//
// Rule sentences accept ` ' " and typographic quotes, `and` or `,` between
// atoms, possessive prefixes naming the owner of a variable, and multiword
// variable names. One statement per line.

#ifndef OAGAME_DSL_H_
#define OAGAME_DSL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "oagame/model.h"

namespace oagame {

struct ParseError {
  enum class Kind { kLex, kSyntax, kResolution, kDomainMismatch };

  SourceSpan span;
  Kind kind = Kind::kSyntax;
  std::string message;
  std::string token;

  bool operator==(const ParseError&) const = default;
};

struct Warning {
  SourceSpan span;
  std::string message;

  bool operator==(const Warning&) const = default;
};

std::string_view to_string(ParseError::Kind kind);
// "line:col-col: kind: message"
std::string format_diagnostic(const ParseError& error);
std::string format_diagnostic(const Warning& warning);

struct ParseOptions {
  Binding binding = Binding::kStrict;
};

struct ParseResult {
  std::optional<GameSpec> game;
  std::vector<ParseError> errors;
  std::vector<Warning> warnings;

  bool ok() const { return game.has_value() && errors.empty(); }
};

// Parses a whole .game text. Never stops at the first problem: every
// malformed line contributes its own diagnostic.
ParseResult parse_game_spec(std::string_view text, ParseOptions options = {});

struct RuleParseResult {
  std::optional<Rule> rule;
  std::optional<ParseError> error;
  std::vector<Warning> warnings;
};

// Parses one rule sentence against an already declared game. The leading
// `rule` keyword and the trailing period are optional. `line` and
// `column_offset` position the sentence inside a larger source for spans.
RuleParseResult parse_rule(std::string_view text, const GameSpec& game, Binding mode,
                           int line = 1, int column_offset = 0);

struct ValidationResult;
ValidationResult validate_game(GameSpec game);

// A game that passed every structural check. Only validate_game constructs one.
class ValidatedGame {
 public:
  const GameSpec& spec() const { return spec_; }
  std::uint64_t action_profile_count() const { return action_profiles_; }
  std::uint64_t row_space_size() const { return row_space_; }
  const std::vector<Warning>& warnings() const { return warnings_; }

 private:
  friend ValidationResult validate_game(GameSpec game);
  ValidatedGame() = default;

  GameSpec spec_;
  std::uint64_t action_profiles_ = 0;
  std::uint64_t row_space_ = 0;
  std::vector<Warning> warnings_;
};

struct ValidationResult {
  std::optional<ValidatedGame> game;
  std::vector<ParseError> errors;
  std::vector<Warning> warnings;

  bool ok() const { return game.has_value(); }
};

// Parse then validate; diagnostics of both stages are merged.
ValidationResult load_game(std::string_view text, ParseOptions options = {});

// Canonical .game text. parse_game_spec(serialize_game_spec(g)) == g.
std::string serialize_game_spec(const GameSpec& game);

// Tree form of a game for machine use; rule atoms are written by name.
nlohmann::ordered_json game_to_json(const GameSpec& game);
ParseResult game_from_json(const nlohmann::json& tree, ParseOptions options = {});

}  // namespace oagame

#endif  // OAGAME_DSL_H_
