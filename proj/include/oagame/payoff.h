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

#ifndef OAGAME_PAYOFF_H_
#define OAGAME_PAYOFF_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oagame/model.h"

namespace oagame {

// Utilities of every player at every action profile of an n-player game.
// Profiles are stored in canonical mixed-radix order: the first player's
// action is the most significant digit.
class PayoffTable {
 public:
  struct Cell {
    bool feasible = false;
    std::vector<std::int64_t> utilities;
    // Scenario row that produced the utilities, when derived from a game.
    std::optional<ScenarioRow> witness;

    bool operator==(const Cell&) const = default;
  };

  PayoffTable() = default;
  PayoffTable(std::vector<std::string> players, std::vector<std::vector<std::string>> actions);

  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::vector<std::string>>& actions() const { return actions_; }
  std::size_t player_count() const { return players_.size(); }
  std::size_t profile_count() const { return cells_.size(); }

  std::size_t index_of(const ActionProfile& profile) const;
  ActionProfile profile_at(std::size_t index) const;

  const Cell& cell(const ActionProfile& profile) const { return cells_.at(index_of(profile)); }
  const Cell& cell_at(std::size_t index) const { return cells_.at(index); }
  void set(const ActionProfile& profile, std::vector<std::int64_t> utilities,
           std::optional<ScenarioRow> witness = std::nullopt);
  void set_infeasible(const ActionProfile& profile);

  bool operator==(const PayoffTable&) const = default;

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<Cell> cells_;
};

// A two-player game as a matrix of payoff pairs. Cells may be empty when the
// bimatrix was projected from a game in which no completion is admissible.
struct Bimatrix {
  enum class Provenance { kProjected, kLoaded };

  std::string row_player;
  std::vector<std::string> row_actions;
  std::string col_player;
  std::vector<std::string> col_actions;
  std::vector<std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>>> cells;
  Provenance provenance = Provenance::kLoaded;
  std::string note;

  std::size_t rows() const { return row_actions.size(); }
  std::size_t cols() const { return col_actions.size(); }
  bool complete() const;
  std::int64_t row_payoff(std::size_t r, std::size_t c) const { return cells.at(r).at(c).value().first; }
  std::int64_t col_payoff(std::size_t r, std::size_t c) const { return cells.at(r).at(c).value().second; }

  // Throws std::invalid_argument unless dimensions agree and every cell is present.
  void require_complete() const;

  PayoffTable to_payoff_table() const;

  bool operator==(const Bimatrix&) const = default;
};

// Bimatrix text format:
//   rows: <player>: <action>,<action>,...
//   cols: <player>: <action>,<action>,...
//   (u1,u2) (u1,u2) ...        one line per row action
// Blank lines and '#' comments are ignored; '-' marks an infeasible cell.
Bimatrix parse_bimatrix(std::string_view text);
std::string serialize_bimatrix(const Bimatrix& bm);

}  // namespace oagame

#endif  // OAGAME_PAYOFF_H_
