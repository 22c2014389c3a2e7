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

// Best responses and pure equilibria of n-player payoff tables; projection of
// a game onto two players; dominance, support enumeration and expected
// utilities for bimatrix games. All arithmetic is exact.

#ifndef OAGAME_EQUILIBRIUM_H_
#define OAGAME_EQUILIBRIUM_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oagame/engine.h"
#include "oagame/payoff.h"
#include "oagame/rational.h"

namespace oagame {

// Probability per action; read as population shares within an agent group.
struct MixedStrategy {
  std::string player;
  std::vector<std::string> actions;
  std::vector<Rational> probabilities;

  static MixedStrategy pure(std::string player, std::vector<std::string> actions, int index);

  // Throws std::invalid_argument on negative entries or a sum off 1 by more than 1e-9.
  void validate() const;
  std::vector<int> support() const;
  bool is_pure() const { return support().size() == 1; }

  bool operator==(const MixedStrategy&) const = default;
};

// Payoff of every pure action of one player against the others' strategies.
// An unset entry is an infeasible deviation.
struct DeviationCheck {
  std::string player;
  std::vector<std::string> actions;
  std::vector<std::optional<Rational>> payoffs;
  Rational equilibrium_utility;

  bool operator==(const DeviationCheck&) const = default;
};

struct EquilibriumCertificate {
  enum class Kind { kPure, kMixed };

  Kind kind = Kind::kPure;
  std::vector<MixedStrategy> strategies;
  std::vector<Rational> expected_utilities;
  std::vector<DeviationCheck> verification;
  bool degenerate = false;

  // True when no recorded deviation beats the equilibrium utility.
  bool self_consistent() const;

  bool operator==(const EquilibriumCertificate&) const = default;
};

// Player's best actions with every other player's action fixed by `others`
// (the player's own entry is ignored). Empty optional when every cell of the
// slice is infeasible.
std::optional<std::vector<int>> best_responses(const PayoffTable& table, int player, const ActionProfile& others);

// Every feasible profile at which each action is a best response, in
// canonical profile order.
std::vector<EquilibriumCertificate> pure_nash(const PayoffTable& table);
std::vector<EquilibriumCertificate> pure_nash(const Bimatrix& bm);

// Two-player view of a game: the remaining players' actions and the outcome
// are completed per `policy` over all admissible rows with the given pair of
// actions.
Bimatrix project_bimatrix(const ValidatedGame& game, const Semantics& semantics, const CompletionPolicy& policy,
                          int row_player, int col_player, const EngineOptions& options = {});

enum class DominanceNotion { kStrict, kWeak };

std::string_view to_string(DominanceNotion notion);

struct Elimination {
  int player = 0;  // 0 = row player, 1 = column player
  std::string player_name;
  std::string action;
  std::string dominator;
  // Strongest notion that holds for this pair when it was eliminated.
  DominanceNotion notion = DominanceNotion::kStrict;

  bool operator==(const Elimination&) const = default;
};

struct DominanceResult {
  DominanceNotion notion = DominanceNotion::kStrict;
  bool iterated = false;
  std::vector<Elimination> trace;
  std::vector<int> surviving_rows;
  std::vector<int> surviving_cols;
  Bimatrix surviving;

  bool operator==(const DominanceResult&) const = default;
};

// Does pure action `a` dominate `b` for `player` over the opponent actions in
// `opponents`? Weak dominance means never worse and better at least once.
bool dominates(const Bimatrix& bm, int player, int a, int b, DominanceNotion notion,
               const std::vector<int>& opponents);

// Without iteration, removes every action dominated in the full matrix. With
// iteration, removes one action at a time, scanning the row player then the
// column player and actions in declaration order, until a fixed point.
DominanceResult dominance_analysis(const Bimatrix& bm, DominanceNotion notion, bool iterate);

struct MixedNashResult {
  std::vector<EquilibriumCertificate> equilibria;
  // Set when some support pair admits a continuum of solutions, or an
  // equilibrium has more pure best responses than the opponent's support
  // size. Equilibria outside equal-size supports may then be missing.
  bool degenerate = false;
};

inline constexpr std::size_t kMaxSupportEnumerationActions = 8;

// All equilibria found by enumerating equal-size support pairs and solving
// the indifference equations exactly. Ordered by support size, then row
// support, then column support. Throws std::invalid_argument above
// kMaxSupportEnumerationActions actions per side or on missing cells.
MixedNashResult mixed_nash_2p(const Bimatrix& bm);

// Bilinear expectation sum_a sum_b x(a) y(b) payoff(a, b) for both players.
std::pair<Rational, Rational> expected_utility(const Bimatrix& bm, const MixedStrategy& row,
                                               const MixedStrategy& col);

}  // namespace oagame

#endif  // OAGAME_EQUILIBRIUM_H_
