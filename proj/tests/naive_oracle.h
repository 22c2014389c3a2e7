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

// Brute-force reference implementations used only by the tests. Each one
// walks the full space with plain loops and shares no evaluation code with
// the library: only the data types are reused.

#ifndef OAGAME_TESTS_NAIVE_ORACLE_H_
#define OAGAME_TESTS_NAIVE_ORACLE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oagame/model.h"
#include "oagame/payoff.h"
#include "oagame/rational.h"

namespace oracle {

using oagame::Atom;
using oagame::GameSpec;
using oagame::Rational;
using oagame::Rule;
using oagame::ScenarioRow;

// Decodes a flat index over actions then outcomes, last digit fastest.
inline ScenarioRow decode_row(const GameSpec& g, std::uint64_t index) {
  std::vector<int> radix;
  for (const auto& p : g.players) radix.push_back(static_cast<int>(p.actions.size()));
  for (const auto& v : g.variables) radix.push_back(static_cast<int>(v.values.size()));
  std::vector<int> digits(radix.size(), 0);
  for (std::size_t i = radix.size(); i-- > 0;) {
    digits[i] = static_cast<int>(index % static_cast<std::uint64_t>(radix[i]));
    index /= static_cast<std::uint64_t>(radix[i]);
  }
  ScenarioRow row;
  row.actions.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(g.players.size()));
  row.outcomes.assign(digits.begin() + static_cast<std::ptrdiff_t>(g.players.size()), digits.end());
  return row;
}

inline std::uint64_t row_space(const GameSpec& g) {
  std::uint64_t n = 1;
  for (const auto& p : g.players) n *= p.actions.size();
  for (const auto& v : g.variables) n *= v.values.size();
  return n;
}

inline bool holds(const Atom& a, const ScenarioRow& row) {
  switch (a.kind) {
    case Atom::Kind::kAction: return row.actions[static_cast<std::size_t>(a.subject)] == a.value;
    case Atom::Kind::kOutcome: return row.outcomes[static_cast<std::size_t>(a.subject)] == a.value;
    case Atom::Kind::kInert: return false;
  }
  return false;
}

inline bool all_hold(const std::vector<Atom>& atoms, const ScenarioRow& row) {
  for (const Atom& a : atoms) {
    if (!holds(a, row)) return false;
  }
  return true;
}

inline bool all_assigned(const std::vector<Atom>& atoms, const ScenarioRow& row) {
  for (const Atom& a : atoms) {
    if (a.kind != Atom::Kind::kInert && !holds(a, row)) return false;
  }
  return true;
}

inline bool admissible(const GameSpec& g, const ScenarioRow& row) {
  for (const Rule& r : g.rules) {
    if (all_hold(r.condition, row)) {
      if (!all_assigned(r.consequence, row)) return false;
    } else if (!r.otherwise.empty() && !all_assigned(r.otherwise, row)) {
      return false;
    }
  }
  return true;
}

inline std::vector<ScenarioRow> admissible_rows(const GameSpec& g) {
  std::vector<ScenarioRow> out;
  const std::uint64_t n = row_space(g);
  for (std::uint64_t i = 0; i < n; ++i) {
    ScenarioRow row = decode_row(g, i);
    if (admissible(g, row)) out.push_back(std::move(row));
  }
  return out;
}

inline std::int64_t gu(const GameSpec& g, const ScenarioRow& row) {
  std::int64_t sum = 0;
  for (std::size_t v = 0; v < g.variables.size(); ++v) sum += g.variables[v].values[row.outcomes[v]].score;
  return sum;
}

// Sum of the scores of the variables named in the player's utility.
inline std::int64_t agent_u(const GameSpec& g, int player, const ScenarioRow& row) {
  std::int64_t sum = 0;
  for (const auto& u : g.utilities) {
    if (oagame::normalize_name(u.player) != oagame::normalize_name(g.players[player].name)) continue;
    for (const std::string& term : u.terms) {
      for (std::size_t v = 0; v < g.variables.size(); ++v) {
        bool named = oagame::normalize_name(g.variables[v].name) == oagame::normalize_name(term);
        for (const std::string& alias : g.variables[v].aliases) {
          named = named || oagame::normalize_name(alias) == oagame::normalize_name(term);
        }
        if (named) sum += g.variables[v].values[row.outcomes[v]].score;
      }
    }
  }
  return sum;
}

// The bundled game's rules typed in by hand, by display name, for an
// evaluation path that bypasses the rule parser entirely.
struct HandCodedOa {
  const GameSpec& g;

  int act(const std::string& player, const std::string& action) const {
    for (std::size_t p = 0; p < g.players.size(); ++p) {
      if (g.players[p].name != player) continue;
      for (std::size_t a = 0; a < g.players[p].actions.size(); ++a) {
        if (g.players[p].actions[a] == action) return static_cast<int>(a);
      }
    }
    throw std::logic_error("no action " + player + "/" + action);
  }
  int pl(const std::string& player) const {
    for (std::size_t p = 0; p < g.players.size(); ++p) {
      if (g.players[p].name == player) return static_cast<int>(p);
    }
    throw std::logic_error("no player " + player);
  }
  int var(const std::string& name) const {
    for (std::size_t v = 0; v < g.variables.size(); ++v) {
      if (g.variables[v].name == name) return static_cast<int>(v);
    }
    throw std::logic_error("no variable " + name);
  }
  bool is(const ScenarioRow& r, const std::string& player, const std::string& action) const {
    return r.actions[pl(player)] == act(player, action);
  }
  bool more(const ScenarioRow& r, const std::string& v) const {
    return g.variables[var(v)].values[r.outcomes[var(v)]].name == "More";
  }
  bool less(const ScenarioRow& r, const std::string& v) const { return !more(r, v); }

  bool admissible(const ScenarioRow& r) const {
    auto implies = [](bool a, bool b) { return !a || b; };
    const bool demand_pub_ta_permit =
        is(r, "Funders", "Demand publications") && is(r, "Editors", "Grant TA") && is(r, "Politicians", "Permit TA");
    return implies(is(r, "Academics", "Publish TA") && is(r, "Editors", "Grant TA"),
                   less(r, "Opportunity") && less(r, "Visibility")) &&
           implies(is(r, "Academics", "Publish OA") && is(r, "Editors", "Grant OA"),
                   more(r, "Opportunity") && more(r, "Visibility")) &&
           (is(r, "Administrators", "Support OA") ? more(r, "Savings") : less(r, "Savings")) &&
           implies(demand_pub_ta_permit, more(r, "Income")) &&
           implies(is(r, "Editors", "Grant OA"), less(r, "Income")) &&
           implies(is(r, "Editors", "Grant big deals") && is(r, "Politicians", "Permit TA"), more(r, "Income")) &&
           implies(is(r, "Editors", "Grant OA with embargoes"), less(r, "Income")) &&
           implies(is(r, "Funders", "Demand OA publications"), less(r, "Income")) &&
           implies(is(r, "Politicians", "Demand green OA"), less(r, "Income")) &&
           implies(more(r, "Visibility"), more(r, "Results") && more(r, "Impact"));
  }
};

// Every cell where neither player gains by a unilateral switch.
inline std::vector<std::pair<int, int>> pure_equilibria(const oagame::Bimatrix& bm) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 0; r < bm.rows(); ++r) {
    for (std::size_t c = 0; c < bm.cols(); ++c) {
      if (!bm.cells[r][c]) continue;
      bool stable = true;
      for (std::size_t r2 = 0; r2 < bm.rows(); ++r2) {
        if (bm.cells[r2][c] && bm.cells[r2][c]->first > bm.cells[r][c]->first) stable = false;
      }
      for (std::size_t c2 = 0; c2 < bm.cols(); ++c2) {
        if (bm.cells[r][c2] && bm.cells[r][c2]->second > bm.cells[r][c]->second) stable = false;
      }
      if (stable) out.emplace_back(static_cast<int>(r), static_cast<int>(c));
    }
  }
  return out;
}

// Largest gain any player obtains by a pure deviation from (x, y).
inline Rational max_deviation_gain(const oagame::Bimatrix& bm, const std::vector<Rational>& x,
                                   const std::vector<Rational>& y) {
  Rational u_row = 0, u_col = 0;
  for (std::size_t r = 0; r < bm.rows(); ++r) {
    for (std::size_t c = 0; c < bm.cols(); ++c) {
      u_row += x[r] * y[c] * bm.row_payoff(r, c);
      u_col += x[r] * y[c] * bm.col_payoff(r, c);
    }
  }
  Rational gain = 0;
  for (std::size_t r = 0; r < bm.rows(); ++r) {
    Rational u = 0;
    for (std::size_t c = 0; c < bm.cols(); ++c) u += y[c] * bm.row_payoff(r, c);
    if (u - u_row > gain) gain = u - u_row;
  }
  for (std::size_t c = 0; c < bm.cols(); ++c) {
    Rational u = 0;
    for (std::size_t r = 0; r < bm.rows(); ++r) u += x[r] * bm.col_payoff(r, c);
    if (u - u_col > gain) gain = u - u_col;
  }
  return gain;
}

// Random game with up to 3 players of up to 3 actions, up to 3 binary
// variables and up to 4 rules, built directly as a GameSpec.
inline GameSpec random_small_game(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  GameSpec g;
  g.name = "random";
  const int players = pick(1, 3);
  for (int p = 0; p < players; ++p) {
    oagame::PlayerDef def;
    def.name = "P" + std::to_string(p);
    const int actions = pick(1, 3);
    for (int a = 0; a < actions; ++a) def.actions.push_back("a" + std::to_string(p) + std::to_string(a));
    g.players.push_back(def);
  }
  const int vars = pick(1, 3);
  for (int v = 0; v < vars; ++v) {
    oagame::OutcomeVarDef def;
    def.name = "V" + std::to_string(v);
    def.owner = g.players[static_cast<std::size_t>(pick(0, players - 1))].name;
    def.values = {{"More", 1}, {"Less", 0}};
    g.variables.push_back(def);
  }
  auto random_atom = [&](bool allow_action) {
    if (allow_action && pick(0, 1) == 0) {
      const int p = pick(0, players - 1);
      return Atom::action(p, pick(0, static_cast<int>(g.players[p].actions.size()) - 1));
    }
    return Atom::outcome(pick(0, vars - 1), pick(0, 1));
  };
  const int rules = pick(0, 4);
  for (int i = 0; i < rules; ++i) {
    Rule r;
    const int conds = pick(1, 2);
    for (int k = 0; k < conds; ++k) r.condition.push_back(random_atom(true));
    const int cons = pick(1, 2);
    for (int k = 0; k < cons; ++k) r.consequence.push_back(random_atom(false));
    if (pick(0, 3) == 0) r.otherwise.push_back(random_atom(false));
    g.rules.push_back(r);
  }
  for (const auto& p : g.players) {
    oagame::UtilityDef u;
    u.player = p.name;
    for (const auto& v : g.variables) {
      if (v.owner == p.name) u.terms.push_back(v.name);
    }
    if (!u.terms.empty()) g.utilities.push_back(u);
  }
  return g;
}

}  // namespace oracle

#endif  // OAGAME_TESTS_NAIVE_ORACLE_H_
