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

#include "oagame/engine.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace oagame {
namespace {

using Assignment = std::pair<int, int>;  // (variable, value)

// A rule reduced against one action profile: only outcome atoms remain.
struct ResidualRule {
  std::vector<Assignment> condition;
  std::vector<Assignment> consequence;
  std::vector<Assignment> otherwise;
  bool has_otherwise = false;
};

void resolved_assignments(const std::vector<Atom>& atoms, std::vector<Assignment>& out) {
  for (const Atom& a : atoms) {
    if (a.kind == Atom::Kind::kOutcome) out.emplace_back(a.subject, a.value);
  }
}

bool all_hold(const std::vector<Assignment>& atoms, const OutcomeAssignment& outcomes) {
  return std::all_of(atoms.begin(), atoms.end(),
                     [&](const Assignment& a) { return outcomes[a.first] == a.second; });
}

// Admissible outcome assignments for one profile, in canonical order. Rules
// whose condition is decided by the profile alone become forced values; the
// rest are checked on each candidate assignment.
std::vector<ScenarioRow> complete_profile(const GameSpec& game, const std::vector<Rule>& rules,
                                          const ActionProfile& profile) {
  const std::size_t nvars = game.variables.size();
  std::vector<int> forced(nvars, -1);
  std::vector<ResidualRule> residual;
  bool conflict = false;
  auto force = [&](const std::vector<Assignment>& atoms) {
    for (const auto& [var, value] : atoms) {
      if (forced[var] == -1) forced[var] = value;
      else if (forced[var] != value) conflict = true;
    }
  };

  for (const Rule& rule : rules) {
    bool decided_false = false;
    ResidualRule r;
    for (const Atom& a : rule.condition) {
      if (a.kind == Atom::Kind::kInert ||
          (a.kind == Atom::Kind::kAction && profile[a.subject] != a.value)) {
        decided_false = true;
        break;
      }
      if (a.kind == Atom::Kind::kOutcome) r.condition.emplace_back(a.subject, a.value);
    }
    resolved_assignments(rule.consequence, r.consequence);
    resolved_assignments(rule.otherwise, r.otherwise);
    r.has_otherwise = rule.has_otherwise();
    if (decided_false) {
      if (r.has_otherwise) force(r.otherwise);
    } else if (r.condition.empty()) {
      force(r.consequence);
    } else {
      residual.push_back(std::move(r));
    }
    if (conflict) return {};
  }

  std::vector<ScenarioRow> out;
  OutcomeAssignment outcomes(nvars, 0);
  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (forced[v] >= 0) outcomes[v] = forced[v];
    else free_vars.push_back(v);
  }
  for (;;) {
    const bool ok = std::all_of(residual.begin(), residual.end(), [&](const ResidualRule& r) {
      if (all_hold(r.condition, outcomes)) return all_hold(r.consequence, outcomes);
      return !r.has_otherwise || all_hold(r.otherwise, outcomes);
    });
    if (ok) out.push_back({profile, outcomes});
    // Odometer over the free variables; the last declared variable moves fastest.
    std::size_t k = free_vars.size();
    while (k > 0) {
      const std::size_t v = free_vars[k - 1];
      if (++outcomes[v] < static_cast<int>(game.variables[v].values.size())) break;
      outcomes[v] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

ActionProfile profile_from_index(const GameSpec& game, std::uint64_t index) {
  ActionProfile profile(game.players.size());
  for (std::size_t p = game.players.size(); p-- > 0;) {
    const std::uint64_t n = game.players[p].actions.size();
    profile[p] = static_cast<int>(index % n);
    index /= n;
  }
  return profile;
}

// Admissible rows grouped by profile index. Profiles are split into
// contiguous ranges, one per worker; results land in fixed slots so the
// merged order never depends on scheduling.
std::vector<std::vector<ScenarioRow>> rows_by_profile(const ValidatedGame& vg, const Semantics& semantics,
                                                      const EngineOptions& options) {
  const GameSpec& game = vg.spec();
  const std::vector<Rule> rules = effective_rules(game, semantics);
  const std::uint64_t total = vg.action_profile_count();
  std::vector<std::vector<ScenarioRow>> slots(total);
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(options.workers, 1)), 1, std::max<std::uint64_t>(total, 1));
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) slots[i] = complete_profile(game, rules, profile_from_index(game, i));
  };
  if (workers == 1) {
    work(0, total);
    return slots;
  }
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back(work, begin, end);
  }
  for (std::thread& t : threads) t.join();
  return slots;
}

EnumerationReport summarize(const ValidatedGame& vg, const Semantics& semantics,
                            const std::vector<std::vector<ScenarioRow>>& slots) {
  EnumerationReport report;
  report.action_profiles = vg.action_profile_count();
  report.row_space = vg.row_space_size();
  report.semantics = semantics;
  for (const auto& rows : slots) {
    for (const ScenarioRow& row : rows) {
      ++report.admissible;
      const std::int64_t gu = global_utility(vg.spec(), row);
      if (!report.max_global_utility || gu > *report.max_global_utility) {
        report.max_global_utility = gu;
        report.max_global_utility_rows = 1;
      } else if (gu == *report.max_global_utility) {
        ++report.max_global_utility_rows;
      }
    }
  }
  return report;
}

bool matches_fragment(const ScenarioRow& row, const CompletionPolicy& policy) {
  for (std::size_t p = 0; p < policy.fixed_actions.size() && p < row.actions.size(); ++p) {
    if (policy.fixed_actions[p] >= 0 && policy.fixed_actions[p] != row.actions[p]) return false;
  }
  for (std::size_t v = 0; v < policy.fixed_outcomes.size() && v < row.outcomes.size(); ++v) {
    if (policy.fixed_outcomes[v] >= 0 && policy.fixed_outcomes[v] != row.outcomes[v]) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Semantics& semantics) {
  return std::string(semantics.binding == Binding::kStrict ? "strict" : "lenient") + "/implication-filter";
}

CompletionPolicy parse_policy(std::string_view text, const GameSpec& game) {
  const std::string s(text);
  if (s == "max-gu" || s == "max-global-utility") return CompletionPolicy::max_global_utility();
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("unknown policy '" + s + "'");
  const std::string kind = s.substr(0, colon);
  const std::string arg = s.substr(colon + 1);
  if (kind == "optimistic") return CompletionPolicy::optimistic(game.player_index(arg));
  if (kind == "pessimistic") return CompletionPolicy::pessimistic(game.player_index(arg));
  if (kind != "fixed") throw std::invalid_argument("unknown policy '" + s + "'");
  std::vector<int> actions(game.players.size(), -1);
  std::vector<int> outcomes(game.variables.size(), -1);
  std::stringstream list(arg);
  std::string item;
  while (std::getline(list, item, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("fixed policy entries look like Name=value");
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (auto p = game.find_player(name)) {
      const auto& names = game.players[*p].actions;
      auto it = std::find_if(names.begin(), names.end(),
                             [&](const std::string& a) { return normalize_name(a) == normalize_name(value); });
      if (it == names.end()) {
        throw ResolutionError(game.players[*p].name, value, "unknown action '" + value + "'");
      }
      actions[*p] = static_cast<int>(it - names.begin());
    } else {
      const int v = game.variable_index(name);
      auto index = game.variables[v].find_value(value);
      if (!index) throw ResolutionError(game.variables[v].name, value, "unknown value '" + value + "'");
      outcomes[v] = *index;
    }
  }
  return CompletionPolicy::fixed(std::move(actions), std::move(outcomes));
}

std::string to_string(const CompletionPolicy& policy, const GameSpec& game) {
  switch (policy.kind) {
    case CompletionPolicy::Kind::kMaxGlobalUtility: return "max-gu";
    case CompletionPolicy::Kind::kOptimistic: return "optimistic:" + game.players.at(policy.player).name;
    case CompletionPolicy::Kind::kPessimistic: return "pessimistic:" + game.players.at(policy.player).name;
    case CompletionPolicy::Kind::kFixed: {
      std::string out = "fixed:";
      bool first = true;
      for (std::size_t p = 0; p < policy.fixed_actions.size(); ++p) {
        if (policy.fixed_actions[p] < 0) continue;
        out += (first ? "" : ";") + game.players[p].name + "=" + game.players[p].actions[policy.fixed_actions[p]];
        first = false;
      }
      for (std::size_t v = 0; v < policy.fixed_outcomes.size(); ++v) {
        if (policy.fixed_outcomes[v] < 0) continue;
        out += (first ? "" : ";") + game.variables[v].name + "=" + game.variables[v].values[policy.fixed_outcomes[v]].name;
        first = false;
      }
      return out;
    }
  }
  return {};
}

std::vector<Rule> effective_rules(const GameSpec& game, const Semantics& semantics) {
  if (semantics.binding == game.binding) return game.rules;
  std::vector<Rule> out;
  out.reserve(game.rules.size());
  for (const Rule& rule : game.rules) {
    if (rule.source.empty()) {
      out.push_back(rule);
      continue;
    }
    RuleParseResult r = parse_rule(rule.source, game, semantics.binding, rule.span.line);
    if (r.error) throw std::invalid_argument("rule does not bind under requested semantics: " + format_diagnostic(*r.error));
    out.push_back(std::move(*r.rule));
  }
  return out;
}

std::vector<ActionProfile> enumerate_profiles(const GameSpec& game) {
  std::vector<ActionProfile> out;
  for_each_profile(game, [&](const ActionProfile& p) { out.push_back(p); });
  return out;
}

void for_each_profile(const GameSpec& game, const std::function<void(const ActionProfile&)>& visit) {
  for (const PlayerDef& p : game.players) {
    if (p.actions.empty()) return;
  }
  ActionProfile profile(game.players.size(), 0);
  for (;;) {
    visit(profile);
    std::size_t k = profile.size();
    while (k > 0) {
      if (++profile[k - 1] < static_cast<int>(game.players[k - 1].actions.size())) break;
      profile[k - 1] = 0;
      --k;
    }
    if (k == 0) return;
  }
}

bool atom_holds(const Atom& atom, const ScenarioRow& row) {
  switch (atom.kind) {
    case Atom::Kind::kAction: return row.actions.at(atom.subject) == atom.value;
    case Atom::Kind::kOutcome: return row.outcomes.at(atom.subject) == atom.value;
    case Atom::Kind::kInert: return false;
  }
  return false;
}

bool rule_satisfied(const Rule& rule, const ScenarioRow& row) {
  // Inert assignments never constrain a row.
  auto assigned = [&](const std::vector<Atom>& atoms) {
    return std::all_of(atoms.begin(), atoms.end(),
                       [&](const Atom& a) { return a.kind == Atom::Kind::kInert || atom_holds(a, row); });
  };
  const bool condition = std::all_of(rule.condition.begin(), rule.condition.end(),
                                     [&](const Atom& a) { return atom_holds(a, row); });
  if (condition) return assigned(rule.consequence);
  return !rule.has_otherwise() || assigned(rule.otherwise);
}

AdmissibleSet admissible_rows(const ValidatedGame& game, const Semantics& semantics, const EngineOptions& options) {
  auto slots = rows_by_profile(game, semantics, options);
  AdmissibleSet out;
  out.report = summarize(game, semantics, slots);
  out.rows.reserve(out.report.admissible);
  for (auto& rows : slots) {
    for (ScenarioRow& row : rows) out.rows.push_back(std::move(row));
  }
  return out;
}

EnumerationReport enumeration_report(const ValidatedGame& game, const Semantics& semantics,
                                     const EngineOptions& options) {
  return summarize(game, semantics, rows_by_profile(game, semantics, options));
}

TopRows top_gu_rows(const ValidatedGame& game, const Semantics& semantics, const EngineOptions& options) {
  AdmissibleSet all = admissible_rows(game, semantics, options);
  TopRows top;
  if (!all.report.max_global_utility) return top;
  top.empty = false;
  top.max_global_utility = *all.report.max_global_utility;
  for (ScenarioRow& row : all.rows) {
    if (global_utility(game.spec(), row) == top.max_global_utility) top.rows.push_back(std::move(row));
  }
  return top;
}

std::optional<std::size_t> select_completion(const GameSpec& game, const std::vector<ScenarioRow>& candidates,
                                             const CompletionPolicy& policy) {
  std::optional<std::size_t> best;
  std::int64_t best_score = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const ScenarioRow& row = candidates[i];
    if (!matches_fragment(row, policy)) continue;
    std::int64_t score = 0;
    switch (policy.kind) {
      case CompletionPolicy::Kind::kMaxGlobalUtility: score = global_utility(game, row); break;
      case CompletionPolicy::Kind::kOptimistic:
        score = agent_utility(game, game.players.at(policy.player).name, row);
        break;
      case CompletionPolicy::Kind::kPessimistic:
        score = -agent_utility(game, game.players.at(policy.player).name, row);
        break;
      case CompletionPolicy::Kind::kFixed: score = 0; break;
    }
    // Strict improvement only: the earliest row wins ties.
    if (!best || score > best_score) {
      best = i;
      best_score = score;
    }
  }
  return best;
}

PayoffTable derive_payoff_table(const ValidatedGame& vg, const Semantics& semantics, const CompletionPolicy& policy,
                                const EngineOptions& options) {
  const GameSpec& game = vg.spec();
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;
  for (const PlayerDef& p : game.players) {
    players.push_back(p.name);
    actions.push_back(p.actions);
  }
  PayoffTable table(std::move(players), std::move(actions));
  const auto slots = rows_by_profile(vg, semantics, options);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const ActionProfile profile = table.profile_at(i);
    if (auto chosen = select_completion(game, slots[i], policy)) {
      const ScenarioRow& row = slots[i][*chosen];
      table.set(profile, utility_vector(game, row), row);
    } else {
      table.set_infeasible(profile);
    }
  }
  return table;
}

}  // namespace oagame
