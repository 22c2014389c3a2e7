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

#include "oagame/equilibrium.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oagame {
namespace {

const Rational kSumTolerance(1, 1000000000);

std::vector<int> iota(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

// Payoff to `player` when it plays `own` and the opponent plays `other`.
std::int64_t payoff(const Bimatrix& bm, int player, int own, int other) {
  return player == 0 ? bm.row_payoff(own, other) : bm.col_payoff(other, own);
}

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

// Gauss-Jordan elimination over the rationals on an augmented n x (n+1) matrix.
SolveStatus solve(std::vector<std::vector<Rational>> m, std::vector<Rational>& x) {
  const std::size_t n = m.size();
  std::size_t rank = 0;
  std::vector<int> pivot_col(n, -1);
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[rank]);
    const Rational lead = m[rank][col];
    for (Rational& v : m[rank]) v /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  for (std::size_t r = rank; r < n; ++r) {
    if (m[r][n] != 0) return SolveStatus::kInconsistent;
  }
  if (rank < n) return SolveStatus::kUnderdetermined;
  x.assign(n, Rational(0));
  for (std::size_t r = 0; r < n; ++r) x[pivot_col[r]] = m[r][n];
  return SolveStatus::kUnique;
}

// Strategy of `player`'s opponent over support `opp` that makes `player`
// indifferent among the actions in `own`. Returns the opponent weights and the
// common payoff.
SolveStatus indifference(const Bimatrix& bm, int player, const std::vector<int>& own, const std::vector<int>& opp,
                         std::vector<Rational>& weights, Rational& value) {
  const std::size_t k = own.size();
  std::vector<std::vector<Rational>> m(k + 1, std::vector<Rational>(k + 2, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = payoff(bm, player, own[i], opp[j]);
    m[i][k] = -1;
  }
  for (std::size_t j = 0; j < k; ++j) m[k][j] = 1;
  m[k][k + 1] = 1;
  std::vector<Rational> x;
  const SolveStatus status = solve(std::move(m), x);
  if (status != SolveStatus::kUnique) return status;
  weights.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
  value = x[k];
  return status;
}

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<int>>& out) {
  std::vector<int> current;
  auto rec = [&](auto&& self, int start) -> void {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (int i = start; i < static_cast<int>(n); ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

MixedStrategy spread(const std::string& player, const std::vector<std::string>& actions,
                     const std::vector<int>& support, const std::vector<Rational>& weights) {
  MixedStrategy s{player, actions, std::vector<Rational>(actions.size(), Rational(0))};
  for (std::size_t i = 0; i < support.size(); ++i) s.probabilities[support[i]] = weights[i];
  return s;
}

// Payoff of each pure action of `player` against the opponent's mixture.
std::vector<Rational> pure_payoffs(const Bimatrix& bm, int player, const MixedStrategy& opponent) {
  const std::size_t own = player == 0 ? bm.rows() : bm.cols();
  std::vector<Rational> out(own, Rational(0));
  for (std::size_t a = 0; a < own; ++a) {
    for (std::size_t b = 0; b < opponent.probabilities.size(); ++b) {
      if (opponent.probabilities[b] == 0) continue;
      out[a] += opponent.probabilities[b] * payoff(bm, player, static_cast<int>(a), static_cast<int>(b));
    }
  }
  return out;
}

EquilibriumCertificate bimatrix_certificate(const Bimatrix& bm, MixedStrategy row, MixedStrategy col) {
  EquilibriumCertificate cert;
  cert.kind = row.is_pure() && col.is_pure() ? EquilibriumCertificate::Kind::kPure
                                              : EquilibriumCertificate::Kind::kMixed;
  auto [eu_row, eu_col] = expected_utility(bm, row, col);
  const std::vector<Rational> row_dev = pure_payoffs(bm, 0, col);
  const std::vector<Rational> col_dev = pure_payoffs(bm, 1, row);
  cert.verification.push_back({bm.row_player, bm.row_actions, {row_dev.begin(), row_dev.end()}, eu_row});
  cert.verification.push_back({bm.col_player, bm.col_actions, {col_dev.begin(), col_dev.end()}, eu_col});
  cert.expected_utilities = {eu_row, eu_col};
  cert.strategies = {std::move(row), std::move(col)};
  return cert;
}

}  // namespace

MixedStrategy MixedStrategy::pure(std::string player, std::vector<std::string> actions, int index) {
  MixedStrategy s{std::move(player), std::move(actions), {}};
  s.probabilities.assign(s.actions.size(), Rational(0));
  s.probabilities.at(static_cast<std::size_t>(index)) = 1;
  return s;
}

void MixedStrategy::validate() const {
  if (probabilities.size() != actions.size()) {
    throw std::invalid_argument("strategy for '" + player + "' has " + std::to_string(probabilities.size()) +
                                " probabilities for " + std::to_string(actions.size()) + " actions");
  }
  Rational sum = 0;
  for (const Rational& p : probabilities) {
    if (p < 0) throw std::invalid_argument("negative probability in strategy for '" + player + "'");
    sum += p;
  }
  if (abs(sum - 1) > kSumTolerance) {
    throw std::invalid_argument("probabilities for '" + player + "' sum to " + to_string(sum));
  }
}

std::vector<int> MixedStrategy::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] > 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool EquilibriumCertificate::self_consistent() const {
  for (const DeviationCheck& check : verification) {
    for (const auto& p : check.payoffs) {
      if (p && *p > check.equilibrium_utility) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> best_responses(const PayoffTable& table, int player, const ActionProfile& others) {
  if (player < 0 || static_cast<std::size_t>(player) >= table.player_count()) {
    throw std::out_of_range("player index out of range");
  }
  ActionProfile profile = others;
  std::optional<std::int64_t> best;
  std::vector<int> out;
  const int n = static_cast<int>(table.actions()[player].size());
  for (int a = 0; a < n; ++a) {
    profile[player] = a;
    const PayoffTable::Cell& cell = table.cell(profile);
    if (!cell.feasible) continue;
    const std::int64_t u = cell.utilities[player];
    if (!best || u > *best) {
      best = u;
      out = {a};
    } else if (u == *best) {
      out.push_back(a);
    }
  }
  if (!best) return std::nullopt;
  return out;
}

std::vector<EquilibriumCertificate> pure_nash(const PayoffTable& table) {
  std::vector<EquilibriumCertificate> out;
  for (std::size_t index = 0; index < table.profile_count(); ++index) {
    const PayoffTable::Cell& cell = table.cell_at(index);
    if (!cell.feasible) continue;
    const ActionProfile profile = table.profile_at(index);
    bool equilibrium = true;
    for (std::size_t p = 0; p < table.player_count() && equilibrium; ++p) {
      const auto br = best_responses(table, static_cast<int>(p), profile);
      equilibrium = br && std::find(br->begin(), br->end(), profile[p]) != br->end();
    }
    if (!equilibrium) continue;

    EquilibriumCertificate cert;
    cert.kind = EquilibriumCertificate::Kind::kPure;
    for (std::size_t p = 0; p < table.player_count(); ++p) {
      cert.strategies.push_back(MixedStrategy::pure(table.players()[p], table.actions()[p], profile[p]));
      cert.expected_utilities.emplace_back(cell.utilities[p]);
      DeviationCheck check{table.players()[p], table.actions()[p], {}, Rational(cell.utilities[p])};
      ActionProfile deviation = profile;
      for (std::size_t a = 0; a < table.actions()[p].size(); ++a) {
        deviation[p] = static_cast<int>(a);
        const PayoffTable::Cell& alt = table.cell(deviation);
        if (alt.feasible) check.payoffs.emplace_back(Rational(alt.utilities[p]));
        else check.payoffs.emplace_back(std::nullopt);
      }
      cert.verification.push_back(std::move(check));
    }
    out.push_back(std::move(cert));
  }
  return out;
}

std::vector<EquilibriumCertificate> pure_nash(const Bimatrix& bm) { return pure_nash(bm.to_payoff_table()); }

Bimatrix project_bimatrix(const ValidatedGame& vg, const Semantics& semantics, const CompletionPolicy& policy,
                          int row_player, int col_player, const EngineOptions& options) {
  const GameSpec& game = vg.spec();
  const int n = static_cast<int>(game.players.size());
  if (row_player < 0 || row_player >= n || col_player < 0 || col_player >= n) {
    throw std::invalid_argument("projection players out of range");
  }
  if (row_player == col_player) throw std::invalid_argument("projection needs two distinct players");
  const PlayerDef& rp = game.players[row_player];
  const PlayerDef& cp = game.players[col_player];

  std::map<std::pair<int, int>, std::vector<ScenarioRow>> buckets;
  for (ScenarioRow& row : admissible_rows(vg, semantics, options).rows) {
    buckets[{row.actions[row_player], row.actions[col_player]}].push_back(std::move(row));
  }

  Bimatrix bm;
  bm.row_player = rp.name;
  bm.row_actions = rp.actions;
  bm.col_player = cp.name;
  bm.col_actions = cp.actions;
  bm.provenance = Bimatrix::Provenance::kProjected;
  bm.note = "projected from \"" + game.name + "\" (" + to_string(semantics) + ", policy " +
            to_string(policy, game) + ")";
  bm.cells.assign(rp.actions.size(), std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>>(cp.actions.size()));
  for (std::size_t r = 0; r < rp.actions.size(); ++r) {
    for (std::size_t c = 0; c < cp.actions.size(); ++c) {
      auto it = buckets.find({static_cast<int>(r), static_cast<int>(c)});
      if (it == buckets.end()) continue;
      if (auto chosen = select_completion(game, it->second, policy)) {
        const ScenarioRow& row = it->second[*chosen];
        bm.cells[r][c] = std::pair{agent_utility(game, rp.name, row), agent_utility(game, cp.name, row)};
      }
    }
  }
  return bm;
}

std::string_view to_string(DominanceNotion notion) {
  return notion == DominanceNotion::kStrict ? "strict" : "weak";
}

bool dominates(const Bimatrix& bm, int player, int a, int b, DominanceNotion notion,
               const std::vector<int>& opponents) {
  if (a == b || opponents.empty()) return false;
  bool some_better = false;
  for (int o : opponents) {
    const std::int64_t ua = payoff(bm, player, a, o);
    const std::int64_t ub = payoff(bm, player, b, o);
    if (ua < ub) return false;
    if (ua == ub && notion == DominanceNotion::kStrict) return false;
    if (ua > ub) some_better = true;
  }
  return some_better;
}

DominanceResult dominance_analysis(const Bimatrix& bm, DominanceNotion notion, bool iterate) {
  bm.require_complete();
  DominanceResult result;
  result.notion = notion;
  result.iterated = iterate;
  std::vector<int> alive[2] = {iota(bm.rows()), iota(bm.cols())};
  const std::vector<std::string>* names[2] = {&bm.row_actions, &bm.col_actions};
  const std::string* players[2] = {&bm.row_player, &bm.col_player};

  auto find_dominator = [&](int player, int action) -> std::optional<std::pair<int, DominanceNotion>> {
    const std::vector<int>& opp = alive[1 - player];
    for (int d : alive[player]) {
      if (dominates(bm, player, d, action, DominanceNotion::kStrict, opp)) return std::pair{d, DominanceNotion::kStrict};
    }
    if (notion == DominanceNotion::kWeak) {
      for (int d : alive[player]) {
        if (dominates(bm, player, d, action, DominanceNotion::kWeak, opp)) return std::pair{d, DominanceNotion::kWeak};
      }
    }
    return std::nullopt;
  };
  auto record = [&](int player, int action, std::pair<int, DominanceNotion> by) {
    result.trace.push_back({player, *players[player], (*names[player])[action], (*names[player])[by.first], by.second});
  };

  if (iterate) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int player = 0; player < 2 && !changed; ++player) {
        for (int action : alive[player]) {
          if (auto by = find_dominator(player, action)) {
            record(player, action, *by);
            std::erase(alive[player], action);
            changed = true;
            break;
          }
        }
      }
    }
  } else {
    std::vector<int> doomed[2];
    for (int player = 0; player < 2; ++player) {
      for (int action : alive[player]) {
        if (auto by = find_dominator(player, action)) {
          record(player, action, *by);
          doomed[player].push_back(action);
        }
      }
    }
    for (int player = 0; player < 2; ++player) {
      for (int action : doomed[player]) std::erase(alive[player], action);
    }
  }

  result.surviving_rows = alive[0];
  result.surviving_cols = alive[1];
  Bimatrix& s = result.surviving;
  s.row_player = bm.row_player;
  s.col_player = bm.col_player;
  s.provenance = bm.provenance;
  s.note = bm.note;
  for (int r : alive[0]) s.row_actions.push_back(bm.row_actions[r]);
  for (int c : alive[1]) s.col_actions.push_back(bm.col_actions[c]);
  for (int r : alive[0]) {
    std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>> row;
    for (int c : alive[1]) row.push_back(bm.cells[r][c]);
    s.cells.push_back(std::move(row));
  }
  return result;
}

MixedNashResult mixed_nash_2p(const Bimatrix& bm) {
  bm.require_complete();
  if (bm.rows() > kMaxSupportEnumerationActions || bm.cols() > kMaxSupportEnumerationActions) {
    throw std::invalid_argument("support enumeration is limited to " + std::to_string(kMaxSupportEnumerationActions) +
                                " actions per player");
  }
  MixedNashResult result;
  const std::size_t m = bm.rows();
  const std::size_t n = bm.cols();
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    std::vector<std::vector<int>> row_supports;
    std::vector<std::vector<int>> col_supports;
    combinations(m, k, row_supports);
    combinations(n, k, col_supports);
    for (const auto& rows : row_supports) {
      for (const auto& cols : col_supports) {
        // Column weights make the row player indifferent over `rows`, and
        // vice versa.
        std::vector<Rational> y;
        std::vector<Rational> x;
        Rational v;
        Rational u;
        const SolveStatus sy = indifference(bm, 0, rows, cols, y, v);
        const SolveStatus sx = indifference(bm, 1, cols, rows, x, u);
        if (sy == SolveStatus::kUnderdetermined || sx == SolveStatus::kUnderdetermined) result.degenerate = true;
        if (sy != SolveStatus::kUnique || sx != SolveStatus::kUnique) continue;
        auto positive = [](const std::vector<Rational>& w) {
          return std::all_of(w.begin(), w.end(), [](const Rational& p) { return p > 0; });
        };
        if (!positive(x) || !positive(y)) continue;
        MixedStrategy row = spread(bm.row_player, bm.row_actions, rows, x);
        MixedStrategy col = spread(bm.col_player, bm.col_actions, cols, y);
        const std::vector<Rational> row_pay = pure_payoffs(bm, 0, col);
        const std::vector<Rational> col_pay = pure_payoffs(bm, 1, row);
        const bool row_ok = std::all_of(row_pay.begin(), row_pay.end(), [&](const Rational& p) { return p <= v; });
        const bool col_ok = std::all_of(col_pay.begin(), col_pay.end(), [&](const Rational& p) { return p <= u; });
        if (!row_ok || !col_ok) continue;
        const auto row_br = std::count(row_pay.begin(), row_pay.end(), v);
        const auto col_br = std::count(col_pay.begin(), col_pay.end(), u);
        if (static_cast<std::size_t>(row_br) > cols.size() || static_cast<std::size_t>(col_br) > rows.size()) {
          result.degenerate = true;
        }
        result.equilibria.push_back(bimatrix_certificate(bm, std::move(row), std::move(col)));
      }
    }
  }
  for (EquilibriumCertificate& cert : result.equilibria) cert.degenerate = result.degenerate;
  return result;
}

std::pair<Rational, Rational> expected_utility(const Bimatrix& bm, const MixedStrategy& row,
                                               const MixedStrategy& col) {
  bm.require_complete();
  if (row.probabilities.size() != bm.rows() || col.probabilities.size() != bm.cols()) {
    throw std::invalid_argument("strategy dimensions do not match the bimatrix (" + std::to_string(bm.rows()) + "x" +
                                std::to_string(bm.cols()) + ")");
  }
  row.validate();
  col.validate();
  Rational eu_row = 0;
  Rational eu_col = 0;
  for (std::size_t r = 0; r < bm.rows(); ++r) {
    if (row.probabilities[r] == 0) continue;
    for (std::size_t c = 0; c < bm.cols(); ++c) {
      if (col.probabilities[c] == 0) continue;
      const Rational w = row.probabilities[r] * col.probabilities[c];
      eu_row += w * bm.row_payoff(r, c);
      eu_col += w * bm.col_payoff(r, c);
    }
  }
  return {eu_row, eu_col};
}

}  // namespace oagame
