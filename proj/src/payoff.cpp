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

#include "oagame/payoff.h"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace oagame {
namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw std::invalid_argument("bimatrix line " + std::to_string(line) + ": " + message);
}

std::int64_t parse_int(std::string_view s, int line) {
  const std::string t = trim(s);
  std::int64_t v = 0;
  const char* first = t.data() + (!t.empty() && t.front() == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) fail(line, "expected integer, got '" + t + "'");
  return v;
}

// "<key>: <player>: a, b, c"
std::pair<std::string, std::vector<std::string>> parse_header(std::string_view line, std::string_view key, int no) {
  const std::string t = trim(line);
  if (t.rfind(std::string(key) + ":", 0) != 0) fail(no, "expected '" + std::string(key) + ":' header");
  const std::string rest = t.substr(key.size() + 1);
  const auto colon = rest.find(':');
  if (colon == std::string::npos) fail(no, "expected '<player>: <actions>'");
  std::string player = trim(std::string_view(rest).substr(0, colon));
  if (player.empty()) fail(no, "missing player name");
  std::vector<std::string> actions;
  std::stringstream list(rest.substr(colon + 1));
  std::string item;
  while (std::getline(list, item, ',')) {
    item = trim(item);
    if (item.empty()) fail(no, "empty action name");
    actions.push_back(item);
  }
  if (actions.empty()) fail(no, "no actions");
  return {player, actions};
}

}  // namespace

PayoffTable::PayoffTable(std::vector<std::string> players, std::vector<std::vector<std::string>> actions)
    : players_(std::move(players)), actions_(std::move(actions)) {
  if (players_.size() != actions_.size()) throw std::invalid_argument("players and action lists differ in length");
  std::size_t total = 1;
  for (const auto& a : actions_) {
    if (a.empty()) throw std::invalid_argument("player without actions");
    total *= a.size();
  }
  cells_.resize(total);
}

std::size_t PayoffTable::index_of(const ActionProfile& profile) const {
  if (profile.size() != actions_.size()) throw std::invalid_argument("profile length does not match player count");
  std::size_t index = 0;
  for (std::size_t p = 0; p < profile.size(); ++p) {
    if (profile[p] < 0 || static_cast<std::size_t>(profile[p]) >= actions_[p].size()) {
      throw std::out_of_range("action index out of range");
    }
    index = index * actions_[p].size() + static_cast<std::size_t>(profile[p]);
  }
  return index;
}

ActionProfile PayoffTable::profile_at(std::size_t index) const {
  ActionProfile profile(actions_.size());
  for (std::size_t p = actions_.size(); p-- > 0;) {
    profile[p] = static_cast<int>(index % actions_[p].size());
    index /= actions_[p].size();
  }
  return profile;
}

void PayoffTable::set(const ActionProfile& profile, std::vector<std::int64_t> utilities,
                      std::optional<ScenarioRow> witness) {
  if (utilities.size() != players_.size()) throw std::invalid_argument("utility vector length mismatch");
  Cell& c = cells_.at(index_of(profile));
  c.feasible = true;
  c.utilities = std::move(utilities);
  c.witness = std::move(witness);
}

void PayoffTable::set_infeasible(const ActionProfile& profile) { cells_.at(index_of(profile)) = Cell{}; }

bool Bimatrix::complete() const {
  if (cells.size() != rows()) return false;
  for (const auto& row : cells) {
    if (row.size() != cols()) return false;
    for (const auto& c : row) {
      if (!c) return false;
    }
  }
  return !row_actions.empty() && !col_actions.empty();
}

void Bimatrix::require_complete() const {
  if (!complete()) throw std::invalid_argument("bimatrix has missing cells or mismatched dimensions");
}

PayoffTable Bimatrix::to_payoff_table() const {
  PayoffTable table({row_player, col_player}, {row_actions, col_actions});
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      const ActionProfile profile{static_cast<int>(r), static_cast<int>(c)};
      const auto& cell = cells.at(r).at(c);
      if (cell) table.set(profile, {cell->first, cell->second});
      else table.set_infeasible(profile);
    }
  }
  return table;
}

Bimatrix parse_bimatrix(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) lines.emplace_back(no, line);
  }
  if (lines.size() < 2) throw std::invalid_argument("bimatrix needs 'rows:' and 'cols:' headers");
  Bimatrix bm;
  std::tie(bm.row_player, bm.row_actions) = parse_header(lines[0].second, "rows", lines[0].first);
  std::tie(bm.col_player, bm.col_actions) = parse_header(lines[1].second, "cols", lines[1].first);
  if (lines.size() - 2 != bm.rows()) {
    fail(lines.back().first, "expected " + std::to_string(bm.rows()) + " payoff rows, found " +
                                 std::to_string(lines.size() - 2));
  }
  for (std::size_t r = 0; r < bm.rows(); ++r) {
    const auto& [ln, body] = lines[r + 2];
    std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>> row;
    std::size_t i = 0;
    while (i < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[i]))) {
        ++i;
        continue;
      }
      if (body[i] == '-') {
        row.emplace_back(std::nullopt);
        ++i;
        continue;
      }
      if (body[i] != '(') fail(ln, "expected '(' to open a cell");
      const auto close = body.find(')', i);
      if (close == std::string::npos) fail(ln, "unterminated cell");
      const std::string inner = body.substr(i + 1, close - i - 1);
      const auto comma = inner.find(',');
      if (comma == std::string::npos) fail(ln, "cell needs two payoffs");
      row.emplace_back(std::pair{parse_int(std::string_view(inner).substr(0, comma), ln),
                                 parse_int(std::string_view(inner).substr(comma + 1), ln)});
      i = close + 1;
    }
    if (row.size() != bm.cols()) {
      fail(ln, "expected " + std::to_string(bm.cols()) + " cells, found " + std::to_string(row.size()));
    }
    bm.cells.push_back(std::move(row));
  }
  bm.provenance = Bimatrix::Provenance::kLoaded;
  return bm;
}

std::string serialize_bimatrix(const Bimatrix& bm) {
  std::ostringstream out;
  auto header = [&](std::string_view key, const std::string& player, const std::vector<std::string>& actions) {
    out << key << ": " << player << ": ";
    for (std::size_t i = 0; i < actions.size(); ++i) out << (i == 0 ? "" : ",") << actions[i];
    out << '\n';
  };
  header("rows", bm.row_player, bm.row_actions);
  header("cols", bm.col_player, bm.col_actions);
  for (const auto& row : bm.cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out << ' ';
      if (row[c]) out << '(' << row[c]->first << ',' << row[c]->second << ')';
      else out << '-';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace oagame
