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

#include "oagame/report.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace oagame {
namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

// --- JSON ------------------------------------------------------------------

ojson to_json(const EnumerationReport& r) {
  ojson j;
  j["action_profiles"] = r.action_profiles;
  j["row_space"] = r.row_space;
  j["admissible"] = r.admissible;
  j["max_global_utility"] = r.max_global_utility ? ojson(*r.max_global_utility) : ojson(nullptr);
  j["max_global_utility_rows"] = r.max_global_utility_rows;
  j["semantics"] = {{"binding", r.semantics.binding == Binding::kStrict ? "strict" : "lenient"},
                    {"mode", "implication-filter"}};
  return j;
}

EnumerationReport enumeration_from_json(const json& j) {
  EnumerationReport r;
  r.action_profiles = j.at("action_profiles").get<std::uint64_t>();
  r.row_space = j.at("row_space").get<std::uint64_t>();
  r.admissible = j.at("admissible").get<std::uint64_t>();
  if (!j.at("max_global_utility").is_null()) r.max_global_utility = j.at("max_global_utility").get<std::int64_t>();
  r.max_global_utility_rows = j.at("max_global_utility_rows").get<std::uint64_t>();
  const std::string binding = j.at("semantics").at("binding").get<std::string>();
  if (binding != "strict" && binding != "lenient") throw std::invalid_argument("unknown binding '" + binding + "'");
  r.semantics.binding = binding == "strict" ? Binding::kStrict : Binding::kLenient;
  return r;
}

ojson to_json(const RowTable& t) { return {{"columns", t.columns}, {"rows", t.rows}}; }

RowTable rows_from_json(const json& j) {
  return {j.at("columns").get<std::vector<std::string>>(), j.at("rows").get<std::vector<std::vector<std::string>>>()};
}

ojson to_json(const Bimatrix& bm) {
  ojson cells = ojson::array();
  for (const auto& row : bm.cells) {
    ojson r = ojson::array();
    for (const auto& c : row) r.push_back(c ? ojson::array({c->first, c->second}) : ojson(nullptr));
    cells.push_back(r);
  }
  ojson j;
  j["row_player"] = bm.row_player;
  j["row_actions"] = bm.row_actions;
  j["col_player"] = bm.col_player;
  j["col_actions"] = bm.col_actions;
  j["cells"] = cells;
  j["provenance"] = bm.provenance == Bimatrix::Provenance::kProjected ? "projected-from-game" : "loaded-from-file";
  j["note"] = bm.note;
  return j;
}

Bimatrix bimatrix_from_json(const json& j) {
  Bimatrix bm;
  bm.row_player = j.at("row_player").get<std::string>();
  bm.row_actions = j.at("row_actions").get<std::vector<std::string>>();
  bm.col_player = j.at("col_player").get<std::string>();
  bm.col_actions = j.at("col_actions").get<std::vector<std::string>>();
  for (const auto& row : j.at("cells")) {
    std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>> r;
    for (const auto& c : row) {
      if (c.is_null()) r.emplace_back(std::nullopt);
      else r.emplace_back(std::pair{c.at(0).get<std::int64_t>(), c.at(1).get<std::int64_t>()});
    }
    bm.cells.push_back(std::move(r));
  }
  bm.provenance = j.at("provenance").get<std::string>() == "projected-from-game" ? Bimatrix::Provenance::kProjected
                                                                                 : Bimatrix::Provenance::kLoaded;
  bm.note = j.value("note", "");
  return bm;
}

DominanceNotion notion_from(const std::string& s) {
  if (s == "strict") return DominanceNotion::kStrict;
  if (s == "weak") return DominanceNotion::kWeak;
  throw std::invalid_argument("unknown dominance notion '" + s + "'");
}

ojson to_json(const DominanceResult& d) {
  ojson trace = ojson::array();
  for (const Elimination& e : d.trace) {
    trace.push_back({{"player", e.player},
                     {"player_name", e.player_name},
                     {"action", e.action},
                     {"dominator", e.dominator},
                     {"notion", to_string(e.notion)}});
  }
  ojson j;
  j["notion"] = to_string(d.notion);
  j["iterated"] = d.iterated;
  j["trace"] = trace;
  j["surviving_rows"] = d.surviving_rows;
  j["surviving_cols"] = d.surviving_cols;
  j["surviving"] = to_json(d.surviving);
  return j;
}

DominanceResult dominance_from_json(const json& j) {
  DominanceResult d;
  d.notion = notion_from(j.at("notion").get<std::string>());
  d.iterated = j.at("iterated").get<bool>();
  for (const auto& e : j.at("trace")) {
    d.trace.push_back({e.at("player").get<int>(), e.at("player_name").get<std::string>(),
                       e.at("action").get<std::string>(), e.at("dominator").get<std::string>(),
                       notion_from(e.at("notion").get<std::string>())});
  }
  d.surviving_rows = j.at("surviving_rows").get<std::vector<int>>();
  d.surviving_cols = j.at("surviving_cols").get<std::vector<int>>();
  d.surviving = bimatrix_from_json(j.at("surviving"));
  return d;
}

ojson rationals(const std::vector<Rational>& values) {
  ojson out = ojson::array();
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rational> rationals_from(const json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

ojson to_json(const MixedStrategy& s) {
  return {{"player", s.player}, {"actions", s.actions}, {"probabilities", rationals(s.probabilities)}};
}

MixedStrategy strategy_from_json(const json& j) {
  return {j.at("player").get<std::string>(), j.at("actions").get<std::vector<std::string>>(),
          rationals_from(j.at("probabilities"))};
}

ojson to_json(const EquilibriumCertificate& c) {
  ojson strategies = ojson::array();
  for (const MixedStrategy& s : c.strategies) strategies.push_back(to_json(s));
  ojson verification = ojson::array();
  for (const DeviationCheck& d : c.verification) {
    ojson payoffs = ojson::array();
    for (const auto& p : d.payoffs) payoffs.push_back(p ? ojson(to_string(*p)) : ojson(nullptr));
    verification.push_back({{"player", d.player},
                            {"actions", d.actions},
                            {"payoffs", payoffs},
                            {"equilibrium_utility", to_string(d.equilibrium_utility)}});
  }
  ojson j;
  j["kind"] = c.kind == EquilibriumCertificate::Kind::kPure ? "pure" : "mixed";
  j["strategies"] = strategies;
  j["expected_utilities"] = rationals(c.expected_utilities);
  j["verification"] = verification;
  j["degenerate"] = c.degenerate;
  return j;
}

EquilibriumCertificate certificate_from_json(const json& j) {
  EquilibriumCertificate c;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "pure" && kind != "mixed") throw std::invalid_argument("unknown certificate kind '" + kind + "'");
  c.kind = kind == "pure" ? EquilibriumCertificate::Kind::kPure : EquilibriumCertificate::Kind::kMixed;
  for (const auto& s : j.at("strategies")) c.strategies.push_back(strategy_from_json(s));
  c.expected_utilities = rationals_from(j.at("expected_utilities"));
  for (const auto& d : j.at("verification")) {
    DeviationCheck check;
    check.player = d.at("player").get<std::string>();
    check.actions = d.at("actions").get<std::vector<std::string>>();
    for (const auto& p : d.at("payoffs")) {
      if (p.is_null()) check.payoffs.emplace_back(std::nullopt);
      else check.payoffs.emplace_back(parse_rational(p.get<std::string>()));
    }
    check.equilibrium_utility = parse_rational(d.at("equilibrium_utility").get<std::string>());
    c.verification.push_back(std::move(check));
  }
  c.degenerate = j.at("degenerate").get<bool>();
  return c;
}

// --- text rendering ----------------------------------------------------------

std::string fixed_width(const RowTable& t) {
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c != 0) text += "  ";
      text += cells[c];
      if (c + 1 < cells.size()) text.append(width[c] - std::min(width[c], cells[c].size()), ' ');
    }
    out << text << '\n';
  };
  line(t.columns);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : t.rows) line(row);
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string delimited(const RowTable& t) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c == 0 ? "" : ",") << csv_field(cells[c]);
    out << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return out.str();
}

std::string strategy_text(const MixedStrategy& s) {
  if (s.is_pure()) return s.actions[s.support().front()];
  std::string out;
  for (int i : s.support()) {
    if (!out.empty()) out += "; ";
    out += s.actions[i] + ":" + to_string(s.probabilities[i]);
  }
  return out;
}

std::string pair_text(const std::optional<std::pair<std::int64_t, std::int64_t>>& cell) {
  if (!cell) return "-";
  return "(" + std::to_string(cell->first) + "," + std::to_string(cell->second) + ")";
}

RowTable enumeration_table(const EnumerationReport& e) {
  RowTable t{{"field", "value"}, {}};
  t.rows.push_back({"semantics", to_string(e.semantics)});
  t.rows.push_back({"action_profiles", std::to_string(e.action_profiles)});
  t.rows.push_back({"row_space", std::to_string(e.row_space)});
  t.rows.push_back({"admissible", std::to_string(e.admissible)});
  t.rows.push_back({"max_global_utility", e.max_global_utility ? std::to_string(*e.max_global_utility) : "none"});
  t.rows.push_back({"max_global_utility_rows", std::to_string(e.max_global_utility_rows)});
  return t;
}

RowTable bimatrix_table(const Bimatrix& bm) {
  RowTable t;
  t.columns.push_back(bm.row_player + " \\ " + bm.col_player);
  for (const std::string& a : bm.col_actions) t.columns.push_back(a);
  for (std::size_t r = 0; r < bm.rows(); ++r) {
    std::vector<std::string> row{bm.row_actions[r]};
    for (std::size_t c = 0; c < bm.cols(); ++c) {
      row.push_back(r < bm.cells.size() && c < bm.cells[r].size() ? pair_text(bm.cells[r][c]) : "-");
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

RowTable dominance_table(const DominanceResult& d) {
  RowTable t{{"step", "player", "eliminated", "dominated_by", "notion"}, {}};
  for (std::size_t i = 0; i < d.trace.size(); ++i) {
    const Elimination& e = d.trace[i];
    t.rows.push_back({std::to_string(i + 1), e.player_name, e.action, e.dominator, std::string(to_string(e.notion))});
  }
  return t;
}

RowTable certificate_table(const std::vector<EquilibriumCertificate>& certs) {
  RowTable t;
  t.columns = {"#", "kind"};
  if (!certs.empty()) {
    for (const MixedStrategy& s : certs.front().strategies) t.columns.push_back(s.player);
    for (const MixedStrategy& s : certs.front().strategies) t.columns.push_back("EU_" + s.player);
  }
  t.columns.push_back("verified");
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const EquilibriumCertificate& c = certs[i];
    std::vector<std::string> row{std::to_string(i + 1), c.kind == EquilibriumCertificate::Kind::kPure ? "pure" : "mixed"};
    for (const MixedStrategy& s : c.strategies) row.push_back(strategy_text(s));
    for (const Rational& u : c.expected_utilities) row.push_back(to_string(u));
    row.push_back(c.self_consistent() ? "yes" : "NO");
    t.rows.push_back(std::move(row));
  }
  return t;
}

RowTable comparison_table(const std::vector<Comparison>& comparison) {
  RowTable t{{"claim", "paper", "computed", "recorded", "status"}, {}};
  for (const Comparison& c : comparison) t.rows.push_back({c.claim, c.paper, c.computed, c.recorded, c.status});
  return t;
}

RowTable expected_table(const ExpectedUtilityReport& e) {
  return {{"player", "strategy", "expected_utility", "decimal"},
          {{e.row.player, strategy_text(e.row), to_string(e.row_utility), [&] {
              char buf[64];
              std::snprintf(buf, sizeof buf, "%.12g", to_double(e.row_utility));
              return std::string(buf);
            }()},
           {e.col.player, strategy_text(e.col), to_string(e.col_utility), [&] {
              char buf[64];
              std::snprintf(buf, sizeof buf, "%.12g", to_double(e.col_utility));
              return std::string(buf);
            }()}}};
}

}  // namespace

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RowTable scenario_table(const GameSpec& game, const std::vector<ScenarioRow>& rows) {
  RowTable t;
  for (const PlayerDef& p : game.players) t.columns.push_back(p.name);
  for (const OutcomeVarDef& v : game.variables) t.columns.push_back(v.name);
  t.columns.push_back("GU");
  for (const PlayerDef& p : game.players) t.columns.push_back("U_" + p.name);
  for (const ScenarioRow& row : rows) {
    std::vector<std::string> cells;
    for (std::size_t p = 0; p < game.players.size(); ++p) cells.push_back(game.players[p].actions[row.actions[p]]);
    for (std::size_t v = 0; v < game.variables.size(); ++v) cells.push_back(game.variables[v].values[row.outcomes[v]].name);
    cells.push_back(std::to_string(global_utility(game, row)));
    for (std::int64_t u : utility_vector(game, row)) cells.push_back(std::to_string(u));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

RowTable payoff_rows(const PayoffTable& table) {
  RowTable t;
  for (const std::string& p : table.players()) t.columns.push_back(p);
  for (const std::string& p : table.players()) t.columns.push_back("U_" + p);
  for (std::size_t i = 0; i < table.profile_count(); ++i) {
    const ActionProfile profile = table.profile_at(i);
    const PayoffTable::Cell& cell = table.cell_at(i);
    std::vector<std::string> cells;
    for (std::size_t p = 0; p < profile.size(); ++p) cells.push_back(table.actions()[p][profile[p]]);
    for (std::size_t p = 0; p < profile.size(); ++p) cells.push_back(cell.feasible ? std::to_string(cell.utilities[p]) : "-");
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Comparison compare(std::string claim, std::string paper, std::string computed, std::string recorded) {
  std::string status;
  if (computed != recorded) status = "drift";
  else if (computed == paper) status = "match";
  else status = "documented-deviation";
  return {std::move(claim), std::move(paper), std::move(computed), std::move(recorded), std::move(status)};
}

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::kTable;
  if (text == "delimited" || text == "csv") return OutputFormat::kDelimited;
  if (text == "json" || text == "structured") return OutputFormat::kJson;
  return std::nullopt;
}

nlohmann::ordered_json report_to_json(const Report& report) {
  ojson j;
  j["tool"] = report.tool;
  j["version"] = report.version;
  j["command"] = report.command;
  ojson inputs = ojson::array();
  for (const InputDigest& d : report.inputs) inputs.push_back({{"name", d.name}, {"fnv1a64", d.fnv1a64}});
  j["inputs"] = inputs;
  if (report.enumeration) j["enumeration"] = to_json(*report.enumeration);
  if (report.rows) j["rows"] = to_json(*report.rows);
  if (report.bimatrix) j["bimatrix"] = to_json(*report.bimatrix);
  if (report.dominance) j["dominance"] = to_json(*report.dominance);
  if (!report.certificates.empty() || report.degenerate) {
    ojson certs = ojson::array();
    for (const EquilibriumCertificate& c : report.certificates) certs.push_back(to_json(c));
    j["certificates"] = certs;
  }
  if (report.degenerate) j["degenerate"] = *report.degenerate;
  if (report.expected) {
    j["expected"] = {{"row", to_json(report.expected->row)},
                     {"col", to_json(report.expected->col)},
                     {"row_utility", to_string(report.expected->row_utility)},
                     {"col_utility", to_string(report.expected->col_utility)}};
  }
  if (!report.comparison.empty()) {
    ojson rows = ojson::array();
    for (const Comparison& c : report.comparison) {
      rows.push_back({{"claim", c.claim},
                      {"paper", c.paper},
                      {"computed", c.computed},
                      {"recorded", c.recorded},
                      {"status", c.status}});
    }
    j["comparison"] = rows;
  }
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.tool = j.at("tool").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  for (const auto& d : j.at("inputs")) r.inputs.push_back({d.at("name").get<std::string>(), d.at("fnv1a64").get<std::string>()});
  if (j.contains("enumeration")) r.enumeration = enumeration_from_json(j.at("enumeration"));
  if (j.contains("rows")) r.rows = rows_from_json(j.at("rows"));
  if (j.contains("bimatrix")) r.bimatrix = bimatrix_from_json(j.at("bimatrix"));
  if (j.contains("dominance")) r.dominance = dominance_from_json(j.at("dominance"));
  if (j.contains("certificates")) {
    for (const auto& c : j.at("certificates")) r.certificates.push_back(certificate_from_json(c));
  }
  if (j.contains("degenerate")) r.degenerate = j.at("degenerate").get<bool>();
  if (j.contains("expected")) {
    const auto& e = j.at("expected");
    r.expected = ExpectedUtilityReport{strategy_from_json(e.at("row")), strategy_from_json(e.at("col")),
                                       parse_rational(e.at("row_utility").get<std::string>()),
                                       parse_rational(e.at("col_utility").get<std::string>())};
  }
  if (j.contains("comparison")) {
    for (const auto& c : j.at("comparison")) {
      r.comparison.push_back({c.at("claim").get<std::string>(), c.at("paper").get<std::string>(),
                              c.at("computed").get<std::string>(), c.at("recorded").get<std::string>(),
                              c.at("status").get<std::string>()});
    }
  }
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string emit_report(const Report& report, OutputFormat format) {
  if (format == OutputFormat::kJson) return report_to_json(report).dump(2) + "\n";

  const bool table = format == OutputFormat::kTable;
  auto render = [&](const RowTable& t) { return table ? fixed_width(t) : delimited(t); };
  std::ostringstream out;
  auto section = [&](const std::string& title, const RowTable& t) {
    out << '\n';
    if (table) out << "== " << title << " ==\n";
    else out << "# " << title << '\n';
    out << render(t);
  };

  if (table) {
    out << report.tool << ' ' << report.version << "  " << report.command << '\n';
    for (const InputDigest& d : report.inputs) out << "input " << d.name << "  fnv1a64=" << d.fnv1a64 << '\n';
  } else {
    out << "# " << report.tool << ' ' << report.version << ' ' << report.command << '\n';
    for (const InputDigest& d : report.inputs) out << "# input " << csv_field(d.name) << " fnv1a64=" << d.fnv1a64 << '\n';
  }
  if (report.enumeration) section("enumeration", enumeration_table(*report.enumeration));
  if (report.rows) section("rows", *report.rows);
  if (report.bimatrix) {
    section("bimatrix", bimatrix_table(*report.bimatrix));
    if (!report.bimatrix->note.empty()) out << (table ? "" : "# ") << report.bimatrix->note << '\n';
  }
  if (report.dominance) {
    section(std::string("dominance (") + std::string(to_string(report.dominance->notion)) +
                (report.dominance->iterated ? ", iterated)" : ")"),
            dominance_table(*report.dominance));
    section("surviving", bimatrix_table(report.dominance->surviving));
  }
  if (!report.certificates.empty() || report.degenerate) {
    section("equilibria", certificate_table(report.certificates));
    if (report.degenerate) out << (table ? "" : "# ") << "degenerate: " << (*report.degenerate ? "yes" : "no") << '\n';
  }
  if (report.expected) section("expected utility", expected_table(*report.expected));
  if (!report.comparison.empty()) section("comparison", comparison_table(report.comparison));
  if (!report.notes.empty()) {
    out << '\n' << (table ? "== notes ==\n" : "# notes\n");
    for (const std::string& n : report.notes) out << (table ? "- " : "# ") << n << '\n';
  }
  return out.str();
}

}  // namespace oagame
