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

#include "oagame/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "oagame/dsl.h"
#include "oagame/equilibrium.h"
#include "oagame/fixtures.h"

#ifndef OAGAME_VERSION
#define OAGAME_VERSION "0.0.0"
#endif

namespace oagame {
namespace {

// Thrown inside a command; carries the exit status. The message, if any, has
// already been written or is written by the top-level handler.
struct CliFailure {
  int status;
  std::string message;
};

struct Config {
  std::string format_text;
  std::string output;
  int workers = 1;
  std::string semantics = "strict";
  std::string game_path;
  std::string bimatrix_path;
  std::string policy = "max-gu";
  std::string players;
  bool dump = false;
  std::string mix_row;
  std::string mix_col;
  std::string notion = "strict";
  bool iterate = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitUsage, "error: cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string pair_text(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string cell_text(const Bimatrix& bm, std::size_t r, std::size_t c) {
  const auto& cell = bm.cells.at(r).at(c);
  return cell ? pair_text(cell->first, cell->second) : "-";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    const auto b = part.find_first_not_of(" \t");
    const auto e = part.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : part.substr(b, e - b + 1));
  }
  return parts;
}

bool has_pure_equilibrium(const std::vector<EquilibriumCertificate>& certs, const std::vector<int>& profile) {
  for (const EquilibriumCertificate& c : certs) {
    bool same = c.strategies.size() == profile.size();
    for (std::size_t p = 0; same && p < profile.size(); ++p) {
      const auto support = c.strategies[p].support();
      same = support.size() == 1 && support.front() == profile[p];
    }
    if (same) return true;
  }
  return false;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Counting claims for the bundled game.
void add_count_comparisons(Report& report, const ValidatedGame& game, const EnumerationReport* enumeration) {
  const RecordedFigures& rec = recorded_figures();
  report.comparison.push_back(compare("action profiles", "432", std::to_string(game.action_profile_count()),
                                      std::to_string(rec.action_profiles)));
  report.comparison.push_back(
      compare("row space", "110592", std::to_string(game.row_space_size()), std::to_string(rec.row_space)));
  if (enumeration == nullptr) return;
  report.comparison.push_back(compare("admissible rows", "3136", std::to_string(enumeration->admissible),
                                      std::to_string(rec.admissible)));
  report.comparison.push_back(
      compare("max global utility", "7",
              enumeration->max_global_utility ? std::to_string(*enumeration->max_global_utility) : "none",
              std::to_string(rec.max_global_utility)));
  report.comparison.push_back(compare("rows at max global utility", "26",
                                      std::to_string(enumeration->max_global_utility_rows),
                                      std::to_string(rec.max_global_utility_rows)));
}

class Runner {
 public:
  Runner(Config config, std::ostream& err) : cfg_(std::move(config)), err_(err) {}

  Report validate() {
    Report report = base("validate");
    const ValidatedGame game = load_game_file();
    const GameSpec& spec = game.spec();
    report.notes.push_back("valid: " + std::to_string(spec.players.size()) + " players, " +
                           std::to_string(spec.variables.size()) + " variables, " +
                           std::to_string(spec.rules.size()) + " rules, " +
                           std::to_string(game.action_profile_count()) + " action profiles, " +
                           std::to_string(game.row_space_size()) + " rows");
    for (const Warning& w : game.warnings()) report.notes.push_back(format_diagnostic(w));
    if (bundled_game_) add_count_comparisons(report, game, nullptr);
    return report;
  }

  Report enumerate() {
    Report report = base("enumerate");
    const ValidatedGame game = load_game_file();
    if (cfg_.dump) {
      AdmissibleSet set = admissible_rows(game, semantics(), engine());
      report.enumeration = set.report;
      report.rows = scenario_table(game.spec(), set.rows);
    } else {
      report.enumeration = enumeration_report(game, semantics(), engine());
    }
    if (bundled_game_) add_count_comparisons(report, game, &*report.enumeration);
    return report;
  }

  Report top() {
    Report report = base("top");
    const ValidatedGame game = load_game_file();
    const TopRows top = top_gu_rows(game, semantics(), engine());
    report.enumeration = enumeration_report(game, semantics(), engine());
    report.rows = scenario_table(game.spec(), top.rows);
    if (bundled_game_) add_count_comparisons(report, game, &*report.enumeration);
    return report;
  }

  Report payoffs() {
    Report report = base("payoffs");
    const ValidatedGame game = load_game_file();
    const CompletionPolicy policy = parse_policy_flag(game.spec());
    report.rows = payoff_rows(derive_payoff_table(game, semantics(), policy, engine()));
    report.notes.push_back("policy: " + to_string(policy, game.spec()));
    return report;
  }

  Report project() {
    Report report = base("project");
    if (cfg_.players.empty()) throw usage("project requires --players");
    report.bimatrix = load_bimatrix();
    return report;
  }

  Report nash() {
    Report report = base("nash");
    if (!cfg_.game_path.empty() && cfg_.bimatrix_path.empty() && cfg_.players.empty()) {
      const ValidatedGame game = load_game_file();
      const CompletionPolicy policy = parse_policy_flag(game.spec());
      const PayoffTable table = derive_payoff_table(game, semantics(), policy, engine());
      report.certificates = pure_nash(table);
      report.notes.push_back("policy: " + to_string(policy, game.spec()));
      report.notes.push_back(std::to_string(report.certificates.size()) + " pure equilibria");
      return report;
    }
    const Bimatrix bm = load_bimatrix();
    report.bimatrix = bm;
    report.certificates = pure_nash(bm);
    report.notes.push_back(std::to_string(report.certificates.size()) + " pure equilibria");
    if (bundled_table5_) {
      report.comparison.push_back(compare("(Publish OA, Grant TA) is a pure equilibrium of table 5", "yes",
                                          yes_no(has_pure_equilibrium(report.certificates, {1, 1})), "yes"));
    }
    return report;
  }

  Report mixed() {
    Report report = base("mixed");
    const Bimatrix bm = load_bimatrix();
    if (!bm.complete()) throw diagnostics("mixed requires a bimatrix without infeasible cells");
    report.bimatrix = bm;
    const MixedNashResult result = mixed_nash_2p(bm);
    report.certificates = result.equilibria;
    report.degenerate = result.degenerate;
    return report;
  }

  Report expected() {
    Report report = base("expected");
    const Bimatrix bm = load_bimatrix();
    if (!bm.complete()) throw diagnostics("expected requires a bimatrix without infeasible cells");
    if (cfg_.mix_row.empty() || cfg_.mix_col.empty()) throw usage("expected requires --mix-row and --mix-col");
    const MixedStrategy row = parse_mixture(cfg_.mix_row, bm.row_player, bm.row_actions);
    const MixedStrategy col = parse_mixture(cfg_.mix_col, bm.col_player, bm.col_actions);
    const auto [u_row, u_col] = expected_utility(bm, row, col);
    report.bimatrix = bm;
    report.expected = ExpectedUtilityReport{row, col, u_row, u_col};
    return report;
  }

  Report dominance() {
    Report report = base("dominance");
    DominanceNotion notion;
    if (cfg_.notion == "strict") notion = DominanceNotion::kStrict;
    else if (cfg_.notion == "weak") notion = DominanceNotion::kWeak;
    else throw usage("unknown dominance notion '" + cfg_.notion + "' (expected strict or weak)");
    const Bimatrix bm = load_bimatrix();
    if (!bm.complete()) throw diagnostics("dominance requires a bimatrix without infeasible cells");
    report.bimatrix = bm;
    report.dominance = dominance_analysis(bm, notion, cfg_.iterate);
    return report;
  }

 private:
  static CliFailure usage(std::string message) { return {kExitUsage, "error: " + std::move(message)}; }
  static CliFailure diagnostics(std::string message) { return {kExitDiagnostics, "error: " + std::move(message)}; }

  Report base(std::string command) {
    Report r;
    r.version = version_string();
    r.command = std::move(command);
    return r;
  }

  Semantics semantics() const {
    Semantics s;
    s.binding = binding();
    return s;
  }

  Binding binding() const {
    if (cfg_.semantics == "strict") return Binding::kStrict;
    if (cfg_.semantics == "lenient") return Binding::kLenient;
    throw usage("unknown semantics '" + cfg_.semantics + "' (expected strict or lenient)");
  }

  EngineOptions engine() const {
    if (cfg_.workers < 1) throw usage("--workers must be at least 1");
    return EngineOptions{cfg_.workers};
  }

  CompletionPolicy parse_policy_flag(const GameSpec& spec) const {
    try {
      return parse_policy(cfg_.policy, spec);
    } catch (const std::exception& e) {
      throw usage(std::string("bad --policy: ") + e.what());
    }
  }

  ValidatedGame load_game_file() {
    if (cfg_.game_path.empty()) throw usage("--game is required");
    const std::string text = read_file(cfg_.game_path);
    inputs_.push_back({cfg_.game_path, fnv1a64_hex(text)});
    bundled_game_ = text == bundled_game_text();
    ValidationResult result = load_game(text, ParseOptions{binding()});
    for (const ParseError& e : result.errors) err_ << cfg_.game_path << ":" << format_diagnostic(e) << '\n';
    for (const Warning& w : result.warnings) err_ << cfg_.game_path << ":" << format_diagnostic(w) << '\n';
    if (!result.ok()) throw CliFailure{kExitDiagnostics, ""};
    return std::move(*result.game);
  }

  Bimatrix load_bimatrix() {
    if (!cfg_.bimatrix_path.empty()) {
      if (!cfg_.game_path.empty()) throw usage("give either --bimatrix or --game, not both");
      const std::string text = read_file(cfg_.bimatrix_path);
      inputs_.push_back({cfg_.bimatrix_path, fnv1a64_hex(text)});
      bundled_table5_ = text == bundled_table5_text();
      try {
        return parse_bimatrix(text);
      } catch (const std::invalid_argument& e) {
        throw CliFailure{kExitDiagnostics, cfg_.bimatrix_path + ":" + e.what()};
      }
    }
    if (cfg_.game_path.empty()) throw usage("give --bimatrix, or --game with --players");
    if (cfg_.players.empty()) throw usage("--players is required to project a game onto two players");
    const ValidatedGame game = load_game_file();
    const std::vector<std::string> names = split(cfg_.players, ',');
    if (names.size() != 2) throw usage("--players takes exactly two player names");
    const auto row = game.spec().find_player(names[0]);
    const auto col = game.spec().find_player(names[1]);
    if (!row) throw usage("unknown player '" + names[0] + "'");
    if (!col) throw usage("unknown player '" + names[1] + "'");
    if (*row == *col) throw usage("--players names the same player twice");
    const CompletionPolicy policy = parse_policy_flag(game.spec());
    return project_bimatrix(game, semantics(), policy, *row, *col, engine());
  }

  MixedStrategy parse_mixture(const std::string& text, const std::string& player,
                              const std::vector<std::string>& actions) const {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != actions.size()) {
      throw usage("mixture for " + player + " needs " + std::to_string(actions.size()) + " probabilities");
    }
    MixedStrategy s{player, actions, {}};
    for (const std::string& p : parts) {
      try {
        s.probabilities.push_back(parse_rational(p));
      } catch (const std::invalid_argument&) {
        throw usage("bad probability '" + p + "'");
      }
    }
    try {
      s.validate();
    } catch (const std::invalid_argument& e) {
      throw usage(e.what());
    }
    return s;
  }

 public:
  std::vector<InputDigest> inputs_;

 private:
  Config cfg_;
  std::ostream& err_;
  bool bundled_game_ = false;
  bool bundled_table5_ = false;
};

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--format", cfg.format_text, "table, delimited or json");
  sub->add_option("--output", cfg.output, "write the report to this file");
  sub->add_option("--workers", cfg.workers, "enumeration threads");
  sub->add_option("--semantics", cfg.semantics, "strict or lenient rule binding");
}

}  // namespace

std::string version_string() { return OAGAME_VERSION; }

const RecordedFigures& recorded_figures() {
  static const RecordedFigures kFigures{
      432, 110592, 17640, 8, 30,
      {"(4,1)", "(2,1)", "(4,0)", "(4,0)", "(4,1)", "(4,1)", "(4,0)", "(4,0)"}};
  return kFigures;
}

Report reproduce_report(const EngineOptions& options) {
  const RecordedFigures& rec = recorded_figures();
  Report report;
  report.version = version_string();
  report.command = "reproduce";
  report.inputs = {{"bundled:oa.game", fnv1a64_hex(bundled_game_text())},
                   {"bundled:table5.bmx", fnv1a64_hex(bundled_table5_text())},
                   {"bundled:table6.bmx", fnv1a64_hex(bundled_table6_text())}};

  ValidationResult loaded = load_game(bundled_game_text());
  if (!loaded.ok()) throw std::logic_error("bundled game does not validate");
  const ValidatedGame& game = *loaded.game;
  const GameSpec& spec = game.spec();

  report.enumeration = enumeration_report(game, {}, options);
  add_count_comparisons(report, game, &*report.enumeration);

  const Bimatrix projected = project_bimatrix(game, {}, CompletionPolicy::max_global_utility(),
                                              spec.player_index("Academics"), spec.player_index("Editors"), options);
  const Bimatrix table5 = parse_bimatrix(bundled_table5_text());
  auto index_of = [](const std::vector<std::string>& actions, const std::string& name) {
    const auto it = std::find(actions.begin(), actions.end(), name);
    if (it == actions.end()) throw std::logic_error("bundled fixtures disagree on action '" + name + "'");
    return static_cast<std::size_t>(it - actions.begin());
  };
  for (std::size_t r = 0; r < table5.rows(); ++r) {
    for (std::size_t c = 0; c < table5.cols(); ++c) {
      const std::size_t pr = index_of(projected.row_actions, table5.row_actions[r]);
      const std::size_t pc = index_of(projected.col_actions, table5.col_actions[c]);
      report.comparison.push_back(compare("table 5 cell (" + table5.row_actions[r] + ", " + table5.col_actions[c] + ")",
                                          cell_text(table5, r, c), cell_text(projected, pr, pc),
                                          rec.projected_cells.at(r * table5.cols() + c)));
    }
  }
  report.bimatrix = projected;

  report.certificates = pure_nash(table5);
  report.comparison.push_back(compare("(Publish OA, Grant TA) is a pure equilibrium of table 5", "yes",
                                      yes_no(has_pure_equilibrium(report.certificates, {1, 1})), "yes"));
  report.comparison.push_back(compare("(Publish OA, Grant TA) is a pure equilibrium of the projected game", "yes",
                                      yes_no(has_pure_equilibrium(
                                          pure_nash(projected), {static_cast<int>(index_of(projected.row_actions, "Publish OA")),
                                                                 static_cast<int>(index_of(projected.col_actions, "Grant TA"))})),
                                      "yes"));

  const Bimatrix table6 = parse_bimatrix(bundled_table6_text());
  report.dominance = dominance_analysis(table6, DominanceNotion::kWeak, true);
  report.comparison.push_back(compare("(Publish OA, TA) is a pure equilibrium of table 6", "yes",
                                      yes_no(has_pure_equilibrium(pure_nash(table6), {1, 0})), "yes"));

  const std::vector<std::string> q_text = {"0", "1/2", "1"};
  const std::vector<std::string> oa_paper = {"4", "7/2", "3"};
  const std::vector<std::string> ta_paper = {"0", "3/2", "3"};
  const MixedStrategy ta_row = MixedStrategy::pure(table6.row_player, table6.row_actions, 0);
  const MixedStrategy oa_row = MixedStrategy::pure(table6.row_player, table6.row_actions, 1);
  for (std::size_t i = 0; i < q_text.size(); ++i) {
    const Rational q = parse_rational(q_text[i]);
    const MixedStrategy col{table6.col_player, table6.col_actions, {q, Rational(1) - q}};
    report.comparison.push_back(compare("EU_Academics(Publish OA) = 3q+4(1-q) at q=" + q_text[i], oa_paper[i],
                                        to_string(expected_utility(table6, oa_row, col).first), oa_paper[i]));
    report.comparison.push_back(compare("EU_Academics(Publish TA) = 3q at q=" + q_text[i], ta_paper[i],
                                        to_string(expected_utility(table6, ta_row, col).first), "3"));
    if (q_text[i] == "1/2") report.expected = ExpectedUtilityReport{oa_row, col, expected_utility(table6, oa_row, col).first,
                                                                    expected_utility(table6, oa_row, col).second};
  }

  report.notes = {
      "enumeration: bundled oa.game, strict implication-filter semantics",
      "bimatrix: bundled game projected onto Academics x Editors, policy max-gu",
      "certificates: pure equilibria of bundled table5.bmx",
      "dominance: iterated weak elimination on bundled table6.bmx",
      "expected: Academics playing Publish OA against Editors mixing TA/OA with q=1/2 on table6.bmx",
      "table 6 Publish TA row pays 3 in both columns, so EU_Academics(Publish TA) is 3 for every q",
      "table 6 Editors earn 1 in the TA column whatever Academics play; the printed p has no computed counterpart",
  };
  return report;
}

CliOutcome run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Open access publishing game workbench", "oagame"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string());

  auto* validate = app.add_subcommand("validate", "parse and validate a game file");
  auto* enumerate = app.add_subcommand("enumerate", "count admissible scenario rows");
  auto* top = app.add_subcommand("top", "list the rows of maximal global utility");
  auto* payoffs = app.add_subcommand("payoffs", "derive the payoff table of a game");
  auto* project = app.add_subcommand("project", "project a game onto two players");
  auto* nash = app.add_subcommand("nash", "pure Nash equilibria");
  auto* mixed = app.add_subcommand("mixed", "two-player support enumeration");
  auto* expected = app.add_subcommand("expected", "expected utilities under given mixtures");
  auto* dominance = app.add_subcommand("dominance", "dominated actions of a bimatrix");
  auto* reproduce = app.add_subcommand("reproduce", "analyze the bundled fixtures and compare with published figures");

  for (CLI::App* sub : {validate, enumerate, top, payoffs, project, nash, mixed, expected, dominance, reproduce}) {
    add_common(sub, cfg);
  }
  for (CLI::App* sub : {validate, enumerate, top, payoffs}) sub->add_option("--game", cfg.game_path)->required();
  for (CLI::App* sub : {project, nash, mixed, expected, dominance}) sub->add_option("--game", cfg.game_path);
  for (CLI::App* sub : {nash, mixed, expected, dominance}) sub->add_option("--bimatrix", cfg.bimatrix_path);
  for (CLI::App* sub : {payoffs, project, nash, mixed, expected, dominance}) {
    sub->add_option("--policy", cfg.policy, "max-gu, optimistic:P, pessimistic:P or fixed:Name=v;...");
  }
  for (CLI::App* sub : {project, nash, mixed, expected, dominance}) {
    sub->add_option("--players", cfg.players, "row and column player, comma separated");
  }
  enumerate->add_flag("--dump", cfg.dump, "list every admissible row");
  expected->add_option("--mix-row", cfg.mix_row, "row probabilities in action order, e.g. 1/2,1/2");
  expected->add_option("--mix-col", cfg.mix_col, "column probabilities in action order");
  dominance->add_option("--notion", cfg.notion, "strict or weak");
  dominance->add_flag("--iterate", cfg.iterate, "eliminate iteratively");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitUsage, std::nullopt};
  }

  std::string format_text = cfg.format_text;
  if (format_text.empty()) {
    const char* env = std::getenv(kFormatEnvVar);
    format_text = env != nullptr && *env != '\0' ? env : "table";
  }
  const auto format = parse_output_format(format_text);
  if (!format) {
    err << "error: unknown output format '" << format_text << "' (expected table, delimited or json)\n";
    return {kExitUsage, std::nullopt};
  }

  Runner runner(cfg, err);
  Report report;
  int status = kExitOk;
  try {
    if (*validate) report = runner.validate();
    else if (*enumerate) report = runner.enumerate();
    else if (*top) report = runner.top();
    else if (*payoffs) report = runner.payoffs();
    else if (*project) report = runner.project();
    else if (*nash) report = runner.nash();
    else if (*mixed) report = runner.mixed();
    else if (*expected) report = runner.expected();
    else if (*dominance) report = runner.dominance();
    else if (*reproduce) {
      if (cfg.workers < 1) throw CliFailure{kExitUsage, "error: --workers must be at least 1"};
      report = reproduce_report(EngineOptions{cfg.workers});
    }
  } catch (const CliFailure& f) {
    if (!f.message.empty()) err << f.message << '\n';
    return {f.status, std::nullopt};
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return {kExitDiagnostics, std::nullopt};
  }
  if (report.inputs.empty()) report.inputs = runner.inputs_;
  for (const Comparison& c : report.comparison) {
    if (c.status == "drift") {
      err << "drift: " << c.claim << ": computed " << c.computed << ", recorded " << c.recorded << '\n';
      status = kExitDiagnostics;
    }
  }

  const std::string rendered = emit_report(report, *format);
  if (cfg.output.empty()) {
    out << rendered;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    file << rendered;
    file.close();
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return {kExitUsage, report};
    }
  }
  return {status, report};
}

}  // namespace oagame
