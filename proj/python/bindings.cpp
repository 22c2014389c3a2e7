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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "oagame/cli.h"
#include "oagame/dsl.h"
#include "oagame/engine.h"
#include "oagame/equilibrium.h"
#include "oagame/fixtures.h"
#include "oagame/report.h"

namespace py = pybind11;
using namespace oagame;

namespace {

Binding parse_binding(const std::string& text) {
  if (text == "strict") return Binding::kStrict;
  if (text == "lenient") return Binding::kLenient;
  throw std::invalid_argument("unknown semantics '" + text + "' (expected strict or lenient)");
}

DominanceNotion parse_notion(const std::string& text) {
  if (text == "strict") return DominanceNotion::kStrict;
  if (text == "weak") return DominanceNotion::kWeak;
  throw std::invalid_argument("unknown dominance notion '" + text + "' (expected strict or weak)");
}

ValidatedGame load_or_throw(const std::string& text, const std::string& semantics) {
  ValidationResult r = load_game(text, ParseOptions{parse_binding(semantics)});
  if (!r.ok()) {
    std::string message;
    for (const ParseError& e : r.errors) message += format_diagnostic(e) + "\n";
    throw std::invalid_argument(message);
  }
  return std::move(*r.game);
}

// Complex results cross the boundary as the report tree, serialised.
std::string as_json(const Report& report) { return report_to_json(report).dump(); }

Report fragment(const char* command) {
  Report r;
  r.version = version_string();
  r.command = command;
  return r;
}

MixedStrategy strategy(const std::string& player, const std::vector<std::string>& actions,
                       const std::vector<std::string>& probabilities) {
  MixedStrategy s{player, actions, {}};
  for (const std::string& p : probabilities) s.probabilities.push_back(parse_rational(p));
  return s;
}

}  // namespace

PYBIND11_MODULE(_oagame, m) {
  m.doc() = "Normal-form game workbench: rule-constrained scenarios, payoff tables and equilibria.";
  m.attr("__version__") = version_string();

  py::register_exception<ResolutionError>(m, "ResolutionError", PyExc_ValueError);

  py::class_<ValidatedGame>(m, "Game")
      .def_property_readonly("name", [](const ValidatedGame& g) { return g.spec().name; })
      .def_property_readonly("players",
                             [](const ValidatedGame& g) {
                               std::vector<std::string> out;
                               for (const auto& p : g.spec().players) out.push_back(p.name);
                               return out;
                             })
      .def_property_readonly("actions",
                             [](const ValidatedGame& g) {
                               std::vector<std::vector<std::string>> out;
                               for (const auto& p : g.spec().players) out.push_back(p.actions);
                               return out;
                             })
      .def_property_readonly("variables",
                             [](const ValidatedGame& g) {
                               std::vector<std::string> out;
                               for (const auto& v : g.spec().variables) out.push_back(v.name);
                               return out;
                             })
      .def_property_readonly("rule_count", [](const ValidatedGame& g) { return g.spec().rules.size(); })
      .def_property_readonly("action_profile_count", &ValidatedGame::action_profile_count)
      .def_property_readonly("row_space_size", &ValidatedGame::row_space_size)
      .def_property_readonly("warnings",
                             [](const ValidatedGame& g) {
                               std::vector<std::string> out;
                               for (const Warning& w : g.warnings()) out.push_back(format_diagnostic(w));
                               return out;
                             })
      .def("serialize", [](const ValidatedGame& g) { return serialize_game_spec(g.spec()); })
      .def("to_json", [](const ValidatedGame& g) { return game_to_json(g.spec()).dump(); });

  m.def("load_game", &load_or_throw, py::arg("text"), py::arg("semantics") = "strict",
        "Parse and validate .game text; raises ValueError listing every diagnostic.");
  m.def("bundled_game_text", [] { return std::string(bundled_game_text()); });
  m.def("bundled_table5_text", [] { return std::string(bundled_table5_text()); });
  m.def("bundled_table6_text", [] { return std::string(bundled_table6_text()); });

  m.def(
      "enumerate_json",
      [](const ValidatedGame& g, const std::string& semantics, int workers, bool dump) {
        Report r = fragment("enumerate");
        const Semantics s{parse_binding(semantics)};
        py::gil_scoped_release release;
        if (dump) {
          AdmissibleSet set = admissible_rows(g, s, EngineOptions{workers});
          r.enumeration = set.report;
          r.rows = scenario_table(g.spec(), set.rows);
        } else {
          r.enumeration = enumeration_report(g, s, EngineOptions{workers});
        }
        return as_json(r);
      },
      py::arg("game"), py::arg("semantics") = "strict", py::arg("workers") = 1, py::arg("dump") = false);

  m.def(
      "top_json",
      [](const ValidatedGame& g, const std::string& semantics) {
        Report r = fragment("top");
        const Semantics s{parse_binding(semantics)};
        r.enumeration = enumeration_report(g, s);
        r.rows = scenario_table(g.spec(), top_gu_rows(g, s).rows);
        return as_json(r);
      },
      py::arg("game"), py::arg("semantics") = "strict");

  m.def(
      "payoffs_json",
      [](const ValidatedGame& g, const std::string& policy, const std::string& semantics) {
        Report r = fragment("payoffs");
        r.rows = payoff_rows(derive_payoff_table(g, Semantics{parse_binding(semantics)}, parse_policy(policy, g.spec())));
        return as_json(r);
      },
      py::arg("game"), py::arg("policy") = "max-gu", py::arg("semantics") = "strict");

  m.def(
      "project_text",
      [](const ValidatedGame& g, const std::string& row_player, const std::string& col_player,
         const std::string& policy, const std::string& semantics) {
        const Bimatrix bm = project_bimatrix(g, Semantics{parse_binding(semantics)}, parse_policy(policy, g.spec()),
                                             g.spec().player_index(row_player), g.spec().player_index(col_player));
        return serialize_bimatrix(bm);
      },
      py::arg("game"), py::arg("row_player"), py::arg("col_player"), py::arg("policy") = "max-gu",
      py::arg("semantics") = "strict", "Two-player projection in bimatrix text form.");

  m.def(
      "pure_nash_json",
      [](const std::string& bimatrix_text) {
        Report r = fragment("nash");
        const Bimatrix bm = parse_bimatrix(bimatrix_text);
        r.bimatrix = bm;
        r.certificates = pure_nash(bm);
        return as_json(r);
      },
      py::arg("bimatrix_text"));

  m.def(
      "game_pure_nash_json",
      [](const ValidatedGame& g, const std::string& policy, const std::string& semantics) {
        Report r = fragment("nash");
        r.certificates =
            pure_nash(derive_payoff_table(g, Semantics{parse_binding(semantics)}, parse_policy(policy, g.spec())));
        return as_json(r);
      },
      py::arg("game"), py::arg("policy") = "max-gu", py::arg("semantics") = "strict");

  m.def(
      "mixed_nash_json",
      [](const std::string& bimatrix_text) {
        Report r = fragment("mixed");
        const Bimatrix bm = parse_bimatrix(bimatrix_text);
        const MixedNashResult res = mixed_nash_2p(bm);
        r.bimatrix = bm;
        r.certificates = res.equilibria;
        r.degenerate = res.degenerate;
        return as_json(r);
      },
      py::arg("bimatrix_text"));

  m.def(
      "dominance_json",
      [](const std::string& bimatrix_text, const std::string& notion, bool iterate) {
        Report r = fragment("dominance");
        const Bimatrix bm = parse_bimatrix(bimatrix_text);
        r.bimatrix = bm;
        r.dominance = dominance_analysis(bm, parse_notion(notion), iterate);
        return as_json(r);
      },
      py::arg("bimatrix_text"), py::arg("notion") = "strict", py::arg("iterate") = false);

  m.def(
      "expected_utility_text",
      [](const std::string& bimatrix_text, const std::vector<std::string>& row,
         const std::vector<std::string>& col) {
        const Bimatrix bm = parse_bimatrix(bimatrix_text);
        const auto [u, v] = expected_utility(bm, strategy(bm.row_player, bm.row_actions, row),
                                             strategy(bm.col_player, bm.col_actions, col));
        return std::make_pair(to_string(u), to_string(v));
      },
      py::arg("bimatrix_text"), py::arg("row"), py::arg("col"),
      "Exact expected utilities as rational strings; probabilities are rational strings.");

  m.def("reproduce_json", [](int workers) { return as_json(reproduce_report(EngineOptions{workers})); },
        py::arg("workers") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const CliOutcome o = run_cli(args, out, err);
        return py::make_tuple(o.status, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line driver in-process; returns (status, stdout, stderr).");
}
