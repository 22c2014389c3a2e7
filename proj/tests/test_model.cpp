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


#include "doctest.h"
#include "naive_oracle.h"
#include "oagame/model.h"
#include "test_support.h"

using namespace oagame;

TEST_SUITE("model") {

TEST_CASE("name normalisation") {
  CHECK(normalize_name("  Impact   and\tRelevance ") == "impact and relevance");
  CHECK(normalize_name("EDITORS") == "editors");
  CHECK(normalize_name("") == "");
}

TEST_CASE("lookups resolve names and aliases") {
  const ValidatedGame g = testing::bundled_game();
  const GameSpec& s = g.spec();
  CHECK(s.find_player("Funder") == s.find_player("Funders"));
  CHECK(s.find_player("editor") == 3);
  CHECK_FALSE(s.find_player("Readers").has_value());
  CHECK(s.find_variable("quality results") == s.find_variable("Results"));
  CHECK(s.find_variable("Impact and Relevance") == s.find_variable("Impact"));
  CHECK_THROWS_AS(s.player_index("Readers"), ResolutionError);
  CHECK_THROWS_AS(s.variable_index("Happiness"), ResolutionError);
  const OutcomeVarDef& opp = s.variables[s.variable_index("Opportunity")];
  CHECK(opp.find_value("Maximal") == opp.find_value("More"));
  CHECK(opp.find_value("minimal") == 1);
  CHECK_FALSE(opp.find_value("Huge").has_value());
  CHECK(opp.max_score() == 1);
}

TEST_CASE("utilities") {
  const ValidatedGame g = testing::bundled_game();
  const GameSpec& s = g.spec();
  const ScenarioRow all_more = make_row(
      s, {{"Academics", "Publish OA"}, {"Administrators", "Support OA"}, {"Funders", "Demand publications"},
          {"Editors", "Grant TA"}, {"Politicians", "Permit TA"}},
      {{"Opportunity", "More"}, {"Visibility", "More"}, {"Prestige", "More"}, {"Promotion", "More"},
       {"Savings", "More"}, {"Results", "More"}, {"Income", "More"}, {"Impact", "More"}});
  CHECK(global_utility(s, all_more) == 8);
  CHECK(agent_utility(s, "Academics", all_more) == 4);
  CHECK(agent_utility(s, "Politicians", all_more) == 1);
  CHECK(utility_vector(s, all_more) == std::vector<std::int64_t>{4, 1, 1, 1, 1});
  CHECK(value_of(s.variables[0], "Maximal") == 1);
  CHECK(value_of(s.variables[0], 1) == 0);
  CHECK_THROWS_AS(value_of(s.variables[0], "Huge"), ResolutionError);

  GameSpec partial = s;
  partial.utilities.pop_back();
  CHECK_THROWS_AS(agent_utility(partial, "Politicians", all_more), MissingUtilityError);
  CHECK(utility_vector(partial, all_more).back() == 0);
}

TEST_CASE("make_row rejects unknown or partial maps") {
  const ValidatedGame g = testing::bundled_game();
  const GameSpec& s = g.spec();
  CHECK_THROWS_AS(make_row(s, {{"Academics", "Publish OA"}}, {}), ResolutionError);
  CHECK_THROWS_AS(make_row(s, {{"Readers", "Read"}}, {}), ResolutionError);
}

TEST_CASE("global utility equals the oracle on random rows") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const GameSpec spec = oracle::random_small_game(rng);
    for (std::uint64_t k = 0; k < oracle::row_space(spec); ++k) {
      const ScenarioRow row = oracle::decode_row(spec, k);
      REQUIRE(global_utility(spec, row) == oracle::gu(spec, row));
    }
  }
}

TEST_CASE("rule and atom equality ignore source text") {
  Rule a{{Atom::action(0, 1)}, {Atom::outcome(2, 0)}, {}, "rule if x", {1, 1, 5}};
  Rule b{{Atom::action(0, 1)}, {Atom::outcome(2, 0)}, {}, "different text", {9, 2, 3}};
  CHECK(a == b);
  b.otherwise.push_back(Atom::outcome(2, 1));
  CHECK_FALSE(a == b);
  CHECK(Atom::inert("Nobody", "X") == Atom::inert("nobody", " x "));
  CHECK_FALSE(Atom::inert("Nobody", "X") == Atom::outcome(0, 0));
}

}  // TEST_SUITE
