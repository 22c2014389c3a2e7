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


#include <random>

#include "doctest.h"
#include "fixture_rules.h"
#include "naive_oracle.h"
#include "oagame/dsl.h"
#include "oagame/engine.h"
#include "test_support.h"

using namespace oagame;
using fixture::kExpected;
using fixture::kRules;
using fixture::mutate;

namespace {

std::string header() {
  return "game \"g\"\n"
         "player Academics alias Academic actions: \"Publish TA\", \"Publish OA\"\n"
         "player Funders alias Funder actions: \"Demand publications\", \"Don't demand anything\"\n"
         "variable Visibility owner: Academics values: More=1, Less=0\n"
         "variable Income owner: Funders values: More=1, Less=0\n"
         "utility Academics = Visibility\n"
         "utility Funders = Income\n";
}

ParseError::Kind first_error_kind(const std::string& text, Binding binding = Binding::kStrict) {
  const ValidationResult r = load_game(text, ParseOptions{binding});
  REQUIRE_FALSE(r.errors.empty());
  return r.errors.front().kind;
}

}  // namespace

TEST_SUITE("dsl") {

TEST_CASE("the eleven rules parse verbatim") {
  const ValidatedGame g = testing::bundled_game();
  REQUIRE(g.spec().rules.size() == 11);
  for (std::size_t i = 0; i < 11; ++i) {
    INFO("rule " << i + 1);
    const RuleParseResult r = parse_rule(kRules[i], g.spec(), Binding::kStrict);
    REQUIRE_FALSE(r.error.has_value());
    REQUIRE(r.rule.has_value());
    CHECK(*r.rule == kExpected[i]);
    CHECK(g.spec().rules[i] == kExpected[i]);
    CHECK(r.warnings.empty());
  }
}

TEST_CASE("quote glyphs and possessives are interchangeable") {
  const ValidatedGame g = testing::bundled_game();
  const Rule expected = kExpected[4];
  for (const char* text : {"if Editors='Grant OA' then Editor's Income = 'Less'",
                           "if Editors=\"Grant OA\" then Editors' Income = \"Less\"",
                           "if Editors=\xE2\x80\x98Grant OA\xE2\x80\x99 then Editor\xE2\x80\x99s Income = \xE2\x80\x9CLess\xE2\x80\x9D",
                           "rule if editors = `grant oa' then income = less.",
                           "if Editors=Grant OA then Income=Less"}) {
    INFO(std::string(text));
    const RuleParseResult r = parse_rule(text, g.spec(), Binding::kStrict);
    if (r.error) MESSAGE(format_diagnostic(*r.error));
    REQUIRE_FALSE(r.error.has_value());
    CHECK(*r.rule == expected);
  }
  const RuleParseResult apostrophe = parse_rule("if Funder=`Don't demand anything' then Income='Less'", g.spec(),
                                                Binding::kStrict);
  REQUIRE_FALSE(apostrophe.error.has_value());
  CHECK(apostrophe.rule->condition.front() == Atom::action(2, 2));
}

TEST_CASE("exactly one duplicate-rule warning on the bundled game") {
  const ValidationResult r = load_game(bundled_game_text());
  REQUIRE(r.ok());
  int duplicates = 0;
  for (const Warning& w : r.warnings) {
    if (w.message.find("duplicates") != std::string::npos) {
      ++duplicates;
      CHECK(w.message == "rule 7 duplicates rule 4");
    }
  }
  CHECK(duplicates == 1);
  CHECK(r.game->warnings() == r.warnings);
}

TEST_CASE("round trip through text and tree forms") {
  const ValidatedGame g = testing::bundled_game();
  const std::string text = serialize_game_spec(g.spec());
  const ParseResult back = parse_game_spec(text);
  REQUIRE(back.ok());
  CHECK(*back.game == g.spec());
  CHECK(serialize_game_spec(*back.game) == text);

  const ParseResult from_tree = game_from_json(nlohmann::json::parse(game_to_json(g.spec()).dump()));
  REQUIRE(from_tree.ok());
  CHECK(*from_tree.game == g.spec());

  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const GameSpec spec = oracle::random_small_game(rng);
    const ParseResult r = parse_game_spec(serialize_game_spec(spec));
    INFO(serialize_game_spec(spec));
    REQUIRE(r.ok());
    CHECK(*r.game == spec);
    const ParseResult t = game_from_json(nlohmann::json::parse(game_to_json(spec).dump()));
    REQUIRE(t.ok());
    CHECK(*t.game == spec);
  }
}

TEST_CASE("strict diagnostics") {
  const std::string h = header();
  CHECK(load_game(h + "rule if Academics='Publish TA' then Visibility='Less'\n").ok());
  CHECK(first_error_kind(h + "rule if Academics='Publish Blog' then Visibility='Less'\n") ==
        ParseError::Kind::kResolution);
  CHECK(first_error_kind(h + "rule if Academics='Publish TA' then Visibility='Huge'\n") ==
        ParseError::Kind::kDomainMismatch);
  CHECK(first_error_kind(h + "rule if Academics='Publish TA' then Happiness='More'\n") ==
        ParseError::Kind::kResolution);
  CHECK(first_error_kind(h + "rule if Academics='Publish TA' then Funder's Visibility='More'\n") ==
        ParseError::Kind::kResolution);
  CHECK(first_error_kind(h + "rule if Academics='Publish TA' then Funders='Demand publications'\n") !=
        ParseError::Kind::kLex);
  CHECK(first_error_kind(h + "rule if then Visibility='More'\n") == ParseError::Kind::kSyntax);
  CHECK(first_error_kind(h + "rule if Academics='Publish TA' and then Visibility='More'\n") ==
        ParseError::Kind::kSyntax);
  CHECK(first_error_kind(h + "rule if Academics='Publish TA' then\n") == ParseError::Kind::kSyntax);
  CHECK(first_error_kind(h + "rule Academics='Publish TA' then Visibility='More'\n") == ParseError::Kind::kSyntax);
  CHECK(first_error_kind(h + "rule if Academics='Publish TA then Visibility=More\n") == ParseError::Kind::kLex);
  CHECK_FALSE(load_game(h + "rule if Academics='Publish TA then Visibility='More'\n").ok());
  CHECK(load_game(h + "rule if Academics='Publish TA', then Visibility='More'\n").ok());
  CHECK(first_error_kind(h + "rule if Academics='Publish TA', and then Visibility='More'\n") ==
        ParseError::Kind::kSyntax);

  std::string no_utility = h.substr(0, h.find("utility Academics"));
  no_utility += "utility Funders = Income\n";
  CHECK(load_game(no_utility + "utility Academics = Visibility\n").ok());
  CHECK(first_error_kind(no_utility + "utility Academics = 2*Visibility\n") == ParseError::Kind::kDomainMismatch);
  CHECK(first_error_kind(no_utility + "utility Academics = Visibility + Visibility\n") ==
        ParseError::Kind::kDomainMismatch);
}

TEST_CASE("every malformed line gets its own diagnostic") {
  const std::string text = header() +
                           "rule if Academics='Publish Blog' then Visibility='Less'\n"
                           "rule if Academics='Publish TA' then Visibility='Huge'\n"
                           "rule if then\n";
  const ValidationResult r = load_game(text);
  CHECK_FALSE(r.ok());
  REQUIRE(r.errors.size() == 3);
  CHECK(r.errors[0].span.line == 8);
  CHECK(r.errors[1].span.line == 9);
  CHECK(r.errors[2].span.line == 10);
  CHECK(format_diagnostic(r.errors[0]).rfind("8:", 0) == 0);
}

TEST_CASE("lenient binding downgrades unresolved references to warnings") {
  const std::string text = header() +
                           "rule if Academics='Publish Blog' then Visibility='Less'\n"
                           "rule if Academics='Publish TA' then Visibility='Huge'\n"
                           "rule if Readers='Read' then Income='More'\n";
  const ValidationResult r = load_game(text, ParseOptions{Binding::kLenient});
  REQUIRE(r.ok());
  CHECK(r.warnings.size() >= 3);
  const auto& rules = r.game->spec().rules;
  REQUIRE(rules.size() == 3);
  CHECK(rules[0].condition.front().kind == Atom::Kind::kInert);
  CHECK(rules[1].consequence.front().kind == Atom::Kind::kInert);
  CHECK(rules[2].is_inert());
  CHECK_FALSE(rules[2].consequence.front().kind == Atom::Kind::kInert);
  CHECK(rules[2].condition.front().kind == Atom::Kind::kInert);
}

TEST_CASE("structural validation") {
  CHECK_FALSE(load_game("game \"g\"\n").ok());
  CHECK_FALSE(load_game("game \"g\"\nplayer A actions: x\nplayer A actions: y\n").ok());
  CHECK_FALSE(load_game("game \"g\"\nplayer A actions: x\nvariable V owner: A values: More=1\n").ok());
  CHECK_FALSE(load_game("game \"g\"\nplayer A actions: x\nvariable V owner: B values: More=1, Less=0\n").ok());
  CHECK_FALSE(load_game("game \"g\"\nplayer A actions: x\nvariable A owner: A values: More=1, Less=0\n").ok());
  CHECK_FALSE(load_game("game \"g\"\nplayer A actions: x\nutility B = V\n").ok());
  const ValidationResult uncovered =
      load_game("game \"g\"\nplayer A actions: x\nvariable V owner: A values: More=1, Less=0\n");
  REQUIRE(uncovered.ok());
  CHECK(uncovered.warnings.size() == 1);
  CHECK(uncovered.game->row_space_size() == 2);
}

TEST_CASE("mutation fuzz over the bundled fixture never crashes") {
  const std::string base(bundled_game_text());
  std::mt19937_64 rng(1000);
  int rejected = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string text = mutate(base, rng);
    for (Binding b : {Binding::kStrict, Binding::kLenient}) {
      ValidationResult r;
      REQUIRE_NOTHROW(r = load_game(text, ParseOptions{b}));
      if (r.ok()) {
        CHECK(r.errors.empty());
        if (i % 10 == 0 && r.game->row_space_size() <= (1u << 22)) {
          CHECK_NOTHROW(enumeration_report(*r.game, Semantics{b}));
        }
      } else {
        if (b == Binding::kStrict) ++rejected;
        CHECK_FALSE(r.errors.empty());
        for (const ParseError& e : r.errors) {
          CHECK(e.span.line >= 0);
          CHECK_FALSE(format_diagnostic(e).empty());
        }
      }
    }
  }
  MESSAGE(rejected << " of 1000 strict mutations rejected");
  CHECK(rejected > 0);
}

}  // TEST_SUITE
