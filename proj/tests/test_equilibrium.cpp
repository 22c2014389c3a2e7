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
#include "naive_oracle.h"
#include "oagame/equilibrium.h"
#include "oagame/fixtures.h"
#include "test_support.h"

using namespace oagame;

namespace {

Bimatrix make_bimatrix(const std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>& cells) {
  Bimatrix bm;
  bm.row_player = "R";
  bm.col_player = "C";
  for (std::size_t r = 0; r < cells.size(); ++r) bm.row_actions.push_back("r" + std::to_string(r));
  for (std::size_t c = 0; c < cells.front().size(); ++c) bm.col_actions.push_back("c" + std::to_string(c));
  for (const auto& row : cells) {
    bm.cells.emplace_back();
    for (const auto& cell : row) bm.cells.back().emplace_back(cell);
  }
  return bm;
}

Bimatrix random_bimatrix(std::mt19937_64& rng, int rows, int cols, int range) {
  std::uniform_int_distribution<int> u(-range, range);
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> cells(rows);
  for (auto& row : cells) {
    for (int c = 0; c < cols; ++c) row.emplace_back(u(rng), u(rng));
  }
  return make_bimatrix(cells);
}

// Independent re-check of a bimatrix certificate.
void check_certificate(const Bimatrix& bm, const EquilibriumCertificate& c) {
  REQUIRE(c.strategies.size() == 2);
  CHECK(c.self_consistent());
  const Rational gain = oracle::max_deviation_gain(bm, c.strategies[0].probabilities, c.strategies[1].probabilities);
  if (c.kind == EquilibriumCertificate::Kind::kPure) {
    CHECK(gain == 0);
  } else {
    CHECK(to_double(gain) <= 1e-9);
  }
  const auto eu = expected_utility(bm, c.strategies[0], c.strategies[1]);
  CHECK(eu.first == c.expected_utilities[0]);
  CHECK(eu.second == c.expected_utilities[1]);
}

std::vector<std::pair<int, int>> pure_cells(const std::vector<EquilibriumCertificate>& certs) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : certs) {
    if (!c.strategies[0].is_pure() || !c.strategies[1].is_pure()) continue;
    out.emplace_back(c.strategies[0].support().front(), c.strategies[1].support().front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> rats(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(parse_rational(v));
  return out;
}

}  // namespace

TEST_SUITE("equilibrium") {

TEST_CASE("table 5 pure equilibria") {
  const Bimatrix bm = parse_bimatrix(bundled_table5_text());
  REQUIRE(bm.rows() == 2);
  REQUIRE(bm.cols() == 4);
  const auto certs = pure_nash(bm);
  CHECK(pure_cells(certs) == oracle::pure_equilibria(bm));
  REQUIRE(certs.size() == 4);
  std::vector<std::pair<std::string, std::string>> named;
  for (const auto& c : certs) {
    named.emplace_back(c.strategies[0].actions[c.strategies[0].support().front()],
                       c.strategies[1].actions[c.strategies[1].support().front()]);
    check_certificate(bm, c);
  }
  CHECK(named == std::vector<std::pair<std::string, std::string>>{{"Publish TA", "Grant big deals"},
                                                                  {"Publish TA", "Grant TA"},
                                                                  {"Publish OA", "Grant big deals"},
                                                                  {"Publish OA", "Grant TA"}});
}

TEST_CASE("table 6 dominance") {
  const Bimatrix bm = parse_bimatrix(bundled_table6_text());
  CHECK(dominates(bm, 1, 0, 1, DominanceNotion::kStrict, {0, 1}));
  CHECK(dominates(bm, 0, 1, 0, DominanceNotion::kWeak, {0, 1}));
  CHECK_FALSE(dominates(bm, 0, 1, 0, DominanceNotion::kStrict, {0, 1}));
  CHECK_FALSE(dominates(bm, 0, 0, 1, DominanceNotion::kWeak, {0, 1}));

  const DominanceResult strict = dominance_analysis(bm, DominanceNotion::kStrict, true);
  REQUIRE(strict.trace.size() == 1);
  CHECK(strict.trace[0].player_name == "Editors");
  CHECK(strict.trace[0].action == "OA");
  CHECK(strict.trace[0].dominator == "TA");
  CHECK(strict.surviving_rows == std::vector<int>{0, 1});
  CHECK(strict.surviving_cols == std::vector<int>{0});

  const DominanceResult weak = dominance_analysis(bm, DominanceNotion::kWeak, true);
  REQUIRE(weak.trace.size() == 2);
  CHECK(weak.trace[0].action == "Publish TA");
  CHECK(weak.trace[0].notion == DominanceNotion::kWeak);
  CHECK(weak.trace[1].action == "OA");
  CHECK(weak.trace[1].notion == DominanceNotion::kStrict);
  CHECK(weak.surviving.row_actions == std::vector<std::string>{"Publish OA"});
  CHECK(weak.surviving.col_actions == std::vector<std::string>{"TA"});
  CHECK(*weak.surviving.cells[0][0] == std::pair<std::int64_t, std::int64_t>{3, 1});

  const DominanceResult once = dominance_analysis(bm, DominanceNotion::kWeak, false);
  CHECK(once.surviving_rows == std::vector<int>{1});
  CHECK(once.surviving_cols == std::vector<int>{0});
}

TEST_CASE("identical actions do not dominate each other") {
  const Bimatrix bm = make_bimatrix({{{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}});
  const DominanceResult r = dominance_analysis(bm, DominanceNotion::kWeak, true);
  CHECK(r.trace.empty());
  CHECK(r.surviving == bm);
}

TEST_CASE("table 6 support enumeration") {
  const Bimatrix bm = parse_bimatrix(bundled_table6_text());
  const MixedNashResult r = mixed_nash_2p(bm);
  CHECK(r.degenerate);
  CHECK(pure_cells(r.equilibria) == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}});
  for (const auto& c : r.equilibria) {
    CHECK(c.strategies[1].is_pure());
    check_certificate(bm, c);
  }
}

TEST_CASE("table 6 expected utility of the OA row") {
  const Bimatrix bm = parse_bimatrix(bundled_table6_text());
  const MixedStrategy oa = MixedStrategy::pure("Academics", bm.row_actions, 1);
  const MixedStrategy ta = MixedStrategy::pure("Academics", bm.row_actions, 0);
  for (int k = 0; k <= 20; ++k) {
    const Rational q(k, 20);
    const MixedStrategy col{"Editors", bm.col_actions, {q, 1 - q}};
    const auto [u, v] = expected_utility(bm, oa, col);
    CHECK(u == 3 * q + 4 * (1 - q));
    CHECK(std::abs(to_double(u) - (3 * k / 20.0 + 4 * (1 - k / 20.0))) <= 1e-9);
    CHECK(v == q);
    CHECK(expected_utility(bm, ta, col).first == 3);
  }
  auto at = [&](const char* q) {
    const Rational x = parse_rational(q);
    return expected_utility(bm, oa, MixedStrategy{"Editors", bm.col_actions, {x, 1 - x}}).first;
  };
  CHECK(at("0") == 4);
  CHECK(at("1/2") == Rational(7, 2));
  CHECK(at("1") == 3);
  CHECK(std::abs(to_double(at("0.5")) - 3.5) <= 1e-9);
}

TEST_CASE("matching pennies") {
  const Bimatrix bm = make_bimatrix({{{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}});
  const MixedNashResult r = mixed_nash_2p(bm);
  CHECK_FALSE(r.degenerate);
  REQUIRE(r.equilibria.size() == 1);
  CHECK(r.equilibria[0].kind == EquilibriumCertificate::Kind::kMixed);
  CHECK(r.equilibria[0].strategies[0].probabilities == rats({"1/2", "1/2"}));
  CHECK(r.equilibria[0].strategies[1].probabilities == rats({"1/2", "1/2"}));
  CHECK(r.equilibria[0].expected_utilities == rats({"0", "0"}));
  check_certificate(bm, r.equilibria[0]);
  CHECK(pure_nash(bm).empty());
}

TEST_CASE("battle of the sexes") {
  const Bimatrix bm = make_bimatrix({{{2, 1}, {0, 0}}, {{0, 0}, {1, 2}}});
  const MixedNashResult r = mixed_nash_2p(bm);
  CHECK_FALSE(r.degenerate);
  REQUIRE(r.equilibria.size() == 3);
  CHECK(pure_cells(r.equilibria) == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  const auto& mixed = r.equilibria[2];
  CHECK(mixed.kind == EquilibriumCertificate::Kind::kMixed);
  CHECK(mixed.strategies[0].probabilities == rats({"2/3", "1/3"}));
  CHECK(mixed.strategies[1].probabilities == rats({"1/3", "2/3"}));
  CHECK(mixed.expected_utilities == rats({"2/3", "2/3"}));
  for (const auto& c : r.equilibria) check_certificate(bm, c);
}

TEST_CASE("random bimatrices: certificates hold and pure equilibria agree with the oracle") {
  std::mt19937_64 rng(99);
  int nondegenerate = 0;
  for (int i = 0; i < 300; ++i) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 4);
    const Bimatrix bm = random_bimatrix(rng, rows, cols, i % 2 == 0 ? 3 : 50);
    const auto pure = pure_nash(bm);
    CHECK(pure_cells(pure) == oracle::pure_equilibria(bm));
    for (const auto& c : pure) check_certificate(bm, c);
    const MixedNashResult r = mixed_nash_2p(bm);
    REQUIRE_FALSE(r.equilibria.empty());
    for (const auto& c : r.equilibria) check_certificate(bm, c);
    CHECK(pure_cells(r.equilibria) == oracle::pure_equilibria(bm));
    if (!r.degenerate) {
      ++nondegenerate;
      CHECK(r.equilibria.size() % 2 == 1);
    }
  }
  CHECK(nondegenerate > 100);
}

TEST_CASE("positive affine payoff changes preserve equilibria") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Bimatrix bm = random_bimatrix(rng, 3, 3, 20);
    Bimatrix scaled = bm;
    for (auto& row : scaled.cells) {
      for (auto& cell : row) cell = std::pair{3 * cell->first + 7, 2 * cell->second - 5};
    }
    CHECK(pure_cells(pure_nash(bm)) == pure_cells(pure_nash(scaled)));
    const auto a = mixed_nash_2p(bm);
    const auto b = mixed_nash_2p(scaled);
    REQUIRE(a.equilibria.size() == b.equilibria.size());
    for (std::size_t k = 0; k < a.equilibria.size(); ++k) {
      CHECK(a.equilibria[k].strategies == b.equilibria[k].strategies);
    }
  }
}

TEST_CASE("expected utility is bilinear") {
  std::mt19937_64 rng(17);
  const Bimatrix bm = random_bimatrix(rng, 3, 2, 9);
  const MixedStrategy x1{"R", bm.row_actions, rats({"1/2", "1/4", "1/4"})};
  const MixedStrategy x2{"R", bm.row_actions, rats({"0", "1/3", "2/3"})};
  const MixedStrategy y{"C", bm.col_actions, rats({"2/5", "3/5"})};
  const Rational lambda(3, 7);
  MixedStrategy mix{"R", bm.row_actions, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    mix.probabilities.push_back(lambda * x1.probabilities[i] + (1 - lambda) * x2.probabilities[i]);
  }
  const auto e1 = expected_utility(bm, x1, y);
  const auto e2 = expected_utility(bm, x2, y);
  const auto em = expected_utility(bm, mix, y);
  CHECK(em.first == lambda * e1.first + (1 - lambda) * e2.first);
  CHECK(em.second == lambda * e1.second + (1 - lambda) * e2.second);
}

TEST_CASE("input validation") {
  const Bimatrix bm = make_bimatrix({{{1, 1}, {0, 0}}, {{0, 0}, {1, 1}}});
  const MixedStrategy good{"R", bm.row_actions, rats({"1/2", "1/2"})};
  CHECK_THROWS_AS(expected_utility(bm, MixedStrategy{"R", bm.row_actions, rats({"1/2", "1/3"})}, good),
                  std::invalid_argument);
  CHECK_THROWS_AS(expected_utility(bm, MixedStrategy{"R", bm.row_actions, rats({"3/2", "-1/2"})}, good),
                  std::invalid_argument);
  CHECK_THROWS_AS(expected_utility(bm, MixedStrategy{"R", {"a", "b", "c"}, rats({"1", "0", "0"})}, good),
                  std::invalid_argument);
  CHECK_NOTHROW(MixedStrategy{"R", bm.row_actions, {rational_from_double(0.8), rational_from_double(0.2)}}.validate());

  Bimatrix holes = bm;
  holes.cells[0][1].reset();
  CHECK_FALSE(holes.complete());
  CHECK_THROWS_AS(mixed_nash_2p(holes), std::invalid_argument);
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(mixed_nash_2p(random_bimatrix(rng, kMaxSupportEnumerationActions + 1, 2, 3)),
                  std::invalid_argument);
}

TEST_CASE("infeasible cells are skipped by pure equilibrium search") {
  Bimatrix bm = make_bimatrix({{{1, 1}, {5, 5}}, {{0, 0}, {2, 2}}});
  bm.cells[0][1].reset();
  const auto certs = pure_nash(bm);
  CHECK(pure_cells(certs) == oracle::pure_equilibria(bm));
  CHECK(pure_cells(certs) == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  for (const auto& c : certs) CHECK(c.self_consistent());
}

TEST_CASE("n-player pure equilibria of the derived game agree with brute force") {
  const ValidatedGame g = testing::bundled_game();
  for (const auto& policy : {CompletionPolicy::max_global_utility(), CompletionPolicy::optimistic(3)}) {
    const PayoffTable t = derive_payoff_table(g, {}, policy);
    std::vector<ActionProfile> expected;
    for (std::size_t i = 0; i < t.profile_count(); ++i) {
      const ActionProfile profile = t.profile_at(i);
      if (!t.cell_at(i).feasible) continue;
      bool stable = true;
      for (std::size_t p = 0; p < profile.size() && stable; ++p) {
        for (std::size_t a = 0; a < t.actions()[p].size(); ++a) {
          ActionProfile dev = profile;
          dev[p] = static_cast<int>(a);
          const auto& cell = t.cell(dev);
          if (cell.feasible && cell.utilities[p] > t.cell_at(i).utilities[p]) stable = false;
        }
      }
      if (stable) expected.push_back(profile);
    }
    const auto certs = pure_nash(t);
    std::vector<ActionProfile> got;
    for (const auto& c : certs) {
      ActionProfile profile;
      for (const auto& s : c.strategies) profile.push_back(s.support().front());
      got.push_back(profile);
      CHECK(c.self_consistent());
      CHECK(c.verification.size() == 5);
    }
    CHECK(got == expected);
    CHECK_FALSE(got.empty());
    const auto br = best_responses(t, 0, t.profile_at(0));
    REQUIRE(br.has_value());
    CHECK_FALSE(br->empty());
  }
}

TEST_CASE("best responses over an infeasible slice") {
  PayoffTable t({"A", "B"}, {{"a0", "a1"}, {"b0"}});
  t.set_infeasible({0, 0});
  t.set_infeasible({1, 0});
  CHECK_FALSE(best_responses(t, 0, {0, 0}).has_value());
  t.set({1, 0}, {2, 3});
  CHECK(best_responses(t, 0, {0, 0}) == std::vector<int>{1});
}

}  // TEST_SUITE
