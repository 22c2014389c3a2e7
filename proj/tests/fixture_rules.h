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


// The eleven rules of the bundled game, their expected structure, and the
// text mutator used by the fuzz tests.

#ifndef OAGAME_TESTS_FIXTURE_RULES_H_
#define OAGAME_TESTS_FIXTURE_RULES_H_

#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "oagame/model.h"

namespace fixture {

using oagame::Atom;
using oagame::Rule;

inline Atom act(int p, int a) { return Atom::action(p, a); }
inline Atom out(int v, int x) { return Atom::outcome(v, x); }

// The eleven rules of the bundled game as written in its source.
inline const char* const kRules[] = {
    "if Academics=`Publish TA' and Editors=`Grant TA' then Academics' Opportunity = `Less' and Visibility =`Less'",
    "if Academics=`Publish OA' and Editors=`Grant OA' then Academics' Opportunity = `More' and Visibility =`More'",
    "if Administrators =`Support OA' then Savings=`More', otherwise Savings=`Less'.",
    "if Funder=`Demand publications', Editors=`Grant TA' and Politicians=`Permit TA' then Editor's Income = `More'.",
    "if Editors=`Grant OA' then Editor's Income = `Less'.",
    "if Editors=`Grant big deals' and Politicians=`Permit TA' then Editor's Income = `More'.",
    "if Funder=`Demand publications', Editors=`Grant TA' and Politicians=`Permit TA' then Editor's Income = `More'.",
    "if Editors=`Grant OA with embargoes' then Editor's Income = `Less'.",
    "if Funder=`Demand OA publications' then Editor's Income = `Less'.",
    "if Politicians=`Demand green OA' then Editor's Income = `Less'.",
    "if Visibility=`More' then Quality Results=`More' and Impact and Relevance=`More'",
};

// Players: Academics, Administrators, Funders, Editors, Politicians.
// Variables: Opportunity, Visibility, Prestige, Promotion, Savings, Results,
// Income, Impact; value 0 is More, 1 is Less.
inline const std::vector<Rule> kExpected = {
    {{act(0, 0), act(3, 0)}, {out(0, 1), out(1, 1)}, {}, {}, {}},
    {{act(0, 1), act(3, 1)}, {out(0, 0), out(1, 0)}, {}, {}, {}},
    {{act(1, 1)}, {out(4, 0)}, {out(4, 1)}, {}, {}},
    {{act(2, 0), act(3, 0), act(4, 0)}, {out(6, 0)}, {}, {}, {}},
    {{act(3, 1)}, {out(6, 1)}, {}, {}, {}},
    {{act(3, 2), act(4, 0)}, {out(6, 0)}, {}, {}, {}},
    {{act(2, 0), act(3, 0), act(4, 0)}, {out(6, 0)}, {}, {}, {}},
    {{act(3, 3)}, {out(6, 1)}, {}, {}, {}},
    {{act(2, 1)}, {out(6, 1)}, {}, {}, {}},
    {{act(4, 1)}, {out(6, 1)}, {}, {}, {}},
    {{out(1, 0)}, {out(5, 0), out(7, 0)}, {}, {}, {}},
};

inline std::string mutate(std::string text, std::mt19937_64& rng) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const char* const kGlyphs[] = {"'", "`", "\"", "\xE2\x80\x99", "=", ",", " and ", " then ", " if ", "otherwise",
                                 ".", ":", "->", "+", "*", "#", "\n", "rule ", "\xC3", "More", "Editors"};
  const int edits = static_cast<int>(pick(1, 4));
  for (int e = 0; e < edits && !text.empty(); ++e) {
    const std::size_t at = pick(0, text.size() - 1);
    switch (pick(0, 5)) {
      case 0: text.erase(at, pick(1, 8)); break;
      case 1: text.insert(at, kGlyphs[pick(0, std::size(kGlyphs) - 1)]); break;
      case 2: text[at] = static_cast<char>(pick(1, 255)); break;
      case 3: text.resize(at); break;
      case 4: {
        const std::size_t len = pick(1, 40);
        text.insert(pick(0, text.size()), text.substr(at, len));
        break;
      }
      default: {
        const std::size_t nl = text.find('\n', at);
        if (nl != std::string::npos) text.erase(at, nl - at);
      }
    }
  }
  return text;
}


}  // namespace fixture

#endif  // OAGAME_TESTS_FIXTURE_RULES_H_
