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

#ifndef OAGAME_FIXTURES_H_
#define OAGAME_FIXTURES_H_

#include <string_view>

namespace oagame {

// Contents of data/oa.game, data/table5.bmx and data/table6.bmx as built.
std::string_view bundled_game_text();
std::string_view bundled_table5_text();
std::string_view bundled_table6_text();

}  // namespace oagame

#endif  // OAGAME_FIXTURES_H_
