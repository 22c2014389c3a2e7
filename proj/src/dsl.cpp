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

#include "oagame/dsl.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>
#include <variant>

namespace oagame {
namespace {

constexpr std::array<std::string_view, 5> kOpenQuotes = {"`", "'", "\"", "\xE2\x80\x98", "\xE2\x80\x9C"};
constexpr std::array<std::string_view, 5> kCloseQuotes = {"'", "\"", "`", "\xE2\x80\x99", "\xE2\x80\x9D"};
constexpr std::array<std::string_view, 4> kPossessives = {"'s", "\xE2\x80\x99s", "'", "\xE2\x80\x99"};

bool is_word_byte(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u >= 0x80;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

template <std::size_t N>
std::size_t glyph_at(std::string_view s, std::size_t pos, const std::array<std::string_view, N>& glyphs) {
  for (std::string_view g : glyphs) {
    if (s.substr(pos, g.size()) == g) return g.size();
  }
  return 0;
}

struct QuotedText {
  std::string text;
  std::size_t end = 0;  // first byte after the closing glyph
};

// Reads a quoted string whose opening glyph starts at `pos`. A closing glyph
// only counts when it is not followed by a letter, so "Don't" survives.
std::optional<QuotedText> read_quoted(std::string_view s, std::size_t pos) {
  const std::size_t open = glyph_at(s, pos, kOpenQuotes);
  if (open == 0) return std::nullopt;
  for (std::size_t i = pos + open; i < s.size(); ++i) {
    const std::size_t close = glyph_at(s, i, kCloseQuotes);
    if (close == 0) continue;
    const std::size_t after = i + close;
    if (after < s.size() && is_word_byte(s[after])) continue;
    return QuotedText{std::string(s.substr(pos + open, i - pos - open)), after};
  }
  return std::nullopt;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

// ---------------------------------------------------------------------------
// Declaration lines.

struct Token {
  enum class Kind { kWord, kString, kNumber, kColon, kComma, kEquals, kPlus, kArrow, kStar };
  Kind kind;
  std::string text;
  int col_start;
  int col_end;
};

struct LineError {
  ParseError::Kind kind;
  std::string message;
  std::string token;
  int col_start;
  int col_end;
};

std::variant<std::vector<Token>, LineError> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [](std::size_t p) { return static_cast<int>(p) + 1; };
  while (i < line.size()) {
    const char c = line[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (glyph_at(line, i, kOpenQuotes) != 0) {
      auto quoted = read_quoted(line, i);
      if (!quoted) {
        return LineError{ParseError::Kind::kLex, "unterminated quoted string", std::string(line.substr(i)),
                         col(i), col(line.size() - 1)};
      }
      out.push_back({Token::Kind::kString, quoted->text, col(i), col(quoted->end - 1)});
      i = quoted->end;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && i + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
      std::size_t j = i + 1;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Kind::kNumber, std::string(line.substr(i, j - i)), col(i), col(j - 1)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '&') {
      std::size_t j = i + 1;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' || line[j] == '&')) {
        ++j;
      }
      out.push_back({Token::Kind::kWord, std::string(line.substr(i, j - i)), col(i), col(j - 1)});
      i = j;
      continue;
    }
    if (line.substr(i, 2) == "->") {
      out.push_back({Token::Kind::kArrow, "->", col(i), col(i + 1)});
      i += 2;
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case ':': kind = Token::Kind::kColon; break;
      case ',': kind = Token::Kind::kComma; break;
      case '=': kind = Token::Kind::kEquals; break;
      case '+': kind = Token::Kind::kPlus; break;
      case '*': kind = Token::Kind::kStar; break;
      default:
        return LineError{ParseError::Kind::kLex, "unexpected character", std::string(1, c), col(i), col(i)};
    }
    out.push_back({kind, std::string(1, c), col(i), col(i)});
    ++i;
  }
  return out;
}

class TokenCursor {
 public:
  TokenCursor(const std::vector<Token>& tokens, int line_length)
      : tokens_(tokens), line_length_(line_length) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }
  const Token& next() { return tokens_[pos_++]; }

  bool at_word(std::string_view word, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t != nullptr && t->kind == Token::Kind::kWord && iequals(t->text, word);
  }
  bool at(Token::Kind kind) const { return !done() && tokens_[pos_].kind == kind; }
  bool accept(Token::Kind kind) {
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }
  // `word:` keyword pair.
  bool at_keyword(std::string_view word) const {
    return at_word(word) && peek(1) != nullptr && peek(1)->kind == Token::Kind::kColon;
  }

  LineError error(std::string message) const {
    if (done()) {
      return {ParseError::Kind::kSyntax, message + " at end of line", "", line_length_, line_length_};
    }
    const Token& t = tokens_[pos_];
    return {ParseError::Kind::kSyntax, std::move(message), t.text, t.col_start, t.col_end};
  }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  int line_length_;
};

struct RawAtom {
  std::string lhs;
  std::string rhs;
  SourceSpan span;
};

struct RawRule {
  std::vector<RawAtom> condition;
  std::vector<RawAtom> consequence;
  std::vector<RawAtom> otherwise;
  std::string source;
  SourceSpan span;
};

struct Named {
  std::string text;
  SourceSpan span;
};

struct RawPlayer {
  Named name;
  std::vector<Named> aliases;
  std::vector<Named> actions;
};

struct RawVariable {
  Named name;
  std::vector<Named> aliases;
  Named owner;
  std::vector<std::pair<Named, std::int64_t>> values;
  std::vector<std::pair<Named, Named>> value_aliases;
};

struct RawUtility {
  Named player;
  std::vector<Named> terms;
};

struct RawGame {
  std::vector<Named> game_names;
  std::vector<RawPlayer> players;
  std::vector<RawVariable> variables;
  std::vector<RawUtility> utilities;
  std::vector<RawRule> rules;
};

struct LineParser {
  TokenCursor& cur;
  int line;

  SourceSpan span_of(const Token& t) const { return {line, t.col_start, t.col_end}; }

  std::variant<Named, LineError> name(std::string_view what) {
    if (cur.at(Token::Kind::kWord) || cur.at(Token::Kind::kString)) {
      const Token& t = cur.next();
      return Named{t.text, span_of(t)};
    }
    return cur.error("expected " + std::string(what));
  }

  // One or more bare words, or a single quoted string, up to a comma or a
  // stop keyword.
  std::variant<Named, LineError> phrase(std::string_view what, std::string_view stop_keyword) {
    if (cur.at(Token::Kind::kString)) {
      const Token& t = cur.next();
      return Named{t.text, span_of(t)};
    }
    std::string text;
    SourceSpan span{line, 0, 0};
    while (cur.at(Token::Kind::kWord) && !cur.at_keyword(stop_keyword)) {
      const Token& t = cur.next();
      if (text.empty()) span.column_start = t.col_start;
      else text.push_back(' ');
      text += t.text;
      span.column_end = t.col_end;
    }
    if (text.empty()) return cur.error("expected " + std::string(what));
    return Named{text, span};
  }
};

template <typename T>
bool failed(const std::variant<T, LineError>& v) {
  return std::holds_alternative<LineError>(v);
}

#define OAGAME_TRY(var, expr)                                  \
  auto var##_result = (expr);                                  \
  if (failed(var##_result)) return std::get<LineError>(var##_result); \
  auto var = std::get<0>(std::move(var##_result))

std::optional<LineError> parse_player(LineParser& p, RawGame& game) {
  RawPlayer player;
  OAGAME_TRY(name, p.name("player name"));
  player.name = name;
  if (p.cur.at_word("alias")) {
    p.cur.next();
    do {
      OAGAME_TRY(alias, p.name("player alias"));
      player.aliases.push_back(alias);
    } while (p.cur.accept(Token::Kind::kComma));
  }
  if (!p.cur.at_keyword("actions")) return p.cur.error("expected 'actions:'");
  p.cur.next();
  p.cur.next();
  do {
    OAGAME_TRY(action, p.name("action name"));
    player.actions.push_back(action);
  } while (p.cur.accept(Token::Kind::kComma));
  if (!p.cur.done()) return p.cur.error("unexpected token");
  game.players.push_back(std::move(player));
  return std::nullopt;
}

std::optional<LineError> parse_variable(LineParser& p, RawGame& game) {
  RawVariable var;
  OAGAME_TRY(name, p.name("variable name"));
  var.name = name;
  if (p.cur.at_word("alias")) {
    p.cur.next();
    do {
      OAGAME_TRY(alias, p.phrase("variable alias", "owner"));
      var.aliases.push_back(alias);
    } while (p.cur.accept(Token::Kind::kComma));
  }
  if (!p.cur.at_keyword("owner")) return p.cur.error("expected 'owner:'");
  p.cur.next();
  p.cur.next();
  OAGAME_TRY(owner, p.name("owner player"));
  var.owner = owner;
  if (!p.cur.at_keyword("values")) return p.cur.error("expected 'values:'");
  p.cur.next();
  p.cur.next();
  do {
    OAGAME_TRY(value, p.name("value name"));
    if (!p.cur.accept(Token::Kind::kEquals)) return p.cur.error("expected '=' after value name");
    if (!p.cur.at(Token::Kind::kNumber)) return p.cur.error("expected integer score");
    const Token& num = p.cur.next();
    std::int64_t score = 0;
    const char* first = num.text.data() + (num.text.front() == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, num.text.data() + num.text.size(), score);
    if (ec != std::errc() || ptr != num.text.data() + num.text.size()) {
      return LineError{ParseError::Kind::kSyntax, "score out of range", num.text, num.col_start, num.col_end};
    }
    var.values.emplace_back(value, score);
  } while (p.cur.accept(Token::Kind::kComma));
  if (p.cur.at_word("valias")) {
    p.cur.next();
    do {
      OAGAME_TRY(alias, p.name("value alias"));
      if (!p.cur.accept(Token::Kind::kArrow)) return p.cur.error("expected '->' in value alias");
      OAGAME_TRY(canonical, p.name("canonical value"));
      var.value_aliases.emplace_back(alias, canonical);
    } while (p.cur.accept(Token::Kind::kComma));
  }
  if (!p.cur.done()) return p.cur.error("unexpected token");
  game.variables.push_back(std::move(var));
  return std::nullopt;
}

std::optional<LineError> parse_utility(LineParser& p, RawGame& game) {
  RawUtility utility;
  OAGAME_TRY(player, p.name("player name"));
  utility.player = player;
  if (!p.cur.accept(Token::Kind::kEquals)) return p.cur.error("expected '='");
  do {
    if (p.cur.at(Token::Kind::kNumber)) {
      return LineError{ParseError::Kind::kDomainMismatch, "utility terms carry unit weight; weighted terms are rejected",
                       p.cur.peek()->text, p.cur.peek()->col_start, p.cur.peek()->col_end};
    }
    OAGAME_TRY(term, p.phrase("utility term", ""));
    utility.terms.push_back(term);
  } while (p.cur.accept(Token::Kind::kPlus));
  if (!p.cur.done()) {
    if (p.cur.at(Token::Kind::kStar)) {
      return LineError{ParseError::Kind::kDomainMismatch, "utility terms carry unit weight; weighted terms are rejected",
                       "*", p.cur.peek()->col_start, p.cur.peek()->col_end};
    }
    return p.cur.error("expected '+' between utility terms");
  }
  game.utilities.push_back(std::move(utility));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rule sentences.

class RuleScanner {
 public:
  RuleScanner(std::string_view text, int line, int column_offset)
      : s_(text), line_(line), offset_(column_offset) {}

  std::variant<RawRule, ParseError> scan() {
    RawRule rule;
    rule.source = trim(s_);
    skip_ws();
    if (word_here("rule")) advance_word();
    skip_ws();
    if (!word_here("if")) return error(ParseError::Kind::kSyntax, "rule must start with 'if'");
    const std::size_t start = pos_;
    advance_word();
    if (auto e = atoms(rule.condition, "then", "condition")) return *e;
    if (!word_here("then")) return error(ParseError::Kind::kSyntax, "expected 'then'");
    advance_word();
    if (auto e = atoms(rule.consequence, "otherwise", "consequence")) return *e;
    if (word_here("otherwise")) {
      advance_word();
      if (auto e = atoms(rule.otherwise, "", "otherwise branch")) return *e;
    }
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '.') ++pos_;
    skip_ws();
    if (pos_ < s_.size()) return error(ParseError::Kind::kSyntax, "unexpected text after rule");
    rule.span = span(start, s_.size());
    return rule;
  }

 private:
  std::optional<ParseError> atoms(std::vector<RawAtom>& out, std::string_view stop, std::string_view what) {
    bool expect_atom = true;
    for (;;) {
      skip_ws();
      const bool at_stop = !stop.empty() && word_here(stop);
      const bool at_end = pos_ >= s_.size() || rest_is_period();
      if (at_stop || at_end || word_here("then") || word_here("otherwise")) {
        if (out.empty()) return error(ParseError::Kind::kSyntax, "empty " + std::string(what));
        if (expect_atom) return error(ParseError::Kind::kSyntax, "dangling conjunction");
        return std::nullopt;
      }
      if (!expect_atom) return error(ParseError::Kind::kSyntax, "expected ',' or 'and' between atoms");
      const std::size_t lhs_start = pos_;
      const std::size_t eq = s_.find('=', pos_);
      if (eq == std::string_view::npos) {
        return error(ParseError::Kind::kSyntax, "expected '=' in atom", s_.size());
      }
      std::string lhs = trim(s_.substr(pos_, eq - pos_));
      if (lhs.empty()) return error(ParseError::Kind::kSyntax, "missing name before '='");
      for (std::string_view kw : {"then", "otherwise", "if"}) {
        if (contains_word(lhs, kw)) return error(ParseError::Kind::kSyntax, "expected '=' before '" + std::string(kw) + "'");
      }
      pos_ = eq + 1;
      skip_ws();
      std::string rhs;
      if (glyph_at(s_, pos_, kOpenQuotes) != 0) {
        auto quoted = read_quoted(s_, pos_);
        if (!quoted) return error(ParseError::Kind::kLex, "unterminated quoted value", s_.size());
        rhs = quoted->text;
        pos_ = quoted->end;
      } else {
        // Bare values may span words up to a separator or keyword.
        const std::size_t b = pos_;
        std::size_t end = pos_;
        while (pos_ < s_.size() && s_[pos_] != ',' && !rest_is_period()) {
          if (is_space(s_[pos_])) {
            skip_ws();
            if (word_here("and") || word_here("then") || word_here("otherwise")) break;
            continue;
          }
          ++pos_;
          end = pos_;
        }
        pos_ = end;
        rhs = std::string(s_.substr(b, end - b));
        if (rhs.empty()) return error(ParseError::Kind::kSyntax, "expected value after '='");
      }
      out.push_back({lhs, trim(rhs), span(lhs_start, pos_)});
      expect_atom = false;
      bool bare_comma = false;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        skip_ws();
        bare_comma = !word_here("and");
        if (!bare_comma) advance_word();
        expect_atom = true;
      } else if (word_here("and")) {
        advance_word();
        expect_atom = true;
      }
      // A bare comma may also precede `then`/`otherwise`.
      skip_ws();
      if (bare_comma && (word_here("then") || word_here("otherwise"))) expect_atom = false;
    }
  }

  static bool contains_word(std::string_view text, std::string_view word) {
    std::istringstream in{std::string(text)};
    std::string w;
    while (in >> w) {
      if (iequals(w, word)) return true;
    }
    return false;
  }

  bool rest_is_period() const {
    if (pos_ >= s_.size() || s_[pos_] != '.') return false;
    for (std::size_t i = pos_ + 1; i < s_.size(); ++i) {
      if (!is_space(s_[i])) return false;
    }
    return true;
  }

  bool word_here(std::string_view word) const {
    if (pos_ + word.size() > s_.size()) return false;
    if (!iequals(s_.substr(pos_, word.size()), word)) return false;
    const std::size_t after = pos_ + word.size();
    return after >= s_.size() || !is_word_byte(s_[after]);
  }

  void advance_word() {
    while (pos_ < s_.size() && is_word_byte(s_[pos_])) ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }

  SourceSpan span(std::size_t begin, std::size_t end) const {
    const int b = offset_ + static_cast<int>(begin) + 1;
    const int e = offset_ + static_cast<int>(end == begin ? end + 1 : end);
    return {line_, b, std::max(b, e)};
  }

  ParseError error(ParseError::Kind kind, std::string message) const { return error(kind, std::move(message), pos_); }

  ParseError error(ParseError::Kind kind, std::string message, std::size_t end) const {
    std::size_t token_end = pos_;
    while (token_end < s_.size() && !is_space(s_[token_end])) ++token_end;
    const std::string token(s_.substr(pos_, token_end - pos_));
    return {span(pos_, std::max(end, token_end)), kind, std::move(message), token};
  }

  std::string_view s_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

struct LhsTarget {
  enum class Kind { kPlayer, kVariable, kUnknown };
  Kind kind = Kind::kUnknown;
  int index = -1;
  std::optional<std::string> error;  // resolvable shape, wrong owner etc.
};

LhsTarget resolve_lhs(const GameSpec& game, const std::string& lhs) {
  if (auto p = game.find_player(lhs)) return {LhsTarget::Kind::kPlayer, *p, {}};
  if (auto v = game.find_variable(lhs)) return {LhsTarget::Kind::kVariable, *v, {}};
  // Possessive prefix: "Academics' Opportunity", "Editor's Income".
  const std::size_t space = lhs.find_first_of(" \t");
  if (space == std::string::npos) return {};
  const std::string head = lhs.substr(0, space);
  const std::string rest = trim(std::string_view(lhs).substr(space));
  for (std::string_view suffix : kPossessives) {
    if (head.size() <= suffix.size() || head.compare(head.size() - suffix.size(), suffix.size(), suffix) != 0) {
      continue;
    }
    const std::string owner = head.substr(0, head.size() - suffix.size());
    const auto v = game.find_variable(rest);
    if (!v) return {};
    const auto p = game.find_player(owner);
    if (!p) {
      return {LhsTarget::Kind::kUnknown, -1,
              "possessive '" + head + "' does not name a player"};
    }
    if (game.find_player(game.variables[*v].owner) != p) {
      return {LhsTarget::Kind::kUnknown, -1,
              "'" + game.variables[*v].name + "' belongs to " + game.variables[*v].owner + ", not " +
                  game.players[*p].name};
    }
    return {LhsTarget::Kind::kVariable, *v, {}};
  }
  return {};
}

std::optional<int> find_action(const PlayerDef& player, std::string_view name) {
  const std::string key = normalize_name(name);
  for (std::size_t i = 0; i < player.actions.size(); ++i) {
    if (normalize_name(player.actions[i]) == key) return static_cast<int>(i);
  }
  return std::nullopt;
}

struct AtomResolution {
  std::optional<Atom> atom;
  std::optional<ParseError> error;
  std::optional<Warning> warning;
};

AtomResolution resolve_atom(const GameSpec& game, const RawAtom& raw, bool assignment, Binding mode) {
  auto fail = [&](ParseError::Kind kind, std::string message, std::string token) {
    return AtomResolution{std::nullopt, ParseError{raw.span, kind, std::move(message), std::move(token)}, std::nullopt};
  };
  auto inert = [&](std::string message) {
    return AtomResolution{Atom::inert(raw.lhs, raw.rhs), std::nullopt,
                          Warning{raw.span, "inert atom: " + message}};
  };
  const LhsTarget target = resolve_lhs(game, raw.lhs);
  if (target.error) return fail(ParseError::Kind::kResolution, *target.error, raw.lhs);
  switch (target.kind) {
    case LhsTarget::Kind::kUnknown: {
      const std::string msg = "unknown player or variable '" + raw.lhs + "'";
      if (mode == Binding::kLenient) return inert(msg);
      return fail(ParseError::Kind::kResolution, msg, raw.lhs);
    }
    case LhsTarget::Kind::kPlayer: {
      const PlayerDef& player = game.players[target.index];
      if (assignment) {
        return fail(ParseError::Kind::kResolution, "cannot assign an action to player '" + player.name + "'",
                    raw.lhs);
      }
      if (auto a = find_action(player, raw.rhs)) {
        Atom atom = Atom::action(target.index, *a);
        atom.lhs = player.name;
        atom.rhs = player.actions[*a];
        return {atom, std::nullopt, std::nullopt};
      }
      const std::string msg = "unknown action '" + raw.rhs + "' for player '" + player.name + "'";
      if (mode == Binding::kLenient) return inert(msg);
      return fail(ParseError::Kind::kResolution, msg, raw.rhs);
    }
    case LhsTarget::Kind::kVariable: {
      const OutcomeVarDef& var = game.variables[target.index];
      if (auto v = var.find_value(raw.rhs)) {
        Atom atom = Atom::outcome(target.index, *v);
        atom.lhs = var.name;
        atom.rhs = var.values[*v].name;
        return {atom, std::nullopt, std::nullopt};
      }
      const std::string msg = "value '" + raw.rhs + "' is outside the domain of '" + var.name + "'";
      if (mode == Binding::kLenient) return inert(msg);
      return fail(ParseError::Kind::kDomainMismatch, msg, raw.rhs);
    }
  }
  return {};
}

RuleParseResult resolve_rule(const GameSpec& game, const RawRule& raw, Binding mode) {
  RuleParseResult result;
  Rule rule;
  rule.source = raw.source;
  rule.span = raw.span;
  auto resolve_all = [&](const std::vector<RawAtom>& atoms, std::vector<Atom>& out, bool assignment) {
    for (const RawAtom& a : atoms) {
      AtomResolution r = resolve_atom(game, a, assignment, mode);
      if (r.error) {
        if (!result.error) result.error = r.error;
        continue;
      }
      if (r.warning) result.warnings.push_back(*r.warning);
      out.push_back(*r.atom);
    }
  };
  resolve_all(raw.condition, rule.condition, false);
  resolve_all(raw.consequence, rule.consequence, true);
  resolve_all(raw.otherwise, rule.otherwise, true);
  if (!result.error) result.rule = std::move(rule);
  return result;
}

// ---------------------------------------------------------------------------
// Assembly of declarations into a GameSpec.

class Assembler {
 public:
  explicit Assembler(ParseOptions options) : options_(options) {}

  ParseResult run(const RawGame& raw, std::vector<ParseError> errors) {
    errors_ = std::move(errors);
    if (raw.game_names.empty()) {
      add(ParseError::Kind::kSyntax, {1, 1, 1}, "missing 'game' declaration", "");
    } else {
      game_.name = raw.game_names.front().text;
      for (std::size_t i = 1; i < raw.game_names.size(); ++i) {
        add(ParseError::Kind::kResolution, raw.game_names[i].span, "duplicate 'game' declaration",
            raw.game_names[i].text);
      }
    }
    game_.binding = options_.binding;
    for (const RawPlayer& p : raw.players) add_player(p);
    for (const RawVariable& v : raw.variables) add_variable(v);
    for (const RawUtility& u : raw.utilities) add_utility(u);
    for (const RawRule& r : raw.rules) {
      RuleParseResult rule = resolve_rule(game_, r, options_.binding);
      for (Warning& w : rule.warnings) warnings_.push_back(std::move(w));
      if (rule.error) errors_.push_back(*rule.error);
      else game_.rules.push_back(std::move(*rule.rule));
    }
    std::stable_sort(errors_.begin(), errors_.end(), [](const ParseError& a, const ParseError& b) {
      return std::tie(a.span.line, a.span.column_start) < std::tie(b.span.line, b.span.column_start);
    });
    ParseResult result;
    if (errors_.empty()) result.game = std::move(game_);
    result.errors = std::move(errors_);
    result.warnings = std::move(warnings_);
    return result;
  }

 private:
  void add(ParseError::Kind kind, SourceSpan span, std::string message, std::string token) {
    errors_.push_back({span, kind, std::move(message), std::move(token)});
  }

  bool name_taken(const std::string& name) const {
    return game_.find_player(name).has_value() || game_.find_variable(name).has_value();
  }

  void add_player(const RawPlayer& raw) {
    bool ok = true;
    if (name_taken(raw.name.text)) {
      add(ParseError::Kind::kResolution, raw.name.span, "duplicate name '" + raw.name.text + "'", raw.name.text);
      ok = false;
    }
    std::set<std::string> seen{normalize_name(raw.name.text)};
    PlayerDef def{raw.name.text, {}, {}};
    for (const Named& alias : raw.aliases) {
      if (name_taken(alias.text) || !seen.insert(normalize_name(alias.text)).second) {
        add(ParseError::Kind::kResolution, alias.span, "duplicate name '" + alias.text + "'", alias.text);
        ok = false;
      }
      def.aliases.push_back(alias.text);
    }
    std::set<std::string> actions;
    for (const Named& action : raw.actions) {
      if (!actions.insert(normalize_name(action.text)).second) {
        add(ParseError::Kind::kResolution, action.span,
            "duplicate action '" + action.text + "' for player '" + raw.name.text + "'", action.text);
        ok = false;
      }
      def.actions.push_back(action.text);
    }
    if (ok) game_.players.push_back(std::move(def));
  }

  void add_variable(const RawVariable& raw) {
    bool ok = true;
    std::set<std::string> seen;
    std::vector<const Named*> names{&raw.name};
    for (const Named& a : raw.aliases) names.push_back(&a);
    for (const Named* n : names) {
      if (name_taken(n->text) || !seen.insert(normalize_name(n->text)).second) {
        add(ParseError::Kind::kResolution, n->span, "duplicate name '" + n->text + "'", n->text);
        ok = false;
      }
    }
    OutcomeVarDef def;
    def.name = raw.name.text;
    for (const Named& a : raw.aliases) def.aliases.push_back(a.text);
    if (auto owner = game_.find_player(raw.owner.text)) {
      def.owner = game_.players[*owner].name;
    } else {
      add(ParseError::Kind::kResolution, raw.owner.span,
          "variable '" + raw.name.text + "' is owned by undeclared player '" + raw.owner.text + "'", raw.owner.text);
      ok = false;
    }
    std::set<std::string> values;
    for (const auto& [name, score] : raw.values) {
      if (!values.insert(normalize_name(name.text)).second) {
        add(ParseError::Kind::kResolution, name.span, "duplicate value '" + name.text + "'", name.text);
        ok = false;
      }
      def.values.push_back({name.text, score});
    }
    for (const auto& [alias, canonical] : raw.value_aliases) {
      if (!values.insert(normalize_name(alias.text)).second) {
        add(ParseError::Kind::kResolution, alias.span, "duplicate value '" + alias.text + "'", alias.text);
        ok = false;
      }
      auto it = std::find_if(def.values.begin(), def.values.end(), [&](const OutcomeValue& v) {
        return normalize_name(v.name) == normalize_name(canonical.text);
      });
      if (it == def.values.end()) {
        add(ParseError::Kind::kResolution, canonical.span,
            "value alias targets undeclared value '" + canonical.text + "'", canonical.text);
        ok = false;
        continue;
      }
      def.value_aliases.push_back({alias.text, it->name});
    }
    if (ok) game_.variables.push_back(std::move(def));
  }

  void add_utility(const RawUtility& raw) {
    bool ok = true;
    UtilityDef def;
    if (auto p = game_.find_player(raw.player.text)) {
      def.player = game_.players[*p].name;
      if (game_.utility_for(def.player) != nullptr) {
        add(ParseError::Kind::kResolution, raw.player.span, "duplicate utility for '" + def.player + "'",
            raw.player.text);
        ok = false;
      }
    } else {
      add(ParseError::Kind::kResolution, raw.player.span, "utility for undeclared player '" + raw.player.text + "'",
          raw.player.text);
      ok = false;
    }
    for (const Named& term : raw.terms) {
      if (auto v = game_.find_variable(term.text)) {
        def.terms.push_back(game_.variables[*v].name);
      } else {
        add(ParseError::Kind::kResolution, term.span, "utility term names undeclared variable '" + term.text + "'",
            term.text);
        ok = false;
      }
    }
    if (ok) game_.utilities.push_back(std::move(def));
  }

  ParseOptions options_;
  GameSpec game_;
  std::vector<ParseError> errors_;
  std::vector<Warning> warnings_;
};

std::string quote_name(const std::string& name) {
  static const std::set<std::string> keywords = {"alias", "actions", "owner", "values", "valias",
                                                 "game",  "player",  "variable", "utility", "rule"};
  const bool bare = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                    std::all_of(name.begin(), name.end(),
                                [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }) &&
                    keywords.count(normalize_name(name)) == 0;
  return bare ? name : "\"" + name + "\"";
}

std::string atom_text(const GameSpec& game, const Atom& atom) {
  switch (atom.kind) {
    case Atom::Kind::kAction:
      return game.players[atom.subject].name + "='" + game.players[atom.subject].actions[atom.value] + "'";
    case Atom::Kind::kOutcome:
      return game.variables[atom.subject].name + "='" + game.variables[atom.subject].values[atom.value].name + "'";
    case Atom::Kind::kInert:
      return atom.lhs + "='" + atom.rhs + "'";
  }
  return {};
}

std::string join_atoms(const GameSpec& game, const std::vector<Atom>& atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i != 0) out += " and ";
    out += atom_text(game, atoms[i]);
  }
  return out;
}

nlohmann::ordered_json atom_to_json(const GameSpec& game, const Atom& atom) {
  nlohmann::ordered_json j;
  switch (atom.kind) {
    case Atom::Kind::kAction:
      j["player"] = game.players[atom.subject].name;
      j["action"] = game.players[atom.subject].actions[atom.value];
      break;
    case Atom::Kind::kOutcome:
      j["variable"] = game.variables[atom.subject].name;
      j["value"] = game.variables[atom.subject].values[atom.value].name;
      break;
    case Atom::Kind::kInert:
      j["lhs"] = atom.lhs;
      j["rhs"] = atom.rhs;
      break;
  }
  return j;
}

}  // namespace

std::string_view to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::kLex: return "lex";
    case ParseError::Kind::kSyntax: return "syntax";
    case ParseError::Kind::kResolution: return "resolution";
    case ParseError::Kind::kDomainMismatch: return "domain-mismatch";
  }
  return "unknown";
}

std::string format_diagnostic(const ParseError& error) {
  std::ostringstream out;
  out << error.span.line << ':' << error.span.column_start << '-' << error.span.column_end << ": "
      << to_string(error.kind) << " error: " << error.message;
  return out.str();
}

std::string format_diagnostic(const Warning& warning) {
  std::ostringstream out;
  out << warning.span.line << ':' << warning.span.column_start << '-' << warning.span.column_end
      << ": warning: " << warning.message;
  return out.str();
}

ParseResult parse_game_spec(std::string_view text, ParseOptions options) {
  RawGame raw;
  std::vector<ParseError> errors;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size() || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }

    // Rules are scanned on raw characters: their apostrophes double as
    // possessive markers, which the declaration tokenizer cannot tell apart.
    const std::string_view keyword_area = line.substr(first);
    if (keyword_area.size() >= 4 && iequals(keyword_area.substr(0, 4), "rule") &&
        (keyword_area.size() == 4 || is_space(keyword_area[4]))) {
      std::string_view body = line.substr(first + 4);
      if (const std::size_t hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
      RuleScanner scanner(body, line_no, static_cast<int>(first + 4));
      auto scanned = scanner.scan();
      if (auto* e = std::get_if<ParseError>(&scanned)) errors.push_back(*e);
      else raw.rules.push_back(std::get<RawRule>(std::move(scanned)));
      if (end == text.size()) break;
      continue;
    }

    auto tokens = tokenize(line);
    std::optional<LineError> failure;
    if (auto* e = std::get_if<LineError>(&tokens)) {
      failure = *e;
    } else {
      const auto& toks = std::get<std::vector<Token>>(tokens);
      TokenCursor cur(toks, static_cast<int>(line.size()));
      LineParser p{cur, line_no};
      if (cur.at_word("game")) {
        cur.next();
        if (!cur.at(Token::Kind::kString)) {
          failure = cur.error("expected quoted game name");
        } else {
          const Token& t = cur.next();
          raw.game_names.push_back({t.text, p.span_of(t)});
          if (!cur.done()) failure = cur.error("unexpected token");
        }
      } else if (cur.at_word("player")) {
        cur.next();
        failure = parse_player(p, raw);
      } else if (cur.at_word("variable")) {
        cur.next();
        failure = parse_variable(p, raw);
      } else if (cur.at_word("utility")) {
        cur.next();
        failure = parse_utility(p, raw);
      } else {
        failure = cur.error("expected one of 'game', 'player', 'variable', 'utility', 'rule'");
      }
    }
    if (failure) {
      errors.push_back({{line_no, failure->col_start, std::max(failure->col_start, failure->col_end)},
                        failure->kind, failure->message, failure->token});
    }
    if (end == text.size()) break;
  }
  return Assembler(options).run(raw, std::move(errors));
}

RuleParseResult parse_rule(std::string_view text, const GameSpec& game, Binding mode, int line, int column_offset) {
  RuleScanner scanner(text, line, column_offset);
  auto scanned = scanner.scan();
  if (auto* e = std::get_if<ParseError>(&scanned)) {
    RuleParseResult result;
    result.error = *e;
    return result;
  }
  return resolve_rule(game, std::get<RawRule>(scanned), mode);
}

ValidationResult validate_game(GameSpec game) {
  ValidationResult result;
  auto err = [&](ParseError::Kind kind, std::string message, std::string token, SourceSpan span = {}) {
    result.errors.push_back({span, kind, std::move(message), std::move(token)});
  };

  if (game.players.empty()) err(ParseError::Kind::kSyntax, "game declares no players", "");
  std::set<std::string> names;
  auto claim = [&](const std::string& name) {
    if (!names.insert(normalize_name(name)).second) err(ParseError::Kind::kResolution, "duplicate name '" + name + "'", name);
  };
  for (const PlayerDef& p : game.players) {
    claim(p.name);
    for (const std::string& a : p.aliases) claim(a);
    if (p.actions.empty()) err(ParseError::Kind::kSyntax, "player '" + p.name + "' has no actions", p.name);
    std::set<std::string> actions;
    for (const std::string& a : p.actions) {
      if (!actions.insert(normalize_name(a)).second) {
        err(ParseError::Kind::kResolution, "duplicate action '" + a + "' for player '" + p.name + "'", a);
      }
    }
  }
  for (const OutcomeVarDef& v : game.variables) {
    claim(v.name);
    for (const std::string& a : v.aliases) claim(a);
    if (!game.find_player(v.owner)) {
      err(ParseError::Kind::kResolution, "variable '" + v.name + "' is owned by undeclared player '" + v.owner + "'",
          v.owner);
    }
    if (v.values.size() < 2) err(ParseError::Kind::kDomainMismatch, "variable '" + v.name + "' needs at least two values", v.name);
    std::set<std::string> values;
    for (const OutcomeValue& val : v.values) {
      if (!values.insert(normalize_name(val.name)).second) {
        err(ParseError::Kind::kResolution, "duplicate value '" + val.name + "' in '" + v.name + "'", val.name);
      }
    }
    for (const ValueAlias& a : v.value_aliases) {
      if (!values.insert(normalize_name(a.alias)).second) {
        err(ParseError::Kind::kResolution, "duplicate value '" + a.alias + "' in '" + v.name + "'", a.alias);
      }
      const bool target = std::any_of(v.values.begin(), v.values.end(), [&](const OutcomeValue& val) {
        return normalize_name(val.name) == normalize_name(a.canonical);
      });
      if (!target) err(ParseError::Kind::kResolution, "value alias targets undeclared value '" + a.canonical + "'", a.canonical);
    }
  }

  std::vector<int> coverage(game.variables.size(), 0);
  std::set<std::string> utility_players;
  for (const UtilityDef& u : game.utilities) {
    if (!game.find_player(u.player)) {
      err(ParseError::Kind::kResolution, "utility for undeclared player '" + u.player + "'", u.player);
    } else if (!utility_players.insert(normalize_name(u.player)).second) {
      err(ParseError::Kind::kResolution, "duplicate utility for '" + u.player + "'", u.player);
    }
    std::set<int> terms;
    for (const std::string& t : u.terms) {
      const auto v = game.find_variable(t);
      if (!v) {
        err(ParseError::Kind::kResolution, "utility term names undeclared variable '" + t + "'", t);
        continue;
      }
      if (!terms.insert(*v).second) {
        err(ParseError::Kind::kDomainMismatch,
            "utility terms carry unit weight; '" + t + "' repeats in the utility of '" + u.player + "'", t);
      }
      ++coverage[*v];
    }
  }
  for (std::size_t v = 0; v < coverage.size(); ++v) {
    if (coverage[v] != 1) {
      result.warnings.push_back({{}, "variable '" + game.variables[v].name + "' appears in " +
                                         std::to_string(coverage[v]) + " utility definitions"});
    }
  }

  auto check_atoms = [&](const Rule& rule, const std::vector<Atom>& atoms, bool assignment) {
    for (const Atom& a : atoms) {
      bool ok = true;
      if (a.kind == Atom::Kind::kAction) {
        ok = !assignment && a.subject >= 0 && a.subject < static_cast<int>(game.players.size()) && a.value >= 0 &&
             a.value < static_cast<int>(game.players[a.subject].actions.size());
      } else if (a.kind == Atom::Kind::kOutcome) {
        ok = a.subject >= 0 && a.subject < static_cast<int>(game.variables.size()) && a.value >= 0 &&
             a.value < static_cast<int>(game.variables[a.subject].values.size());
      }
      if (!ok) err(ParseError::Kind::kResolution, "rule atom does not resolve", a.lhs, rule.span);
    }
  };
  for (std::size_t i = 0; i < game.rules.size(); ++i) {
    const Rule& r = game.rules[i];
    if (r.condition.empty()) err(ParseError::Kind::kSyntax, "rule has an empty condition", "", r.span);
    if (r.consequence.empty()) err(ParseError::Kind::kSyntax, "rule has an empty consequence", "", r.span);
    check_atoms(r, r.condition, false);
    check_atoms(r, r.consequence, true);
    check_atoms(r, r.otherwise, true);
    for (std::size_t j = 0; j < i; ++j) {
      if (game.rules[j] == r) {
        result.warnings.push_back({r.span, "rule " + std::to_string(i + 1) + " duplicates rule " + std::to_string(j + 1)});
        break;
      }
    }
  }

  // Sizes, refusing to wrap around.
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t profiles = 1;
  std::uint64_t rows = 1;
  bool overflow = false;
  for (const PlayerDef& p : game.players) {
    const std::uint64_t n = std::max<std::size_t>(p.actions.size(), 1);
    if (profiles > kMax / n) overflow = true;
    else profiles *= n;
  }
  rows = profiles;
  for (const OutcomeVarDef& v : game.variables) {
    const std::uint64_t n = std::max<std::size_t>(v.values.size(), 1);
    if (rows > kMax / n) overflow = true;
    else rows *= n;
  }
  if (overflow) err(ParseError::Kind::kDomainMismatch, "scenario space exceeds 2^64 rows", game.name);

  if (!result.errors.empty()) return result;
  ValidatedGame validated;
  validated.action_profiles_ = profiles;
  validated.row_space_ = rows;
  validated.warnings_ = result.warnings;
  validated.spec_ = std::move(game);
  result.game = std::move(validated);
  return result;
}

ValidationResult load_game(std::string_view text, ParseOptions options) {
  ParseResult parsed = parse_game_spec(text, options);
  if (!parsed.ok()) {
    ValidationResult result;
    result.errors = std::move(parsed.errors);
    result.warnings = std::move(parsed.warnings);
    return result;
  }
  ValidationResult result = validate_game(std::move(*parsed.game));
  result.warnings.insert(result.warnings.begin(), parsed.warnings.begin(), parsed.warnings.end());
  return result;
}

std::string serialize_game_spec(const GameSpec& game) {
  std::ostringstream out;
  out << "game \"" << game.name << "\"\n";
  for (const PlayerDef& p : game.players) {
    out << "player " << quote_name(p.name);
    for (std::size_t i = 0; i < p.aliases.size(); ++i) {
      out << (i == 0 ? " alias " : ", ") << quote_name(p.aliases[i]);
    }
    out << " actions: ";
    for (std::size_t i = 0; i < p.actions.size(); ++i) out << (i == 0 ? "" : ", ") << '"' << p.actions[i] << '"';
    out << '\n';
  }
  for (const OutcomeVarDef& v : game.variables) {
    out << "variable " << quote_name(v.name);
    for (std::size_t i = 0; i < v.aliases.size(); ++i) {
      out << (i == 0 ? " alias " : ", ") << '"' << v.aliases[i] << '"';
    }
    out << " owner: " << quote_name(v.owner) << " values: ";
    for (std::size_t i = 0; i < v.values.size(); ++i) {
      out << (i == 0 ? "" : ", ") << quote_name(v.values[i].name) << '=' << v.values[i].score;
    }
    for (std::size_t i = 0; i < v.value_aliases.size(); ++i) {
      out << (i == 0 ? " valias " : ", ") << quote_name(v.value_aliases[i].alias) << "->"
          << quote_name(v.value_aliases[i].canonical);
    }
    out << '\n';
  }
  for (const UtilityDef& u : game.utilities) {
    out << "utility " << quote_name(u.player) << " =";
    for (std::size_t i = 0; i < u.terms.size(); ++i) out << (i == 0 ? " " : " + ") << '"' << u.terms[i] << '"';
    out << '\n';
  }
  for (const Rule& r : game.rules) {
    out << "rule if " << join_atoms(game, r.condition) << " then " << join_atoms(game, r.consequence);
    if (r.has_otherwise()) out << " otherwise " << join_atoms(game, r.otherwise);
    out << ".\n";
  }
  return out.str();
}

nlohmann::ordered_json game_to_json(const GameSpec& game) {
  nlohmann::ordered_json j;
  j["game"] = game.name;
  j["players"] = nlohmann::ordered_json::array();
  for (const PlayerDef& p : game.players) {
    j["players"].push_back({{"name", p.name}, {"aliases", p.aliases}, {"actions", p.actions}});
  }
  j["variables"] = nlohmann::ordered_json::array();
  for (const OutcomeVarDef& v : game.variables) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const OutcomeValue& val : v.values) values.push_back({{"name", val.name}, {"score", val.score}});
    nlohmann::ordered_json aliases = nlohmann::ordered_json::array();
    for (const ValueAlias& a : v.value_aliases) aliases.push_back({{"alias", a.alias}, {"canonical", a.canonical}});
    j["variables"].push_back({{"name", v.name},
                              {"aliases", v.aliases},
                              {"owner", v.owner},
                              {"values", values},
                              {"value_aliases", aliases}});
  }
  j["utilities"] = nlohmann::ordered_json::array();
  for (const UtilityDef& u : game.utilities) j["utilities"].push_back({{"player", u.player}, {"terms", u.terms}});
  j["rules"] = nlohmann::ordered_json::array();
  for (const Rule& r : game.rules) {
    nlohmann::ordered_json rule;
    for (const auto& [key, atoms] :
         {std::pair{"if", &r.condition}, std::pair{"then", &r.consequence}, std::pair{"otherwise", &r.otherwise}}) {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const Atom& a : *atoms) list.push_back(atom_to_json(game, a));
      rule[key] = list;
    }
    j["rules"].push_back(rule);
  }
  return j;
}

ParseResult game_from_json(const nlohmann::json& tree, ParseOptions options) {
  RawGame raw;
  std::vector<ParseError> errors;
  auto named = [](const nlohmann::json& j) { return Named{j.get<std::string>(), {}}; };
  try {
    raw.game_names.push_back(named(tree.at("game")));
    for (const auto& p : tree.at("players")) {
      RawPlayer player;
      player.name = named(p.at("name"));
      for (const auto& a : p.value("aliases", nlohmann::json::array())) player.aliases.push_back(named(a));
      for (const auto& a : p.at("actions")) player.actions.push_back(named(a));
      if (player.actions.empty()) {
        errors.push_back({{}, ParseError::Kind::kSyntax, "player '" + player.name.text + "' has no actions", player.name.text});
      }
      raw.players.push_back(std::move(player));
    }
    for (const auto& v : tree.at("variables")) {
      RawVariable var;
      var.name = named(v.at("name"));
      for (const auto& a : v.value("aliases", nlohmann::json::array())) var.aliases.push_back(named(a));
      var.owner = named(v.at("owner"));
      for (const auto& val : v.at("values")) var.values.emplace_back(named(val.at("name")), val.at("score").get<std::int64_t>());
      for (const auto& a : v.value("value_aliases", nlohmann::json::array())) {
        var.value_aliases.emplace_back(named(a.at("alias")), named(a.at("canonical")));
      }
      raw.variables.push_back(std::move(var));
    }
    for (const auto& u : tree.value("utilities", nlohmann::json::array())) {
      RawUtility utility;
      utility.player = named(u.at("player"));
      for (const auto& t : u.at("terms")) {
        if (!t.is_string()) {
          errors.push_back({{}, ParseError::Kind::kDomainMismatch,
                            "utility terms carry unit weight; weighted terms are rejected", t.dump()});
          continue;
        }
        utility.terms.push_back(named(t));
      }
      raw.utilities.push_back(std::move(utility));
    }
    for (const auto& r : tree.value("rules", nlohmann::json::array())) {
      RawRule rule;
      auto atoms = [](const nlohmann::json& list, std::vector<RawAtom>& out) {
        for (const auto& a : list) {
          if (a.contains("player")) out.push_back({a.at("player").get<std::string>(), a.at("action").get<std::string>(), {}});
          else if (a.contains("variable")) out.push_back({a.at("variable").get<std::string>(), a.at("value").get<std::string>(), {}});
          else out.push_back({a.at("lhs").get<std::string>(), a.at("rhs").get<std::string>(), {}});
        }
      };
      atoms(r.at("if"), rule.condition);
      atoms(r.at("then"), rule.consequence);
      atoms(r.value("otherwise", nlohmann::json::array()), rule.otherwise);
      if (rule.condition.empty() || rule.consequence.empty()) {
        errors.push_back({{}, ParseError::Kind::kSyntax, "rule needs a condition and a consequence", r.dump()});
        continue;
      }
      raw.rules.push_back(std::move(rule));
    }
  } catch (const nlohmann::json::exception& e) {
    ParseResult result;
    result.errors.push_back({{}, ParseError::Kind::kSyntax, std::string("malformed game tree: ") + e.what(), ""});
    return result;
  }
  return Assembler(options).run(raw, std::move(errors));
}

}  // namespace oagame
