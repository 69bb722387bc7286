// Copyright 2026 The prefcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prefcomp/dsl.hpp"

#include <cctype>
#include <vector>

#include "prefcomp/error.hpp"

namespace prefcomp {
namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '!' ||
         c == '\'' || c == '.';
}

struct Token {
  enum Kind { kIdent, kPunct, kEnd } kind;
  std::string text;
  std::size_t column;
};

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : line_no_(line_no) {
    std::size_t i = 0;
    while (i < line.size()) {
      const char c = line[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (is_ident_char(c)) {
        std::size_t j = i;
        while (j < line.size() && is_ident_char(line[j])) ++j;
        tokens_.push_back({Token::kIdent, std::string(line.substr(i, j - i)),
                           i + 1});
        i = j;
        continue;
      }
      if (std::string_view("{},|=&:>").find(c) == std::string_view::npos)
        fail(i + 1, std::string("unexpected character '") + c + "'");
      tokens_.push_back({Token::kPunct, std::string(1, c), i + 1});
      ++i;
    }
    tokens_.push_back({Token::kEnd, "", line.size() + 1});
  }

  bool blank() const { return tokens_.front().kind == Token::kEnd; }

  const Token& peek() const { return tokens_[pos_]; }
  bool at_punct(char c) const {
    return peek().kind == Token::kPunct && peek().text[0] == c;
  }

  const Token& ident(std::string_view what) {
    if (peek().kind != Token::kIdent)
      fail(peek().column, "expected " + std::string(what) + describe_found());
    return tokens_[pos_++];
  }

  void expect(char c) {
    if (!at_punct(c))
      fail(peek().column, std::string("expected '") + c + "'" + describe_found());
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Token::kEnd)
      fail(peek().column, "unexpected '" + peek().text + "' after statement");
  }

  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw ParseError(line_no_, column, msg);
  }

 private:
  std::string describe_found() const {
    if (peek().kind == Token::kEnd) return ", found end of line";
    return ", found '" + peek().text + "'";
  }

  std::size_t line_no_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

FeatureId lookup_feature(const StatementSet& set, LineParser& p,
                         const Token& t) {
  auto f = set.find_feature(t.text);
  if (!f) p.fail(t.column, "unknown feature '" + t.text + "'");
  return *f;
}

ValueId lookup_value(const StatementSet& set, LineParser& p, FeatureId f,
                     const Token& t) {
  auto v = set.feature(f).find_value(t.text);
  if (!v)
    p.fail(t.column, "unknown value '" + t.text + "' for feature '" +
                         set.feature(f).name + "'");
  return *v;
}

void parse_feature(StatementSet& set, LineParser& p) {
  const Token name = p.ident("feature name");
  if (set.find_feature(name.text))
    p.fail(name.column, "duplicate feature declaration '" + name.text + "'");
  p.expect('{');
  std::vector<std::string> values;
  std::vector<std::size_t> columns;
  while (true) {
    const Token v = p.ident("value name");
    for (const auto& existing : values)
      if (existing == v.text)
        p.fail(v.column, "duplicate value '" + v.text + "' in feature '" +
                             name.text + "'");
    values.push_back(v.text);
    if (p.at_punct(',')) {
      p.expect(',');
      continue;
    }
    break;
  }
  p.expect('}');
  p.expect_end();
  if (values.size() < 2)
    p.fail(name.column,
           "feature '" + name.text + "' needs at least two values");
  set.add_feature(name.text, std::move(values));
}

void parse_pref(StatementSet& set, LineParser& p) {
  const Token target_tok = p.ident("target feature");
  PreferenceStatement s;
  s.target = lookup_feature(set, p, target_tok);
  std::vector<Literal> literals;
  if (p.at_punct('|')) {
    p.expect('|');
    while (true) {
      const Token f_tok = p.ident("condition feature");
      const FeatureId f = lookup_feature(set, p, f_tok);
      if (f == s.target)
        p.fail(f_tok.column, "condition mentions the target feature '" +
                                 f_tok.text + "'");
      for (const Literal& l : literals)
        if (l.feature == f)
          p.fail(f_tok.column,
                 "feature '" + f_tok.text + "' appears twice in condition");
      p.expect('=');
      const Token v_tok = p.ident("condition value");
      literals.push_back({f, lookup_value(set, p, f, v_tok)});
      if (p.at_punct('&')) {
        p.expect('&');
        continue;
      }
      break;
    }
  }
  s.condition = Condition(std::move(literals));
  p.expect(':');
  while (true) {
    const Token v_tok = p.ident("ranked value");
    const ValueId v = lookup_value(set, p, s.target, v_tok);
    if (s.rank_of(v))
      p.fail(v_tok.column, "malformed ranking: value '" + v_tok.text +
                               "' listed twice");
    s.ranking.push_back(v);
    if (p.at_punct('>')) {
      p.expect('>');
      continue;
    }
    break;
  }
  if (s.ranking.size() < 2)
    p.fail(p.peek().column,
           "malformed ranking: expected '>' and at least two values");
  p.expect_end();
  set.add_statement(std::move(s));
}

}  // namespace

StatementSet parse_statements(std::string_view text) {
  StatementSet set;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    LineParser p(line, line_no);
    if (!p.blank()) {
      const Token keyword = p.ident("'feature' or 'pref'");
      if (keyword.text == "feature")
        parse_feature(set, p);
      else if (keyword.text == "pref")
        parse_pref(set, p);
      else
        p.fail(keyword.column, "unknown keyword '" + keyword.text +
                                   "' (expected 'feature' or 'pref')");
    }
    if (end == text.size()) break;
  }
  return set;
}

std::string serialize(const StatementSet& set) {
  std::string out;
  for (const Feature& f : set.features()) {
    out += "feature " + f.name + " {";
    for (std::size_t i = 0; i < f.values.size(); ++i)
      out += (i ? ", " : " ") + f.values[i];
    out += " }\n";
  }
  for (const PreferenceStatement& s : set.statements()) {
    const Feature& target = set.feature(s.target);
    out += "pref " + target.name;
    if (!s.condition.empty())
      out += " | " + format_condition(set, s.condition);
    out += " :";
    for (std::size_t i = 0; i < s.ranking.size(); ++i)
      out += (i ? " > " : " ") + target.values[s.ranking[i]];
    out += "\n";
  }
  return out;
}

}  // namespace prefcomp
