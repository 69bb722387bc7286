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

#include <catch_amalgamated.hpp>

#include <random>
#include <string>

#include "prefcomp/dsl.hpp"
#include "prefcomp/error.hpp"
#include "prefcomp/generate.hpp"
#include "support/fixtures.hpp"

using namespace prefcomp;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_statements(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parses features, conditions and rankings") {
  const StatementSet set = parse_statements(R"(
# comment line
feature A { a, a! }   # trailing comment
feature B { b, b!, b'2 }
pref A : a > a!
pref B | A=a! : b'2 > b > b!
)");
  REQUIRE(set.feature_count() == 2);
  CHECK(set.feature(1).values == std::vector<std::string>{"b", "b!", "b'2"});
  REQUIRE(set.statements().size() == 2);
  const auto& s = set.statements()[1];
  CHECK(s.target == 1);
  CHECK(s.condition == Condition({{0, 1}}));
  CHECK(s.ranking == std::vector<ValueId>{2, 0, 1});
}

TEST_CASE("N0 parses to eight statements") {
  const StatementSet n0 = testing::load("n0.pref");
  CHECK(n0.feature_count() == 4);
  CHECK(n0.statements().size() == 8);
  CHECK(n0.statements_on(2).size() == 4);
}

TEST_CASE("parse errors carry line and column") {
  const auto e = parse_failure("feature A { a, a! }\npref A | B=b : a > a!\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 10);
  CHECK(e.message() == "unknown feature 'B'");
  CHECK(std::string(e.what()) == "line 2, column 10: unknown feature 'B'");
}

TEST_CASE("each malformed input has a distinct message") {
  const std::string head = "feature A { a, a! }\nfeature B { b, b! }\n";
  struct Case {
    std::string text;
    std::string message;
  };
  const std::vector<Case> cases{
      {head + "pref A | B=z : a > a!", "unknown value 'z' for feature 'B'"},
      {head + "feature A { x, y }", "duplicate feature declaration 'A'"},
      {"feature C { c, c }", "duplicate value 'c' in feature 'C'"},
      {"feature C { c }", "at least two values"},
      {head + "pref A | A=a : a > a!", "condition mentions the target feature 'A'"},
      {head + "pref A | B=b & B=b! : a > a!", "twice"},
      {head + "pref A : a > a", "malformed ranking"},
      {head + "pref A : a", "malformed ranking"},
      {head + "pref A : a >", "expected"},
      {head + "prefer A : a > a!", "unknown keyword 'prefer'"},
      {"feature C { c, c! ", "expected"},
      {head + "pref A : a > a! extra", "after statement"},
      {"feature C { c, c! } $", "unexpected character '$'"},
  };
  for (const auto& c : cases) {
    INFO(c.text);
    const auto e = parse_failure(c.text);
    CHECK_THAT(e.message(), Catch::Matchers::ContainsSubstring(c.message));
    CHECK(e.line() >= 1);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("serialize round trips the fixtures") {
  for (const char* name : {"n0.pref", "omega1.pref", "omega2.pref", "shared_parent.pref"}) {
    INFO(name);
    const StatementSet set = testing::load(name);
    const std::string text = serialize(set);
    CHECK(parse_statements(text) == set);
    CHECK(serialize(parse_statements(text)) == text);
  }
}

TEST_CASE("serialize round trips random statement sets") {
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    StatementSetShape shape;
    shape.features = 1 + i % 5;
    shape.max_domain = 3;
    shape.allow_cycles = i % 2 == 0;
    const StatementSet set = random_statement_set(rng, shape);
    CHECK(parse_statements(serialize(set)) == set);
  }
}
