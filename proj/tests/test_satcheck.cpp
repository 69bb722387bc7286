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

#include "prefcomp/dsl.hpp"
#include "prefcomp/error.hpp"
#include "prefcomp/generate.hpp"
#include "prefcomp/oracle.hpp"
#include "prefcomp/satcheck.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace prefcomp;
using prefcomp::testing::load;

namespace {

std::vector<ValueId> entry(const UndominanceTable& t, std::vector<ValueId> values) {
  const auto* e = t.find(values);
  return e ? *e : std::vector<ValueId>{};
}

bool has_entry(const UndominanceTable& t, std::vector<ValueId> values) {
  return t.find(values) != nullptr;
}

}  // namespace

TEST_CASE("Omega1 tables before and after pruning") {
  const StatementSet o1 = load("omega1.pref");
  const FeatureId A = 0, B = 1, C = 2;
  const auto tables = build_tables(o1);
  const auto& tA = tables.tables[A];
  const auto& tB = tables.tables[B];
  const auto& tC = tables.tables[C];
  // Values indexed A, B, C; entries keyed on the parents only.
  CHECK(tA.parents.empty());
  CHECK(entry(tA, {0, 0, 0}) == std::vector<ValueId>{0, 1});
  CHECK(entry(tC, {0, 0, 0}) == std::vector<ValueId>{0});
  CHECK(tB.parents == std::vector<FeatureId>{A, C});
  CHECK(tB.key_count() == 4);
  CHECK_FALSE(has_entry(tB, {0, 0, 0}));                      // a & c: 2-cycle
  CHECK(entry(tB, {0, 0, 1}) == std::vector<ValueId>{0});     // a & c!
  CHECK(entry(tB, {1, 0, 0}) == std::vector<ValueId>{0, 1});  // a! & c
  CHECK(entry(tB, {1, 0, 1}) == std::vector<ValueId>{0, 1});  // a! & c!
  CHECK(tables.entry_count() == 5);
  CHECK(tables.first_empty() == std::nullopt);

  const auto order = topological_order(dependence_graph(o1)).order;
  CHECK(order == std::vector<FeatureId>{A, C, B});
  const auto pruned = prune_unsupported(tables, order);
  const auto& pB = pruned.tables[B];
  CHECK_FALSE(has_entry(pB, {0, 0, 1}));
  CHECK_FALSE(has_entry(pB, {1, 0, 1}));
  CHECK(has_entry(pB, {1, 0, 0}));
  CHECK(pruned.entry_count() == 3);

  const auto verdict = satisfiable(o1);
  CHECK(verdict.satisfiable);
  REQUIRE(verdict.witness);
  CHECK(format_outcome(o1, *verdict.witness) == "A=a!,B=b,C=c");
  CHECK_FALSE(reference::has_improving_flip(o1, *verdict.witness));
  CHECK(verdict.initial_tables.entry_count() == 5);
}

TEST_CASE("Omega2 witness") {
  const StatementSet o2 = load("omega2.pref");
  const auto verdict = satisfiable(o2);
  CHECK(verdict.satisfiable);
  REQUIRE(verdict.witness);
  CHECK(format_outcome(o2, *verdict.witness) == "A=a,B=b,C=c!");
  const auto und = undominated_set(o2);
  CHECK(std::find(und.begin(), und.end(), *verdict.witness) != und.end());
}

TEST_CASE("empty table makes the set unsatisfiable") {
  const StatementSet s =
      parse_statements("feature X { x, x! }\npref X : x > x!\npref X : x! > x\n");
  const auto v = satisfiable(s);
  CHECK_FALSE(v.satisfiable);
  CHECK(v.reason == "empty table at X");
  CHECK_FALSE(v.witness);
}

TEST_CASE("shared parent: nonempty pruned tables, no consistent outcome") {
  const StatementSet s = load("shared_parent.pref");
  const auto v = satisfiable(s);
  CHECK_FALSE(v.satisfiable);
  CHECK(v.reason == "no table-consistent assignment");
  CHECK(v.tables.first_empty() == std::nullopt);
  CHECK_FALSE(is_satisfiable_bruteforce(s).satisfiable);
}

TEST_CASE("preconditions") {
  const StatementSet cyc = parse_statements(R"(
feature A { a, a! }
feature B { b, b! }
pref A | B=b : a > a!
pref B | A=a : b > b!
)");
  CHECK_THROWS_AS(satisfiable(cyc), PreconditionError);
  const StatementSet n0 = load("n0.pref");
  CHECK_THROWS_AS(satisfiable(n0, SatOptions{1}), SizeError);
  const auto t = build_tables(n0);
  const std::vector<FeatureId> wrong{3, 2, 1, 0};
  CHECK_THROWS_AS(prune_unsupported(t, wrong), PreconditionError);
}

TEST_CASE("no statements: every value undominated") {
  const StatementSet s = parse_statements("feature X { x, x!, x2 }\n");
  const auto v = satisfiable(s);
  CHECK(v.satisfiable);
  CHECK(v.tables.tables[0].supported_values() == std::vector<ValueId>{0, 1, 2});
}

TEST_CASE("table keys round trip") {
  const StatementSet n0 = load("n0.pref");
  const auto t = build_tables(n0).tables[2];
  for (std::size_t k = 0; k < t.key_count(); ++k) {
    auto values = std::vector<ValueId>(4, 0);
    const auto parent_values = t.decode(k);
    for (std::size_t i = 0; i < t.parents.size(); ++i) values[t.parents[i]] = parent_values[i];
    CHECK(t.key(values) == k);
  }
}

TEST_CASE("table verdict matches the oracle on random acyclic sets") {
  Rng rng(4242);
  for (int i = 0; i < 300; ++i) {
    StatementSetShape shape;
    shape.features = 1 + i % 4;
    shape.max_domain = 2 + (i % 5 == 0);
    shape.max_parents = 2;
    const StatementSet set = random_statement_set(rng, shape);
    INFO(serialize(set));
    const auto v = satisfiable(set);
    const auto g = dependence_graph(set);
    std::size_t budget = 0;
    for (FeatureId x = 0; x < set.feature_count(); ++x) {
      std::size_t keys = 1;
      for (FeatureId p : g.parents[x]) keys *= set.feature(p).domain_size();
      budget += keys;
    }
    CHECK(v.initial_tables.entry_count() <= budget);
    CHECK(v.initial_tables.entries_examined <= budget);
    const bool expected = !reference::undominated_by_flips(set).empty();
    CHECK(v.satisfiable == expected);
    if (v.witness) CHECK_FALSE(reference::has_improving_flip(set, *v.witness));
  }
}
