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

#include "prefcomp/two_sat.hpp"

#include <algorithm>
#include <functional>

namespace prefcomp {

TwoSatSolver::TwoSatSolver(std::size_t variables)
    : variables_(variables), implications_(2 * variables) {}

void TwoSatSolver::add_clause(std::size_t a, std::size_t b) {
  ++clauses_;
  implications_[a ^ 1].push_back(b);
  if (a != b) implications_[b ^ 1].push_back(a);
}

std::optional<std::vector<bool>> TwoSatSolver::solve() const {
  const std::size_t n = implications_.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), component(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::size_t components = 0;

  // Components are numbered in reverse topological order of the condensed
  // implication graph.
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : implications_[v]) {
      if (index[w] == kUnvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component[w] = components;
      } while (w != v);
      ++components;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == kUnvisited) visit(v);

  std::vector<bool> model(variables_);
  for (std::size_t x = 0; x < variables_; ++x) {
    const std::size_t pos = component[literal(x, true)];
    const std::size_t neg = component[literal(x, false)];
    if (pos == neg) return std::nullopt;
    model[x] = pos < neg;
  }
  return model;
}

TwoSatResult satisfiable_2sat(const StatementSet& set) {
  TwoSatResult result;
  for (const Feature& f : set.features()) {
    if (f.domain_size() != 2) {
      result.reason = "feature '" + f.name + "' is not boolean";
      return result;
    }
  }
  for (std::size_t i = 0; i < set.statements().size(); ++i) {
    if (set.statements()[i].condition.size() > 1) {
      result.reason = "statement " + std::to_string(i) +
                      " has more than one condition equality";
      return result;
    }
  }

  // Variable f is true iff feature f takes its first value.
  auto lit = [](const Literal& l) {
    return TwoSatSolver::literal(l.feature, l.value == 0);
  };
  TwoSatSolver solver(set.feature_count());
  const auto& st = set.statements();
  for (const PreferenceStatement& s : st) {
    const std::size_t head = lit({s.target, s.ranking.front()});
    if (s.condition.empty())
      solver.add_clause(head, head);
    else
      solver.add_clause(lit(s.condition.literals().front()) ^ 1, head);
  }
  for (std::size_t i = 0; i < st.size(); ++i) {
    for (std::size_t j = i + 1; j < st.size(); ++j) {
      if (st[i].target != st[j].target ||
          st[i].ranking.front() == st[j].ranking.front())
        continue;
      auto negated = [&](const PreferenceStatement& s) -> std::optional<std::size_t> {
        if (s.condition.empty()) return std::nullopt;
        return lit(s.condition.literals().front()) ^ 1;
      };
      const auto a = negated(st[i]);
      const auto b = negated(st[j]);
      if (!a && !b) {
        // Both unconditional: the empty clause, encoded as (x) and (~x).
        const std::size_t x = TwoSatSolver::literal(st[i].target, true);
        solver.add_clause(x, x);
        solver.add_clause(x ^ 1, x ^ 1);
      } else {
        const std::size_t first = a ? *a : *b;
        solver.add_clause(first, b ? *b : first);
      }
    }
  }
  result.clause_count = solver.clause_count();
  const auto model = solver.solve();
  if (!model) {
    result.status = TwoSatStatus::kUnsatisfiable;
    result.reason = "2-CNF is unsatisfiable";
    return result;
  }
  result.status = TwoSatStatus::kSatisfiable;
  Outcome witness{std::vector<ValueId>(set.feature_count())};
  for (FeatureId f = 0; f < set.feature_count(); ++f)
    witness.values[f] = (*model)[f] ? 0 : 1;
  result.witness = std::move(witness);
  return result;
}

}  // namespace prefcomp
