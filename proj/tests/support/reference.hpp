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

#ifndef PREFCOMP_TESTS_REFERENCE_HPP
#define PREFCOMP_TESTS_REFERENCE_HPP

// Brute-force reference semantics written directly from the definitions,
// sharing no code with the library paths they check (only the data model).

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "prefcomp/cnf.hpp"
#include "prefcomp/model.hpp"
#include "prefcomp/semiring.hpp"

namespace prefcomp::reference {

inline std::vector<Outcome> all_outcomes(const StatementSet& set) {
  std::vector<Outcome> out;
  Outcome cur{std::vector<ValueId>(set.feature_count(), 0)};
  std::function<void(std::size_t)> rec = [&](std::size_t f) {
    if (f == set.feature_count()) {
      out.push_back(cur);
      return;
    }
    for (ValueId v = 0; v < set.feature(f).domain_size(); ++v) {
      cur.values[f] = v;
      rec(f + 1);
    }
  };
  rec(0);
  return out;
}

// Does some applicable statement rank `better` strictly above `worse` on X,
// judged in the context of `alpha`?
inline bool ranks_above(const StatementSet& set, const Outcome& alpha,
                        FeatureId x, ValueId better, ValueId worse) {
  for (const auto& s : set.statements()) {
    if (s.target != x) continue;
    bool applies = true;
    for (const auto& l : s.condition.literals())
      if (alpha.values[l.feature] != l.value) applies = false;
    if (!applies) continue;
    auto bi = std::find(s.ranking.begin(), s.ranking.end(), better);
    auto wi = std::find(s.ranking.begin(), s.ranking.end(), worse);
    if (bi != s.ranking.end() && wi != s.ranking.end() && bi < wi) return true;
  }
  return false;
}

inline std::vector<Outcome> worsening_flips(const StatementSet& set,
                                            const Outcome& alpha) {
  std::vector<Outcome> out;
  for (FeatureId x = 0; x < set.feature_count(); ++x)
    for (ValueId v = 0; v < set.feature(x).domain_size(); ++v)
      if (v != alpha.values[x] && ranks_above(set, alpha, x, alpha.values[x], v)) {
        Outcome beta = alpha;
        beta.values[x] = v;
        out.push_back(beta);
      }
  return out;
}

inline bool has_improving_flip(const StatementSet& set, const Outcome& alpha) {
  for (FeatureId x = 0; x < set.feature_count(); ++x)
    for (ValueId v = 0; v < set.feature(x).domain_size(); ++v)
      if (v != alpha.values[x] && ranks_above(set, alpha, x, v, alpha.values[x]))
        return true;
  return false;
}

// Undominated by path search: no outcome reaches alpha.
inline bool dominates(const StatementSet& set, const Outcome& alpha,
                      const Outcome& beta) {
  if (alpha == beta) return false;
  std::set<Outcome> seen;
  std::queue<Outcome> q;
  q.push(alpha);
  while (!q.empty()) {
    Outcome cur = q.front();
    q.pop();
    for (const Outcome& next : worsening_flips(set, cur)) {
      if (next == beta) return true;
      if (seen.insert(next).second) q.push(next);
    }
  }
  return false;
}

inline std::vector<Outcome> undominated_by_paths(const StatementSet& set) {
  const auto all = all_outcomes(set);
  std::vector<Outcome> out;
  for (const auto& a : all) {
    bool dominated = false;
    for (const auto& b : all)
      if (!(a == b) && reference::dominates(set, b, a)) dominated = true;
    // A node on a cycle is reached from itself through its cycle neighbours.
    if (!dominated)
      for (const auto& b : worsening_flips(set, a))
        if (reference::dominates(set, b, a)) dominated = true;
    if (!dominated) out.push_back(a);
  }
  return out;
}

inline std::vector<Outcome> undominated_by_flips(const StatementSet& set) {
  std::vector<Outcome> out;
  for (const auto& a : all_outcomes(set))
    if (!has_improving_flip(set, a)) out.push_back(a);
  return out;
}

inline bool truth_table_sat(const CnfFormula& f) {
  for (std::size_t mask = 0; mask < (std::size_t{1} << f.variable_count); ++mask) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool sat = false;
      for (int lit : clause) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1;
        if ((lit > 0) == value) sat = true;
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// The statement of a proper CP-net that applies to X under alpha.
inline const PreferenceStatement& cpt_row(const StatementSet& set,
                                          const Outcome& alpha, FeatureId x) {
  for (const auto& s : set.statements()) {
    if (s.target != x) continue;
    bool applies = true;
    for (const auto& l : s.condition.literals())
      if (alpha.values[l.feature] != l.value) applies = false;
    if (applies) return s;
  }
  throw std::logic_error("no CPT row");
}

inline std::size_t rank_in(const PreferenceStatement& s, ValueId v) {
  return static_cast<std::size_t>(
      std::find(s.ranking.begin(), s.ranking.end(), v) - s.ranking.begin());
}

// Weights straight from the recursive definition, by memoized recursion on
// children rather than a topological sweep.
inline std::vector<BigInt> weights(const StatementSet& set) {
  std::vector<std::set<FeatureId>> children(set.feature_count());
  for (const auto& s : set.statements())
    for (const auto& l : s.condition.literals()) children[l.feature].insert(s.target);
  std::map<FeatureId, BigInt> memo;
  std::function<BigInt(FeatureId)> w = [&](FeatureId x) -> BigInt {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    BigInt total = 0;
    for (FeatureId y : children[x]) total += w(y) * set.feature(y).domain_size();
    if (children[x].empty()) total = 1;
    memo[x] = total;
    return total;
  };
  std::vector<BigInt> out;
  for (FeatureId x = 0; x < set.feature_count(); ++x) out.push_back(w(x));
  return out;
}

inline BigInt minplus_penalty(const StatementSet& set, const Outcome& alpha) {
  const auto w = weights(set);
  BigInt total = 0;
  for (FeatureId x = 0; x < set.feature_count(); ++x)
    total += w[x] * rank_in(cpt_row(set, alpha, x), alpha.values[x]);
  return total;
}

// Lexicographic minimum of the per-feature sequences, each all-MAX except
// MAX - rank at the feature's position.
inline std::vector<int> slo_lexmin(const StatementSet& set, const Outcome& alpha,
                                   const std::vector<std::size_t>& position) {
  const int max = static_cast<int>(set.max_domain_size()) - 1;
  std::vector<std::vector<int>> seqs;
  for (FeatureId x = 0; x < set.feature_count(); ++x) {
    std::vector<int> s(set.feature_count(), max);
    s[position[x]] = max - static_cast<int>(rank_in(cpt_row(set, alpha, x), alpha.values[x]));
    seqs.push_back(s);
  }
  return *std::min_element(seqs.begin(), seqs.end());
}

}  // namespace prefcomp::reference

#endif  // PREFCOMP_TESTS_REFERENCE_HPP
