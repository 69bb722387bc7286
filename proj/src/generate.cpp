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

#include "prefcomp/generate.hpp"

#include <algorithm>
#include <numeric>

#include "prefcomp/error.hpp"

namespace prefcomp {
namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::size_t> shuffled(Rng& rng, std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// Declares features F0..F(n-1) (hidden rank order) in a shuffled
// declaration order; returns rank -> feature id.
std::vector<FeatureId> declare_features(Rng& rng, StatementSet& set,
                                        std::size_t n, std::size_t min_domain,
                                        std::size_t max_domain) {
  const auto declaration = shuffled(rng, n);
  std::vector<FeatureId> id_of_rank(n);
  for (std::size_t rank : declaration) {
    const std::size_t d = uniform(rng, min_domain, max_domain);
    const std::string name = "F" + std::to_string(rank);
    std::vector<std::string> values;
    std::string base(1, static_cast<char>('a' + rank % 26));
    if (rank >= 26) base += std::to_string(rank / 26);
    for (std::size_t v = 0; v < d; ++v)
      values.push_back(v == 0 ? base : v == 1 ? base + "!" : base + std::to_string(v));
    id_of_rank[rank] = set.add_feature(name, std::move(values));
  }
  return id_of_rank;
}

std::vector<FeatureId> pick_subset(Rng& rng, std::vector<FeatureId> pool,
                                   std::size_t count) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(count, pool.size()));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

StatementSet random_cpnet(Rng& rng, const CpNetShape& shape) {
  if (shape.min_domain < 2 || shape.max_domain < shape.min_domain)
    throw PreconditionError("invalid domain range for random CP-net");
  StatementSet set;
  const auto id = declare_features(rng, set, shape.features, shape.min_domain,
                                   shape.max_domain);
  for (std::size_t rank = 0; rank < shape.features; ++rank) {
    const FeatureId x = id[rank];
    std::vector<FeatureId> earlier(id.begin(), id.begin() + rank);
    const auto parents = pick_subset(
        rng, earlier, uniform(rng, 0, std::min(shape.max_parents, rank)));
    std::size_t contexts = 1;
    for (FeatureId p : parents) contexts *= set.feature(p).domain_size();
    for (std::size_t k = 0; k < contexts; ++k) {
      std::vector<Literal> literals;
      std::size_t rest = k;
      for (std::size_t i = parents.size(); i-- > 0;) {
        const std::size_t d = set.feature(parents[i]).domain_size();
        literals.push_back({parents[i], rest % d});
        rest /= d;
      }
      PreferenceStatement s;
      s.target = x;
      s.condition = Condition(std::move(literals));
      s.ranking = shuffled(rng, set.feature(x).domain_size());
      set.add_statement(std::move(s));
    }
  }
  return set;
}

StatementSet random_statement_set(Rng& rng, const StatementSetShape& shape) {
  StatementSet set;
  const auto id = declare_features(rng, set, shape.features, 2, shape.max_domain);
  const std::size_t max_condition =
      shape.max_condition ? shape.max_condition : shape.max_parents;
  for (std::size_t rank = 0; rank < shape.features; ++rank) {
    const FeatureId x = id[rank];
    std::vector<FeatureId> pool;
    for (std::size_t r = 0; r < shape.features; ++r)
      if (r != rank && (shape.allow_cycles || r < rank)) pool.push_back(id[r]);
    const auto parents =
        pick_subset(rng, pool, uniform(rng, 0, std::min(shape.max_parents, pool.size())));
    const std::size_t statements = uniform(rng, 0, shape.max_statements_per_feature);
    for (std::size_t i = 0; i < statements; ++i) {
      const auto cond_features = pick_subset(
          rng, parents, uniform(rng, 0, std::min(max_condition, parents.size())));
      std::vector<Literal> literals;
      for (FeatureId f : cond_features)
        literals.push_back({f, uniform(rng, 0, set.feature(f).domain_size() - 1)});
      PreferenceStatement s;
      s.target = x;
      s.condition = Condition(std::move(literals));
      auto ranking = shuffled(rng, set.feature(x).domain_size());
      ranking.resize(uniform(rng, 2, ranking.size()));
      s.ranking = std::move(ranking);
      set.add_statement(std::move(s));
    }
  }
  return set;
}

CnfFormula random_cnf(Rng& rng, std::size_t variables, std::size_t clauses,
                      std::size_t max_length) {
  CnfFormula f;
  f.variable_count = variables;
  std::vector<FeatureId> vars(variables);
  std::iota(vars.begin(), vars.end(), 0);
  for (std::size_t c = 0; c < clauses; ++c) {
    const auto chosen =
        pick_subset(rng, vars, uniform(rng, 1, std::min(max_length, variables)));
    std::vector<int> clause;
    for (FeatureId v : chosen) {
      const int lit = static_cast<int>(v) + 1;
      clause.push_back(uniform(rng, 0, 1) ? lit : -lit);
    }
    std::shuffle(clause.begin(), clause.end(), rng);
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace prefcomp
