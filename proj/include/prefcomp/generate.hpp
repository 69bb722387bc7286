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

#ifndef PREFCOMP_GENERATE_HPP
#define PREFCOMP_GENERATE_HPP

// Seeded random instances. Features are declared in a shuffled order so
// that declaration order and dependency order differ.

#include <random>

#include "prefcomp/cnf.hpp"
#include "prefcomp/model.hpp"

namespace prefcomp {

using Rng = std::mt19937_64;

struct CpNetShape {
  std::size_t features = 4;
  std::size_t min_domain = 2;
  std::size_t max_domain = 2;
  std::size_t max_parents = 2;
};

// A proper acyclic CP-net: random DAG with at most `max_parents` parents
// per feature and a uniformly random total order in every CPT row.
StatementSet random_cpnet(Rng& rng, const CpNetShape& shape);

struct StatementSetShape {
  std::size_t features = 4;
  std::size_t max_domain = 2;
  std::size_t max_parents = 2;
  std::size_t max_statements_per_feature = 3;
  // Permit dependence cycles (the candidate parents range over all other
  // features instead of earlier ones).
  bool allow_cycles = false;
  // Largest condition size; defaults to max_parents when 0.
  std::size_t max_condition = 0;
};

// Arbitrary statements: overlapping, partial or conflicting conditions are
// all possible, so both satisfiable and unsatisfiable sets come out.
StatementSet random_statement_set(Rng& rng, const StatementSetShape& shape);

// Random clauses of 1..max_length distinct variables with random signs.
CnfFormula random_cnf(Rng& rng, std::size_t variables, std::size_t clauses,
                      std::size_t max_length = 3);

}  // namespace prefcomp

#endif  // PREFCOMP_GENERATE_HPP
