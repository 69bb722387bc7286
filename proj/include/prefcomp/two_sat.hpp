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

#ifndef PREFCOMP_TWO_SAT_HPP
#define PREFCOMP_TWO_SAT_HPP

#include <optional>
#include <string>
#include <vector>

#include "prefcomp/model.hpp"

namespace prefcomp {

// 2-CNF decided through strongly connected components of the implication
// graph (Tarjan). Literal 2v is "v true", 2v+1 is "v false".
class TwoSatSolver {
 public:
  explicit TwoSatSolver(std::size_t variables);

  static std::size_t literal(std::size_t variable, bool positive) {
    return 2 * variable + (positive ? 0 : 1);
  }

  // (a v b); a unit clause is add_clause(a, a).
  void add_clause(std::size_t a, std::size_t b);
  std::size_t clause_count() const { return clauses_; }

  // A model indexed by variable, or nullopt when unsatisfiable.
  std::optional<std::vector<bool>> solve() const;

 private:
  std::size_t variables_;
  std::size_t clauses_ = 0;
  std::vector<std::vector<std::size_t>> implications_;
};

enum class TwoSatStatus { kSatisfiable, kUnsatisfiable, kNotApplicable };

struct TwoSatResult {
  TwoSatStatus status = TwoSatStatus::kNotApplicable;
  std::optional<Outcome> witness;
  std::string reason;
  std::size_t clause_count = 0;
};

// Boolean features and at most one equality per condition. Each feature
// becomes a variable ("first domain value"); a statement l : x > x' yields
// (~l v x), an unconditional one the unit (x), and every pair of opposite
// statements l1 : x > x', l2 : x' > x yields (~l1 v ~l2). Models are exactly
// the outcomes with no improving flip, i.e. the undominated outcomes.
TwoSatResult satisfiable_2sat(const StatementSet& set);

}  // namespace prefcomp

#endif  // PREFCOMP_TWO_SAT_HPP
