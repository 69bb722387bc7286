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

#ifndef PREFCOMP_CNF_HPP
#define PREFCOMP_CNF_HPP

#include <string>
#include <string_view>
#include <vector>

#include "prefcomp/model.hpp"

namespace prefcomp {

// Clauses of nonzero DIMACS literals: v means variable v is true, -v false.
struct CnfFormula {
  std::size_t variable_count = 0;
  std::vector<std::vector<int>> clauses;

  // `assignment[v - 1]` is the value of variable v.
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

// Reads "p cnf V C" plus zero-terminated clauses; `c` lines are comments.
// Throws ParseError.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& formula);

struct EncodedFormula {
  StatementSet statements;
  // The formula contains an empty clause, so it is unsatisfiable regardless
  // of the statements.
  bool has_empty_clause = false;
  // Clauses dropped because they contain a literal and its negation.
  std::size_t tautologies_dropped = 0;
};

// One feature xi {xi, xi!} per variable (xi is "true"). A clause
// (l1 v ... v lk) becomes the statement
//   ~l1 & ... & ~l(k-1) : l_k > ~l_k
// so a statement set outcome is undominated exactly when it satisfies every
// clause. Repeated literals are merged. Throws PreconditionError for a
// clause of more than three literals.
EncodedFormula encode_3sat(const CnfFormula& formula);

// Value id in the encoded feature for the polarity of a literal.
inline ValueId encoded_value(bool positive) { return positive ? 0 : 1; }

}  // namespace prefcomp

#endif  // PREFCOMP_CNF_HPP
