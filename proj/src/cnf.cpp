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

#include "prefcomp/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "prefcomp/error.hpp"

namespace prefcomp {

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (int lit : clause) {
      const bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
      if ((lit > 0) == value) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> current;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '%') {
      if (end == text.size()) break;
      continue;
    }
    std::istringstream in(line);
    if (line[first] == 'p') {
      std::string p, kind;
      long long vars = -1, clauses = -1;
      in >> p >> kind >> vars >> clauses;
      if (header || kind != "cnf" || vars < 0 || clauses < 0)
        throw ParseError(line_no, first + 1, "malformed 'p cnf' header");
      header = true;
      f.variable_count = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
    } else {
      if (!header)
        throw ParseError(line_no, first + 1, "clause before 'p cnf' header");
      std::string tok;
      while (in >> tok) {
        char* stop = nullptr;
        const long lit = std::strtol(tok.c_str(), &stop, 10);
        if (*stop != '\0')
          throw ParseError(line_no, line.find(tok) + 1,
                           "invalid literal '" + tok + "'");
        if (lit == 0) {
          f.clauses.push_back(std::move(current));
          current.clear();
          continue;
        }
        if (static_cast<std::size_t>(std::labs(lit)) > f.variable_count)
          throw ParseError(line_no, line.find(tok) + 1,
                           "literal '" + tok + "' exceeds the declared " +
                               std::to_string(f.variable_count) +
                               " variables");
        current.push_back(static_cast<int>(lit));
      }
    }
    if (end == text.size()) break;
  }
  if (!header) throw ParseError(line_no, 1, "missing 'p cnf' header");
  if (!current.empty()) f.clauses.push_back(std::move(current));
  if (f.clauses.size() != declared_clauses)
    throw ParseError(line_no, 1,
                     "header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(f.clauses.size()));
  return f;
}

std::string to_dimacs(const CnfFormula& formula) {
  std::string out = "p cnf " + std::to_string(formula.variable_count) + " " +
                    std::to_string(formula.clauses.size()) + "\n";
  for (const auto& clause : formula.clauses) {
    for (int lit : clause) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

EncodedFormula encode_3sat(const CnfFormula& formula) {
  EncodedFormula out;
  for (std::size_t v = 1; v <= formula.variable_count; ++v) {
    const std::string name = "x" + std::to_string(v);
    out.statements.add_feature(name, {name, name + "!"});
  }
  for (const auto& raw : formula.clauses) {
    if (raw.size() > 3)
      throw PreconditionError("clause with " + std::to_string(raw.size()) +
                              " literals; at most three are allowed");
    if (raw.empty()) {
      out.has_empty_clause = true;
      continue;
    }
    std::vector<int> clause;
    for (int lit : raw)
      if (std::find(clause.begin(), clause.end(), lit) == clause.end())
        clause.push_back(lit);
    const bool tautology =
        std::any_of(clause.begin(), clause.end(), [&](int lit) {
          return std::find(clause.begin(), clause.end(), -lit) != clause.end();
        });
    if (tautology) {
      ++out.tautologies_dropped;
      continue;
    }
    const int head = clause.back();
    std::vector<Literal> negated;
    for (std::size_t i = 0; i + 1 < clause.size(); ++i)
      negated.push_back({static_cast<FeatureId>(std::abs(clause[i]) - 1),
                         encoded_value(clause[i] < 0)});
    PreferenceStatement s;
    s.target = static_cast<FeatureId>(std::abs(head) - 1);
    s.condition = Condition(std::move(negated));
    s.ranking = {encoded_value(head > 0), encoded_value(head < 0)};
    out.statements.add_statement(std::move(s));
  }
  return out;
}

}  // namespace prefcomp
