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

#ifndef PREFCOMP_SCSP_HPP
#define PREFCOMP_SCSP_HPP

// Soft constraint problems over any c-semiring. Constraint tables are
// dense: entry i of a table is the value of the tuple whose mixed-radix
// index over the scope (first scope variable most significant) is i.

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prefcomp/error.hpp"
#include "prefcomp/semiring.hpp"

namespace prefcomp {

using Assignment = std::vector<std::size_t>;

struct Variable {
  std::string name;
  std::vector<std::string> values;
  // Non-empty for a derived variable whose domain is the product of the
  // component domains; its value is determined by the components.
  std::vector<std::size_t> components;

  std::size_t domain_size() const { return values.size(); }
  bool derived() const { return !components.empty(); }
};

enum class ConstraintKind { kSoft, kHard };

template <class V>
struct SoftConstraint {
  std::vector<std::size_t> scope;
  std::vector<V> table;
  ConstraintKind kind = ConstraintKind::kSoft;
  std::string label;
  // Decimal weight annotation from the compiler; empty when unweighted.
  std::string weight;
};

enum class Comparison { kFirstBetter, kSecondBetter, kEqual, kIncomparable };

std::string_view to_string(Comparison c);

template <CSemiring S>
Comparison compare_values(const S& s, const typename S::value_type& a,
                          const typename S::value_type& b) {
  if (s.equal(a, b)) return Comparison::kEqual;
  if (leq(s, b, a)) return Comparison::kFirstBetter;
  if (leq(s, a, b)) return Comparison::kSecondBetter;
  return Comparison::kIncomparable;
}

template <CSemiring S>
class SoftCsp {
 public:
  using value_type = typename S::value_type;
  using Constraint = SoftConstraint<value_type>;

  explicit SoftCsp(S semiring) : semiring_(std::move(semiring)) {}

  const S& semiring() const { return semiring_; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  std::size_t add_variable(Variable v) {
    if (v.values.empty())
      throw ModelError("variable '" + v.name + "' has an empty domain");
    if (v.derived()) {
      std::size_t product = 1;
      for (std::size_t c : v.components) {
        if (c >= variables_.size())
          throw ModelError("derived variable '" + v.name +
                           "' references an undeclared component");
        product *= variables_[c].domain_size();
      }
      if (product != v.domain_size())
        throw ModelError("derived variable '" + v.name +
                         "' domain does not match its components");
    }
    variables_.push_back(std::move(v));
    return variables_.size() - 1;
  }

  void add_constraint(Constraint c) {
    std::size_t tuples = 1;
    for (std::size_t var : c.scope) {
      if (var >= variables_.size())
        throw ModelError("constraint scope references an undeclared variable");
      tuples *= variables_[var].domain_size();
    }
    if (c.table.size() != tuples)
      throw ModelError("constraint table has " + std::to_string(c.table.size()) +
                       " rows, scope needs " + std::to_string(tuples));
    for (const auto& v : c.table)
      if (!semiring_.contains(v))
        throw DomainError("constraint value " + semiring_.format(v) +
                          " is outside the carrier");
    constraints_.push_back(std::move(c));
  }

  std::size_t tuple_index(const Constraint& c,
                          std::span<const std::size_t> assignment) const {
    std::size_t idx = 0;
    for (std::size_t var : c.scope)
      idx = idx * variables_[var].domain_size() + assignment[var];
    return idx;
  }

  // Throws PreconditionError unless every variable has an in-range value.
  void check_assignment(std::span<const std::size_t> assignment) const {
    if (assignment.size() != variables_.size())
      throw PreconditionError("assignment covers " +
                              std::to_string(assignment.size()) + " of " +
                              std::to_string(variables_.size()) +
                              " variables");
    for (std::size_t i = 0; i < variables_.size(); ++i)
      if (assignment[i] >= variables_[i].domain_size())
        throw PreconditionError("value out of range for variable '" +
                                variables_[i].name + "'");
  }

  // Overwrites every derived variable with the value its components imply.
  void fill_derived(Assignment& assignment) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      const Variable& v = variables_[i];
      if (!v.derived()) continue;
      std::size_t idx = 0;
      for (std::size_t c : v.components)
        idx = idx * variables_[c].domain_size() + assignment.at(c);
      assignment.at(i) = idx;
    }
  }

  // Combination of the projections of `assignment` on every constraint.
  value_type evaluate(std::span<const std::size_t> assignment) const {
    check_assignment(assignment);
    value_type acc = semiring_.one();
    for (const Constraint& c : constraints_)
      acc = semiring_.combine(acc, c.table[tuple_index(c, assignment)]);
    return acc;
  }

  // Number of complete assignments (derived variables excluded), saturating
  // at SIZE_MAX.
  std::size_t search_space() const {
    std::size_t product = 1;
    for (const Variable& v : variables_) {
      if (v.derived()) continue;
      if (product > std::numeric_limits<std::size_t>::max() / v.domain_size())
        return std::numeric_limits<std::size_t>::max();
      product *= v.domain_size();
    }
    return product;
  }

 private:
  S semiring_;
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
};

template <CSemiring S>
Comparison compare(const SoftCsp<S>& p, std::span<const std::size_t> a1,
                   std::span<const std::size_t> a2) {
  return compare_values(p.semiring(), p.evaluate(a1), p.evaluate(a2));
}

struct OptimumOptions {
  std::size_t max_assignments = std::size_t{1} << 20;
  // Depth-first branch and bound; totally ordered carriers only. Lifts the
  // assignment cap.
  bool branch_and_bound = false;
};

template <CSemiring S>
struct Optimum {
  // Every assignment whose value is maximal, in lexicographic order.
  std::vector<Assignment> assignments;
  std::vector<typename S::value_type> values;
  std::size_t nodes_visited = 0;
};

namespace detail {

template <CSemiring S>
Optimum<S> optimum_exhaustive(const SoftCsp<S>& p) {
  using V = typename S::value_type;
  const S& s = p.semiring();
  Optimum<S> best;
  const std::size_t nvars = p.variables().size();
  Assignment a(nvars, 0);
  while (true) {
    ++best.nodes_visited;
    p.fill_derived(a);
    V value = p.evaluate(a);
    bool dominated = false;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < best.values.size(); ++i) {
      if (less(s, value, best.values[i])) dominated = true;
      if (!less(s, best.values[i], value)) keep.push_back(i);
    }
    if (!dominated) {
      Optimum<S> next;
      next.nodes_visited = best.nodes_visited;
      for (std::size_t i : keep) {
        next.assignments.push_back(std::move(best.assignments[i]));
        next.values.push_back(std::move(best.values[i]));
      }
      next.assignments.push_back(a);
      next.values.push_back(std::move(value));
      best = std::move(next);
    }
    std::size_t i = nvars;
    while (i > 0 && (p.variables()[i - 1].derived() ||
                     a[i - 1] + 1 == p.variables()[i - 1].domain_size()))
      a[--i] = 0;
    if (i == 0) break;
    ++a[i - 1];
  }
  return best;
}

template <CSemiring S>
class BranchAndBound {
 public:
  using V = typename S::value_type;

  explicit BranchAndBound(const SoftCsp<S>& p)
      : p_(p), s_(p.semiring()), by_last_(p.variables().size()) {
    for (std::size_t i = 0; i < p.constraints().size(); ++i) {
      const auto& scope = p.constraints()[i].scope;
      if (scope.empty())
        constant_.push_back(i);
      else
        by_last_[*std::max_element(scope.begin(), scope.end())].push_back(i);
    }
  }

  Optimum<S> run() {
    V bound = s_.one();
    for (std::size_t i : constant_)
      bound = s_.combine(bound, p_.constraints()[i].table.front());
    a_.assign(p_.variables().size(), 0);
    search(0, bound);
    return std::move(result_);
  }

 private:
  // Combination is monotone and `one` is the top, so the value of a
  // partial assignment bounds every completion from above.
  bool prunable(const V& bound) const {
    return incumbent_ && less(s_, bound, *incumbent_);
  }

  void search(std::size_t depth, const V& bound) {
    ++result_.nodes_visited;
    if (prunable(bound)) return;
    if (depth == a_.size()) {
      if (!incumbent_ || less(s_, *incumbent_, bound)) {
        incumbent_ = bound;
        result_.assignments.clear();
        result_.values.clear();
      }
      result_.assignments.push_back(a_);
      result_.values.push_back(bound);
      return;
    }
    const Variable& var = p_.variables()[depth];
    std::size_t first = 0, last = var.domain_size();
    if (var.derived()) {
      // Components precede the derived variable, so its value is fixed here.
      for (std::size_t c : var.components)
        first = first * p_.variables()[c].domain_size() + a_[c];
      last = first + 1;
    }
    for (std::size_t v = first; v < last; ++v) {
      a_[depth] = v;
      V next = bound;
      for (std::size_t ci : by_last_[depth]) {
        const auto& c = p_.constraints()[ci];
        next = s_.combine(next, c.table[p_.tuple_index(c, a_)]);
      }
      search(depth + 1, next);
    }
    a_[depth] = 0;
  }

  const SoftCsp<S>& p_;
  const S& s_;
  std::vector<std::vector<std::size_t>> by_last_;
  std::vector<std::size_t> constant_;
  Assignment a_;
  std::optional<V> incumbent_;
  Optimum<S> result_;
};

}  // namespace detail

// All leq-maximal complete assignments. Throws SizeError when the search
// space exceeds the cap and branch and bound is off.
template <CSemiring S>
Optimum<S> optimum(const SoftCsp<S>& p, OptimumOptions options = {}) {
  if (p.variables().empty())
    throw PreconditionError("problem has no variables");
  if (options.branch_and_bound) {
    if constexpr (!S::kTotallyOrdered)
      throw PreconditionError(
          "branch and bound needs a totally ordered carrier");
    return detail::BranchAndBound<S>(p).run();
  }
  const std::size_t space = p.search_space();
  if (space > options.max_assignments)
    throw SizeError("search space of " +
                    (space == std::numeric_limits<std::size_t>::max()
                         ? std::string("more than SIZE_MAX")
                         : std::to_string(space)) +
                    " assignments exceeds the cap of " +
                    std::to_string(options.max_assignments));
  return detail::optimum_exhaustive(p);
}

}  // namespace prefcomp

#endif  // PREFCOMP_SCSP_HPP
