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

#ifndef PREFCOMP_MODEL_HPP
#define PREFCOMP_MODEL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prefcomp {

using FeatureId = std::size_t;
using ValueId = std::size_t;

struct Feature {
  std::string name;
  std::vector<std::string> values;

  std::size_t domain_size() const { return values.size(); }
  std::optional<ValueId> find_value(std::string_view value) const;

  friend bool operator==(const Feature&, const Feature&) = default;
};

struct Literal {
  FeatureId feature;
  ValueId value;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Conjunction of feature = value equalities, kept sorted by feature.
class Condition {
 public:
  Condition() = default;
  // Throws ModelError if a feature appears twice.
  explicit Condition(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  bool empty() const { return literals_.empty(); }
  std::size_t size() const { return literals_.size(); }

  bool mentions(FeatureId feature) const;
  // `values` is indexed by feature; features not in the condition are
  // ignored.
  bool holds(std::span<const ValueId> values) const;
  // Some outcome satisfies both conditions.
  bool compatible(const Condition& other) const;

  friend bool operator==(const Condition&, const Condition&) = default;

 private:
  std::vector<Literal> literals_;
};

// condition : ranking[0] > ranking[1] > ... on feature `target`.
struct PreferenceStatement {
  FeatureId target = 0;
  Condition condition;
  std::vector<ValueId> ranking;

  // Position of `value` in the ranking, if listed.
  std::optional<std::size_t> rank_of(ValueId value) const;

  friend bool operator==(const PreferenceStatement&,
                         const PreferenceStatement&) = default;
};

struct Outcome {
  std::vector<ValueId> values;

  ValueId operator[](FeatureId f) const { return values[f]; }
  std::size_t size() const { return values.size(); }

  friend auto operator<=>(const Outcome&, const Outcome&) = default;
};

class StatementSet {
 public:
  // Throws ModelError on a duplicate name, duplicate value, or fewer than
  // two values.
  FeatureId add_feature(std::string name, std::vector<std::string> values);
  // Throws ModelError unless every reference is declared, the condition
  // avoids the target, and the ranking lists at least two distinct values.
  void add_statement(PreferenceStatement statement);

  const std::vector<Feature>& features() const { return features_; }
  const Feature& feature(FeatureId f) const { return features_.at(f); }
  std::size_t feature_count() const { return features_.size(); }
  const std::vector<PreferenceStatement>& statements() const {
    return statements_;
  }
  std::optional<FeatureId> find_feature(std::string_view name) const;

  // Indices of the statements whose target is `f`.
  std::vector<std::size_t> statements_on(FeatureId f) const;
  std::size_t max_domain_size() const;

  // Throws ModelError if `outcome` does not assign every feature a value of
  // its domain.
  void check_outcome(const Outcome& outcome) const;

  friend bool operator==(const StatementSet&, const StatementSet&) = default;

 private:
  std::vector<Feature> features_;
  std::vector<PreferenceStatement> statements_;
};

// Parses `A=a,B=b!,...`; every feature must appear exactly once.
Outcome parse_outcome(const StatementSet& set, std::string_view text);
std::string format_outcome(const StatementSet& set, const Outcome& outcome);
std::string format_condition(const StatementSet& set,
                             const Condition& condition);

struct DependenceGraph {
  // Sorted in-neighbours / out-neighbours per feature.
  std::vector<std::vector<FeatureId>> parents;
  std::vector<std::vector<FeatureId>> children;

  std::size_t node_count() const { return parents.size(); }
  std::size_t edge_count() const;
};

// Edge Y -> X iff some statement on X conditions on Y.
DependenceGraph dependence_graph(const StatementSet& set);

struct TopologicalOrder {
  // Valid when acyclic; otherwise the features that could be ordered.
  std::vector<FeatureId> order;
  // Features along one directed cycle, in edge order; empty when acyclic.
  std::vector<FeatureId> cycle;

  bool acyclic() const { return cycle.empty(); }
};

// Kahn's algorithm; ties are broken by declaration order, so the result is
// deterministic.
TopologicalOrder topological_order(const DependenceGraph& graph);

enum class NetKind { kProperCpNet, kGeneralSet };

struct CpNetValidation {
  NetKind kind = NetKind::kGeneralSet;
  bool acyclic = false;
  std::vector<std::string> diagnostics;

  bool proper() const { return kind == NetKind::kProperCpNet; }
};

// Proper iff, for every feature, the conditions are complete assignments to
// its parent set that are mutually exclusive and jointly exhaustive, and
// each ranking totally orders the domain. Cyclicity is reported separately.
CpNetValidation validate_cpnet(const StatementSet& set);

// Throws PreconditionError unless `set` is a proper, acyclic CP-net.
void require_acyclic_cpnet(const StatementSet& set);

// For each feature X of a proper CP-net, the statement index that applies
// under each parent assignment, keyed by the mixed-radix index of that
// assignment over graph.parents[X] (first parent most significant).
std::vector<std::vector<std::size_t>> cpt_index(const StatementSet& set,
                                                const DependenceGraph& graph);

// The undominated outcome of a proper acyclic CP-net: a forward sweep that
// gives each feature its top value under the already-chosen parents.
Outcome cpnet_optimal(const StatementSet& set);

}  // namespace prefcomp

#endif  // PREFCOMP_MODEL_HPP
