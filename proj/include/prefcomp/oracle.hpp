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

#ifndef PREFCOMP_ORACLE_HPP
#define PREFCOMP_ORACLE_HPP

// Exact ceteris paribus semantics by enumeration. Every outcome is a node;
// an edge alpha -> beta is a worsening flip: beta differs from alpha on one
// feature X, and a statement on X whose condition holds in the shared
// context ranks alpha(X) strictly above beta(X). Dominance is reachability.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "prefcomp/model.hpp"

namespace prefcomp {

struct OracleOptions {
  std::size_t max_outcomes = std::size_t{1} << 20;
};

// Product of domain sizes; throws SizeError naming the product (or its
// overflow) when it exceeds `cap`.
std::size_t checked_outcome_count(const StatementSet& set, std::size_t cap);

// Mixed-radix numbering of outcomes; the first feature is most significant.
class OutcomeSpace {
 public:
  explicit OutcomeSpace(const StatementSet& set);

  std::size_t size() const { return size_; }
  std::size_t feature_count() const { return radix_.size(); }
  std::size_t index(const Outcome& outcome) const;
  Outcome outcome(std::size_t index) const;
  ValueId value(std::size_t index, FeatureId f) const {
    return (index / stride_[f]) % radix_[f];
  }
  std::size_t with_value(std::size_t index, FeatureId f, ValueId v) const {
    return index - value(index, f) * stride_[f] + v * stride_[f];
  }

 private:
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

class FlipGraph {
 public:
  using Node = std::uint32_t;

  static FlipGraph build(const StatementSet& set, OracleOptions options = {});

  const OutcomeSpace& space() const { return space_; }
  std::size_t node_count() const { return space_.size(); }
  std::size_t edge_count() const { return targets_.size(); }

  std::span<const Node> successors(Node n) const {
    return {targets_.data() + offsets_[n], offsets_[n + 1] - offsets_[n]};
  }
  std::size_t in_degree(Node n) const { return in_degree_[n]; }

  Node node(const Outcome& o) const {
    return static_cast<Node>(space_.index(o));
  }
  Outcome outcome(Node n) const { return space_.outcome(n); }

  // Nodes reachable from `from` by one or more edges.
  std::vector<bool> reachable_from(Node from) const;

 private:
  explicit FlipGraph(OutcomeSpace space) : space_(std::move(space)) {}

  OutcomeSpace space_;
  std::vector<std::size_t> offsets_;
  std::vector<Node> targets_;
  std::vector<std::size_t> in_degree_;
};

// alpha is preferred to beta: a worsening-flip path leads from alpha to
// beta. Always false when alpha == beta.
bool dominates(const FlipGraph& graph, const Outcome& alpha,
               const Outcome& beta);
bool dominates(const StatementSet& set, const Outcome& alpha,
               const Outcome& beta, OracleOptions options = {});

// Outcomes with no incoming edge. An outcome is dominated iff some path
// ends at it, iff it has an incoming edge.
std::vector<Outcome> undominated_set(const FlipGraph& graph);
std::vector<Outcome> undominated_set(const StatementSet& set,
                                     OracleOptions options = {});

struct BruteSatResult {
  bool satisfiable = false;
  std::optional<Outcome> witness;
};

BruteSatResult is_satisfiable_bruteforce(const FlipGraph& graph);
BruteSatResult is_satisfiable_bruteforce(const StatementSet& set,
                                         OracleOptions options = {});

struct AsymmetryResult {
  bool asymmetric = true;
  // One directed cycle, in edge order; empty when asymmetric.
  std::vector<Outcome> cycle;
};

AsymmetryResult is_asymmetric(const FlipGraph& graph);
AsymmetryResult is_asymmetric(const StatementSet& set,
                              OracleOptions options = {});

}  // namespace prefcomp

#endif  // PREFCOMP_ORACLE_HPP
