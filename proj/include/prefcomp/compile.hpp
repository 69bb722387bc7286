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

#ifndef PREFCOMP_COMPILE_HPP
#define PREFCOMP_COMPILE_HPP

// Compilation of acyclic CP-nets into soft constraint problems.
//
// The SC-net has a variable node V_X per feature and an aggregate node
// V_Pa(X) for every feature with two or more parents, whose domain is the
// product of the parent domains. Hard edges tie each aggregate to its
// parents; every feature owns one soft edge (source-less, from its single
// parent, or from its aggregate). Node indices double as variable indices
// in the compiled problem: feature nodes come first, in feature order.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "prefcomp/model.hpp"
#include "prefcomp/oracle.hpp"
#include "prefcomp/scsp.hpp"
#include "prefcomp/semiring.hpp"

namespace prefcomp {

enum class ScNodeKind { kFeature, kAggregate };

struct ScNode {
  ScNodeKind kind = ScNodeKind::kFeature;
  // The feature itself, or the child whose parent set is aggregated.
  FeatureId feature = 0;
  // {feature} for a feature node, Pa(feature) for an aggregate.
  std::vector<FeatureId> features;
  std::size_t domain_size = 0;
  std::string name;
};

struct HardEdge {
  std::size_t aggregate = 0;
  std::size_t parent = 0;
};

struct SoftEdge {
  FeatureId feature = 0;
  std::optional<std::size_t> source;
  std::size_t target = 0;
  BigInt weight = 1;
  // Size of the penalty-level set P_c, i.e. |D(X)|.
  std::size_t levels = 0;
  // Index of this edge's element in SLO sequences.
  std::size_t slo_position = 0;
};

struct ScNet {
  std::vector<ScNode> nodes;
  std::vector<HardEdge> hard_edges;
  std::vector<SoftEdge> soft_edges;  // indexed by feature
  DependenceGraph graph;
  std::vector<FeatureId> order;  // topological, ties by declaration
  // Size bounds: nodes <= 2n, edges <= e + n.
  std::size_t feature_count() const { return soft_edges.size(); }
  std::size_t edge_count() const {
    return hard_edges.size() + soft_edges.size();
  }
};

// Throws PreconditionError unless `set` is a proper acyclic CP-net.
ScNet build_scnet(const StatementSet& set);

// Weights in reverse topological order: 1 for a childless feature, else the
// sum over children Y of w(V_Y) * |D(V_Y)|.
ScNet compute_weights(ScNet net);

// Penalty level of `value` under the ranking: its 0-based rank, or one past
// the worst listed rank when unlisted.
std::size_t penalty_level(const PreferenceStatement& statement, ValueId value);

template <CSemiring S>
struct CompiledNet {
  ScNet net;
  SoftCsp<S> problem;

  Assignment assignment_for(const Outcome& outcome) const {
    Assignment a(problem.variables().size(), 0);
    for (FeatureId f = 0; f < outcome.size(); ++f) a[f] = outcome[f];
    problem.fill_derived(a);
    return a;
  }
  typename S::value_type evaluate(const Outcome& outcome) const {
    if (outcome.size() != net.feature_count())
      throw PreconditionError("outcome does not cover every feature");
    return problem.evaluate(assignment_for(outcome));
  }
  Comparison compare(const Outcome& a, const Outcome& b) const {
    return compare_values(problem.semiring(), evaluate(a), evaluate(b));
  }
};

// Soft tuple (u, x) costs w(V_X) * level(x | u); hard edges cost 0 when
// the aggregate agrees with the parent and +infinity otherwise.
CompiledNet<WeightedSemiring> compile_minplus(const StatementSet& set);

// n = number of soft edges, MAX = largest domain - 1, weights 1. Soft tuple
// (u, x) on the edge at position j is all-MAX except MAX - level(x | u) at
// j; hard edges map agreement to all-MAX and disagreement to all-zero.
CompiledNet<SloSemiring> compile_slo(const StatementSet& set,
                                     SloCombine mode = SloCombine::kLexMin);

enum class CpRelation { kBetter, kWorse, kIncomparable, kEqual };

std::string_view to_string(CpRelation r);
std::string_view symbol(CpRelation r);
std::string_view symbol(Comparison c);

struct PairClassification {
  CpRelation cpnet = CpRelation::kEqual;
  Comparison minplus = Comparison::kEqual;
  Comparison slo = Comparison::kEqual;
};

struct OrderingTable {
  // counts[cp relation][approximation: 0 '>', 1 '<', 2 '=']
  std::array<std::array<std::size_t, 3>, 4> counts{};

  std::size_t at(CpRelation r, Comparison c) const;
  void add(CpRelation r, Comparison c);
  std::size_t total() const;
};

struct PairRecord {
  Outcome lhs;
  Outcome rhs;
  CpRelation cpnet = CpRelation::kEqual;
  Comparison approximation = Comparison::kEqual;
};

struct OrderingReport {
  std::size_t pairs = 0;  // ordered pairs of distinct outcomes
  OrderingTable minplus;
  OrderingTable slo;
  // Cells outside the min+ containments: (>,<) (>,=) (<,>) (<,=).
  std::vector<PairRecord> minplus_forbidden;
  // Cells outside the weak SLO containments: (>,<) (<,>).
  std::vector<PairRecord> slo_forbidden;
  // Distinct outcomes the SLO value cannot separate.
  std::vector<PairRecord> slo_ties;

  bool ok() const { return minplus_forbidden.empty() && slo_forbidden.empty(); }
};

struct FlipRecord {
  Outcome better;
  Outcome worse;
  FeatureId feature = 0;
};

struct PreservationReport {
  std::size_t strict_pairs = 0;
  std::size_t flips = 0;
  std::vector<PairRecord> minplus_violations;
  std::vector<FlipRecord> cp_condition_violations;
  std::vector<std::string> weight_violations;
  std::vector<PairRecord> slo_weak_violations;
  std::vector<FlipRecord> slo_flip_violations;
  // Strict pairs the SLO value maps to equality; informational.
  std::vector<PairRecord> slo_strict_ties;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t node_bound = 0;
  std::size_t edge_bound = 0;

  bool size_bounds_ok() const {
    return nodes <= node_bound && edges <= edge_bound;
  }
  bool ok() const {
    return minplus_violations.empty() && cp_condition_violations.empty() &&
           weight_violations.empty() && slo_weak_violations.empty() &&
           slo_flip_violations.empty() && size_bounds_ok();
  }
};

struct AnalyzerOptions {
  OracleOptions oracle;
  SloCombine slo_combine = SloCombine::kLexMin;
  // Outcome cap for all-pairs work (tabulate, check_preservation).
  std::size_t max_pair_outcomes = 4096;
};

// Both compilations plus the exact flip graph of one CP-net.
class ApproximationAnalyzer {
 public:
  explicit ApproximationAnalyzer(const StatementSet& set,
                                 AnalyzerOptions options = {});

  const StatementSet& statements() const { return set_; }
  const FlipGraph& graph() const { return graph_; }
  const CompiledNet<WeightedSemiring>& minplus() const { return minplus_; }
  const CompiledNet<SloSemiring>& slo() const { return slo_; }

  PairClassification classify(const Outcome& a, const Outcome& b) const;
  OrderingReport tabulate() const;
  PreservationReport check_preservation() const;

 private:
  std::vector<std::vector<bool>> reachability() const;

  StatementSet set_;
  AnalyzerOptions options_;
  FlipGraph graph_;
  CompiledNet<WeightedSemiring> minplus_;
  CompiledNet<SloSemiring> slo_;
};

PairClassification classify_pair(const StatementSet& set, const Outcome& a,
                                 const Outcome& b, AnalyzerOptions options = {});
OrderingReport tabulate(const StatementSet& set, AnalyzerOptions options = {});

}  // namespace prefcomp

#endif  // PREFCOMP_COMPILE_HPP
