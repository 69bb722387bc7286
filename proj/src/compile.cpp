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

#include "prefcomp/compile.hpp"

#include <algorithm>

#include "prefcomp/error.hpp"

namespace prefcomp {

ScNet build_scnet(const StatementSet& set) {
  require_acyclic_cpnet(set);
  ScNet net;
  net.graph = dependence_graph(set);
  net.order = topological_order(net.graph).order;
  const std::size_t n = set.feature_count();
  for (FeatureId x = 0; x < n; ++x)
    net.nodes.push_back({ScNodeKind::kFeature, x, {x},
                         set.feature(x).domain_size(), set.feature(x).name});
  net.soft_edges.resize(n);
  for (FeatureId x = 0; x < n; ++x) {
    const auto& parents = net.graph.parents[x];
    SoftEdge& edge = net.soft_edges[x];
    edge.feature = x;
    edge.target = x;
    edge.levels = set.feature(x).domain_size();
    if (parents.size() == 1) {
      edge.source = parents.front();
    } else if (parents.size() >= 2) {
      ScNode agg{ScNodeKind::kAggregate, x, parents, 1, "Pa(" + set.feature(x).name + ")"};
      for (FeatureId p : parents) agg.domain_size *= set.feature(p).domain_size();
      net.nodes.push_back(std::move(agg));
      const std::size_t agg_index = net.nodes.size() - 1;
      edge.source = agg_index;
      for (FeatureId p : parents) net.hard_edges.push_back({agg_index, p});
    }
  }
  for (std::size_t pos = 0; pos < net.order.size(); ++pos)
    net.soft_edges[net.order[pos]].slo_position = pos;
  return net;
}

ScNet compute_weights(ScNet net) {
  for (auto it = net.order.rbegin(); it != net.order.rend(); ++it) {
    const FeatureId x = *it;
    const auto& children = net.graph.children[x];
    if (children.empty()) {
      net.soft_edges[x].weight = 1;
      continue;
    }
    BigInt w = 0;
    for (FeatureId y : children)
      w += net.soft_edges[y].weight * net.nodes[y].domain_size;
    net.soft_edges[x].weight = std::move(w);
  }
  return net;
}

std::size_t penalty_level(const PreferenceStatement& statement, ValueId value) {
  return statement.rank_of(value).value_or(statement.ranking.size());
}

namespace {

// Statement index and table layout shared by both compilations.
struct SoftRows {
  std::vector<std::size_t> scope;
  std::size_t contexts = 1;
};

SoftRows soft_rows(const ScNet& net, FeatureId x) {
  const SoftEdge& e = net.soft_edges[x];
  SoftRows rows;
  if (e.source) {
    rows.scope = {*e.source, x};
    rows.contexts = net.nodes[*e.source].domain_size;
  } else {
    rows.scope = {x};
  }
  return rows;
}

// Value of parent `parent` inside aggregate value `agg_value` of `node`.
std::size_t component_value(const ScNet& net, const ScNode& node,
                            std::size_t agg_value, FeatureId parent) {
  for (std::size_t i = node.features.size(); i-- > 0;) {
    const std::size_t d = net.nodes[node.features[i]].domain_size;
    if (node.features[i] == parent) return agg_value % d;
    agg_value /= d;
  }
  throw PreconditionError("aggregate does not contain the parent");
}

template <CSemiring S, class SoftValue>
SoftCsp<S> assemble(const StatementSet& set, const ScNet& net, S semiring,
                    SoftValue soft_value, bool annotate_weights) {
  SoftCsp<S> p(std::move(semiring));
  for (const ScNode& node : net.nodes) {
    Variable v;
    v.name = node.name;
    if (node.kind == ScNodeKind::kFeature) {
      v.values = set.feature(node.feature).values;
    } else {
      v.components = node.features;
      for (std::size_t k = 0; k < node.domain_size; ++k) {
        std::string label;
        std::size_t rest = k;
        std::vector<std::string> parts(node.features.size());
        for (std::size_t i = node.features.size(); i-- > 0;) {
          const Feature& f = set.feature(node.features[i]);
          parts[i] = f.values[rest % f.domain_size()];
          rest /= f.domain_size();
        }
        for (std::size_t i = 0; i < parts.size(); ++i)
          label += (i ? "," : "") + parts[i];
        v.values.push_back(std::move(label));
      }
    }
    p.add_variable(std::move(v));
  }

  const auto cpt = cpt_index(set, net.graph);
  for (FeatureId x : net.order) {
    const SoftRows rows = soft_rows(net, x);
    SoftConstraint<typename S::value_type> c;
    c.scope = rows.scope;
    c.label = set.feature(x).name;
    if (annotate_weights) c.weight = net.soft_edges[x].weight.str();
    const std::size_t domain = set.feature(x).domain_size();
    for (std::size_t u = 0; u < rows.contexts; ++u) {
      const PreferenceStatement& s = set.statements()[cpt[x][u]];
      for (ValueId v = 0; v < domain; ++v)
        c.table.push_back(soft_value(net.soft_edges[x], penalty_level(s, v)));
    }
    p.add_constraint(std::move(c));
  }
  for (const HardEdge& h : net.hard_edges) {
    SoftConstraint<typename S::value_type> c;
    c.kind = ConstraintKind::kHard;
    c.scope = {h.aggregate, h.parent};
    c.label = net.nodes[h.aggregate].name + "~" + net.nodes[h.parent].name;
    const ScNode& agg = net.nodes[h.aggregate];
    for (std::size_t a = 0; a < agg.domain_size; ++a)
      for (std::size_t v = 0; v < net.nodes[h.parent].domain_size; ++v)
        c.table.push_back(component_value(net, agg, a, h.parent) == v
                              ? p.semiring().one()
                              : p.semiring().zero());
    p.add_constraint(std::move(c));
  }
  return p;
}

}  // namespace

CompiledNet<WeightedSemiring> compile_minplus(const StatementSet& set) {
  ScNet net = compute_weights(build_scnet(set));
  auto problem = assemble(
      set, net, WeightedSemiring{},
      [](const SoftEdge& e, std::size_t level) {
        return Penalty(e.weight * level);
      },
      true);
  return {std::move(net), std::move(problem)};
}

CompiledNet<SloSemiring> compile_slo(const StatementSet& set, SloCombine mode) {
  ScNet net = build_scnet(set);
  for (SoftEdge& e : net.soft_edges) e.weight = 1;
  const int max = static_cast<int>(set.max_domain_size()) - 1;
  SloSemiring semiring(net.soft_edges.size(), max, mode);
  auto problem = assemble(
      set, net, semiring,
      [&](const SoftEdge& e, std::size_t level) {
        return semiring.one_except(e.slo_position,
                                   max - static_cast<int>(level));
      },
      false);
  return {std::move(net), std::move(problem)};
}

std::string_view to_string(CpRelation r) {
  switch (r) {
    case CpRelation::kBetter: return "better";
    case CpRelation::kWorse: return "worse";
    case CpRelation::kIncomparable: return "incomparable";
    case CpRelation::kEqual: return "equal";
  }
  return "?";
}

std::string_view symbol(CpRelation r) {
  switch (r) {
    case CpRelation::kBetter: return ">";
    case CpRelation::kWorse: return "<";
    case CpRelation::kIncomparable: return "~";
    case CpRelation::kEqual: return "=";
  }
  return "?";
}

std::string_view symbol(Comparison c) {
  switch (c) {
    case Comparison::kFirstBetter: return ">";
    case Comparison::kSecondBetter: return "<";
    case Comparison::kEqual: return "=";
    case Comparison::kIncomparable: return "~";
  }
  return "?";
}

namespace {

std::size_t column(Comparison c) {
  switch (c) {
    case Comparison::kFirstBetter: return 0;
    case Comparison::kSecondBetter: return 1;
    case Comparison::kEqual: return 2;
    case Comparison::kIncomparable: break;
  }
  throw PreconditionError("approximations are total orders");
}

}  // namespace

std::size_t OrderingTable::at(CpRelation r, Comparison c) const {
  return counts[static_cast<std::size_t>(r)][column(c)];
}

void OrderingTable::add(CpRelation r, Comparison c) {
  ++counts[static_cast<std::size_t>(r)][column(c)];
}

std::size_t OrderingTable::total() const {
  std::size_t t = 0;
  for (const auto& row : counts)
    for (std::size_t c : row) t += c;
  return t;
}

ApproximationAnalyzer::ApproximationAnalyzer(const StatementSet& set,
                                             AnalyzerOptions options)
    : set_(set),
      options_(options),
      graph_(FlipGraph::build(set, options.oracle)),
      minplus_(compile_minplus(set)),
      slo_(compile_slo(set, options.slo_combine)) {}

PairClassification ApproximationAnalyzer::classify(const Outcome& a,
                                                   const Outcome& b) const {
  set_.check_outcome(a);
  set_.check_outcome(b);
  PairClassification c;
  if (a == b)
    c.cpnet = CpRelation::kEqual;
  else if (dominates(graph_, a, b))
    c.cpnet = CpRelation::kBetter;
  else if (dominates(graph_, b, a))
    c.cpnet = CpRelation::kWorse;
  else
    c.cpnet = CpRelation::kIncomparable;
  c.minplus = minplus_.compare(a, b);
  c.slo = slo_.compare(a, b);
  return c;
}

std::vector<std::vector<bool>> ApproximationAnalyzer::reachability() const {
  if (graph_.node_count() > options_.max_pair_outcomes)
    throw SizeError("all-pairs analysis over " +
                    std::to_string(graph_.node_count()) +
                    " outcomes exceeds the cap of " +
                    std::to_string(options_.max_pair_outcomes));
  std::vector<std::vector<bool>> reach;
  reach.reserve(graph_.node_count());
  for (std::size_t n = 0; n < graph_.node_count(); ++n)
    reach.push_back(graph_.reachable_from(static_cast<FlipGraph::Node>(n)));
  return reach;
}

OrderingReport ApproximationAnalyzer::tabulate() const {
  const auto reach = reachability();
  const std::size_t n = graph_.node_count();
  std::vector<Penalty> penalty;
  std::vector<SloValue> slo_value;
  for (std::size_t i = 0; i < n; ++i) {
    const Outcome o = graph_.outcome(static_cast<FlipGraph::Node>(i));
    penalty.push_back(minplus_.evaluate(o));
    slo_value.push_back(slo_.evaluate(o));
  }
  const auto& ws = minplus_.problem.semiring();
  const auto& ss = slo_.problem.semiring();
  OrderingReport r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      ++r.pairs;
      const CpRelation cp = reach[i][j]   ? CpRelation::kBetter
                            : reach[j][i] ? CpRelation::kWorse
                                          : CpRelation::kIncomparable;
      const Comparison m = compare_values(ws, penalty[i], penalty[j]);
      const Comparison s = compare_values(ss, slo_value[i], slo_value[j]);
      r.minplus.add(cp, m);
      r.slo.add(cp, s);
      auto record = [&](Comparison approx) {
        return PairRecord{graph_.outcome(static_cast<FlipGraph::Node>(i)),
                          graph_.outcome(static_cast<FlipGraph::Node>(j)), cp,
                          approx};
      };
      const bool strict_better = cp == CpRelation::kBetter;
      const bool strict_worse = cp == CpRelation::kWorse;
      if ((strict_better && m != Comparison::kFirstBetter) ||
          (strict_worse && m != Comparison::kSecondBetter))
        r.minplus_forbidden.push_back(record(m));
      if ((strict_better && s == Comparison::kSecondBetter) ||
          (strict_worse && s == Comparison::kFirstBetter))
        r.slo_forbidden.push_back(record(s));
      if (s == Comparison::kEqual) r.slo_ties.push_back(record(s));
    }
  }
  return r;
}

PreservationReport ApproximationAnalyzer::check_preservation() const {
  PreservationReport r;
  const ScNet& net = minplus_.net;
  const std::size_t features = set_.feature_count();
  r.nodes = net.nodes.size();
  r.edges = net.edge_count();
  r.node_bound = 2 * features;
  r.edge_bound = net.graph.edge_count() + features;

  for (FeatureId x = 0; x < features; ++x) {
    BigInt children_max = 0;
    for (FeatureId b : net.graph.children[x])
      children_max += net.soft_edges[b].weight *
                      (net.nodes[b].domain_size - 1);
    if (!(net.soft_edges[x].weight > children_max))
      r.weight_violations.push_back(
          set_.feature(x).name + ": weight " + net.soft_edges[x].weight.str() +
          " does not exceed the children's maximum penalty " +
          children_max.str());
  }

  const std::size_t n = graph_.node_count();
  std::vector<Penalty> penalty;
  std::vector<SloValue> slo_value;
  for (std::size_t i = 0; i < n; ++i) {
    const Outcome o = graph_.outcome(static_cast<FlipGraph::Node>(i));
    penalty.push_back(minplus_.evaluate(o));
    slo_value.push_back(slo_.evaluate(o));
  }
  const auto& space = graph_.space();
  for (std::size_t i = 0; i < n; ++i) {
    for (FlipGraph::Node j : graph_.successors(static_cast<FlipGraph::Node>(i))) {
      ++r.flips;
      FeatureId changed = 0;
      for (FeatureId f = 0; f < features; ++f)
        if (space.value(i, f) != space.value(j, f)) changed = f;
      const Outcome better = graph_.outcome(static_cast<FlipGraph::Node>(i));
      const Outcome worse = graph_.outcome(j);
      if (!(penalty[i] < penalty[j]))
        r.cp_condition_violations.push_back({better, worse, changed});
      if (slo_value[i] < slo_value[j])
        r.slo_flip_violations.push_back({better, worse, changed});
    }
  }

  const auto reach = reachability();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !reach[i][j]) continue;
      ++r.strict_pairs;
      auto record = [&](Comparison c) {
        return PairRecord{graph_.outcome(static_cast<FlipGraph::Node>(i)),
                          graph_.outcome(static_cast<FlipGraph::Node>(j)),
                          CpRelation::kBetter, c};
      };
      if (!(penalty[i] < penalty[j]))
        r.minplus_violations.push_back(record(
            compare_values(minplus_.problem.semiring(), penalty[i], penalty[j])));
      if (slo_value[i] < slo_value[j])
        r.slo_weak_violations.push_back(record(Comparison::kSecondBetter));
      else if (slo_value[i] == slo_value[j])
        r.slo_strict_ties.push_back(record(Comparison::kEqual));
    }
  }
  return r;
}

PairClassification classify_pair(const StatementSet& set, const Outcome& a,
                                 const Outcome& b, AnalyzerOptions options) {
  return ApproximationAnalyzer(set, options).classify(a, b);
}

OrderingReport tabulate(const StatementSet& set, AnalyzerOptions options) {
  return ApproximationAnalyzer(set, options).tabulate();
}

}  // namespace prefcomp
