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

#include "prefcomp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "prefcomp/error.hpp"

namespace prefcomp {

std::size_t checked_outcome_count(const StatementSet& set, std::size_t cap) {
  std::size_t product = 1;
  std::string text;
  bool overflow = false;
  for (const Feature& f : set.features()) {
    if (!text.empty()) text += "*";
    text += std::to_string(f.domain_size());
    if (!overflow && product > std::numeric_limits<std::size_t>::max() /
                                   f.domain_size())
      overflow = true;
    else if (!overflow)
      product *= f.domain_size();
  }
  if (overflow || product > cap)
    throw SizeError("outcome space " + (text.empty() ? "1" : text) + " = " +
                    (overflow ? std::string("overflow") :
                                std::to_string(product)) +
                    " outcomes exceeds the cap of " + std::to_string(cap));
  return product;
}

OutcomeSpace::OutcomeSpace(const StatementSet& set) {
  const std::size_t n = set.feature_count();
  radix_.resize(n);
  stride_.resize(n);
  for (std::size_t i = n; i-- > 0;) {
    radix_[i] = set.feature(i).domain_size();
    stride_[i] = size_;
    size_ *= radix_[i];
  }
}

std::size_t OutcomeSpace::index(const Outcome& outcome) const {
  if (outcome.size() != radix_.size())
    throw ModelError("outcome has the wrong number of features");
  std::size_t idx = 0;
  for (std::size_t f = 0; f < radix_.size(); ++f) {
    if (outcome[f] >= radix_[f]) throw ModelError("outcome value out of range");
    idx += outcome[f] * stride_[f];
  }
  return idx;
}

Outcome OutcomeSpace::outcome(std::size_t index) const {
  Outcome out{std::vector<ValueId>(radix_.size())};
  for (std::size_t f = 0; f < radix_.size(); ++f) out.values[f] = value(index, f);
  return out;
}

FlipGraph FlipGraph::build(const StatementSet& set, OracleOptions options) {
  const std::size_t cap =
      std::min<std::size_t>(options.max_outcomes,
                            std::numeric_limits<Node>::max());
  checked_outcome_count(set, cap);
  FlipGraph g{OutcomeSpace(set)};
  const std::size_t n = g.space_.size();
  const std::size_t features = set.feature_count();

  std::vector<std::vector<std::size_t>> on(features);
  for (FeatureId x = 0; x < features; ++x) on[x] = set.statements_on(x);

  g.offsets_.assign(n + 1, 0);
  g.in_degree_.assign(n, 0);
  std::vector<Node> local;
  for (std::size_t node = 0; node < n; ++node) {
    const Outcome alpha = g.space_.outcome(node);
    local.clear();
    for (FeatureId x = 0; x < features; ++x) {
      for (std::size_t si : on[x]) {
        const PreferenceStatement& s = set.statements()[si];
        if (!s.condition.holds(alpha.values)) continue;
        auto pos = s.rank_of(alpha[x]);
        if (!pos) continue;
        for (std::size_t j = *pos + 1; j < s.ranking.size(); ++j)
          local.push_back(
              static_cast<Node>(g.space_.with_value(node, x, s.ranking[j])));
      }
    }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    g.targets_.insert(g.targets_.end(), local.begin(), local.end());
    g.offsets_[node + 1] = g.targets_.size();
    for (Node t : local) ++g.in_degree_[t];
  }
  return g;
}

std::vector<bool> FlipGraph::reachable_from(Node from) const {
  std::vector<bool> seen(node_count(), false);
  std::vector<Node> stack(successors(from).begin(), successors(from).end());
  for (Node s : stack) seen[s] = true;
  while (!stack.empty()) {
    Node cur = stack.back();
    stack.pop_back();
    for (Node next : successors(cur)) {
      if (!seen[next]) {
        seen[next] = true;
        stack.push_back(next);
      }
    }
  }
  return seen;
}

bool dominates(const FlipGraph& graph, const Outcome& alpha,
               const Outcome& beta) {
  const auto a = graph.node(alpha);
  const auto b = graph.node(beta);
  if (a == b) return false;
  return graph.reachable_from(a)[b];
}

bool dominates(const StatementSet& set, const Outcome& alpha,
               const Outcome& beta, OracleOptions options) {
  return dominates(FlipGraph::build(set, options), alpha, beta);
}

std::vector<Outcome> undominated_set(const FlipGraph& graph) {
  std::vector<Outcome> out;
  for (std::size_t n = 0; n < graph.node_count(); ++n)
    if (graph.in_degree(static_cast<FlipGraph::Node>(n)) == 0)
      out.push_back(graph.outcome(static_cast<FlipGraph::Node>(n)));
  return out;
}

std::vector<Outcome> undominated_set(const StatementSet& set,
                                     OracleOptions options) {
  return undominated_set(FlipGraph::build(set, options));
}

BruteSatResult is_satisfiable_bruteforce(const FlipGraph& graph) {
  for (std::size_t n = 0; n < graph.node_count(); ++n)
    if (graph.in_degree(static_cast<FlipGraph::Node>(n)) == 0)
      return {true, graph.outcome(static_cast<FlipGraph::Node>(n))};
  return {};
}

BruteSatResult is_satisfiable_bruteforce(const StatementSet& set,
                                         OracleOptions options) {
  return is_satisfiable_bruteforce(FlipGraph::build(set, options));
}

AsymmetryResult is_asymmetric(const FlipGraph& graph) {
  using Node = FlipGraph::Node;
  enum Color : unsigned char { kWhite, kGray, kBlack };
  const std::size_t n = graph.node_count();
  std::vector<Color> color(n, kWhite);
  std::vector<Node> parent(n, 0);
  // (node, next successor offset)
  std::vector<std::pair<Node, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != kWhite) continue;
    stack.push_back({static_cast<Node>(root), 0});
    color[root] = kGray;
    while (!stack.empty()) {
      auto& [cur, next] = stack.back();
      const auto succ = graph.successors(cur);
      if (next == succ.size()) {
        color[cur] = kBlack;
        stack.pop_back();
        continue;
      }
      const Node to = succ[next++];
      if (color[to] == kGray) {
        AsymmetryResult r;
        r.asymmetric = false;
        std::vector<Node> nodes{cur};
        for (Node v = cur; v != to;) {
          v = parent[v];
          nodes.push_back(v);
        }
        std::reverse(nodes.begin(), nodes.end());
        for (Node v : nodes) r.cycle.push_back(graph.outcome(v));
        return r;
      }
      if (color[to] == kWhite) {
        color[to] = kGray;
        parent[to] = cur;
        stack.push_back({to, 0});
      }
    }
  }
  return {};
}

AsymmetryResult is_asymmetric(const StatementSet& set, OracleOptions options) {
  return is_asymmetric(FlipGraph::build(set, options));
}

}  // namespace prefcomp
