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

#include "prefcomp/model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>

#include "prefcomp/error.hpp"

namespace prefcomp {

std::optional<ValueId> Feature::find_value(std::string_view value) const {
  for (ValueId v = 0; v < values.size(); ++v)
    if (values[v] == value) return v;
  return std::nullopt;
}

Condition::Condition(std::vector<Literal> literals)
    : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  for (std::size_t i = 1; i < literals_.size(); ++i)
    if (literals_[i].feature == literals_[i - 1].feature)
      throw ModelError("condition constrains feature #" +
                       std::to_string(literals_[i].feature) + " twice");
}

bool Condition::mentions(FeatureId feature) const {
  return std::any_of(literals_.begin(), literals_.end(),
                     [&](const Literal& l) { return l.feature == feature; });
}

bool Condition::holds(std::span<const ValueId> values) const {
  return std::all_of(literals_.begin(), literals_.end(), [&](const Literal& l) {
    return values[l.feature] == l.value;
  });
}

bool Condition::compatible(const Condition& other) const {
  for (const Literal& a : literals_)
    for (const Literal& b : other.literals_)
      if (a.feature == b.feature && a.value != b.value) return false;
  return true;
}

std::optional<std::size_t> PreferenceStatement::rank_of(ValueId value) const {
  auto it = std::find(ranking.begin(), ranking.end(), value);
  if (it == ranking.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ranking.begin());
}

FeatureId StatementSet::add_feature(std::string name,
                                    std::vector<std::string> values) {
  if (find_feature(name))
    throw ModelError("duplicate feature declaration '" + name + "'");
  if (values.size() < 2)
    throw ModelError("feature '" + name + "' needs at least two values");
  std::set<std::string> seen;
  for (const auto& v : values)
    if (!seen.insert(v).second)
      throw ModelError("duplicate value '" + v + "' in feature '" + name +
                       "'");
  features_.push_back({std::move(name), std::move(values)});
  return features_.size() - 1;
}

void StatementSet::add_statement(PreferenceStatement statement) {
  if (statement.target >= features_.size())
    throw ModelError("statement targets an undeclared feature");
  const Feature& target = features_[statement.target];
  for (const Literal& l : statement.condition.literals()) {
    if (l.feature >= features_.size())
      throw ModelError("condition references an undeclared feature");
    if (l.value >= features_[l.feature].domain_size())
      throw ModelError("condition value out of range for feature '" +
                       features_[l.feature].name + "'");
    if (l.feature == statement.target)
      throw ModelError("condition of a statement on '" + target.name +
                       "' mentions its own target");
  }
  if (statement.ranking.size() < 2)
    throw ModelError("ranking on '" + target.name +
                     "' needs at least two values");
  std::set<ValueId> seen;
  for (ValueId v : statement.ranking) {
    if (v >= target.domain_size())
      throw ModelError("ranking value out of range for feature '" +
                       target.name + "'");
    if (!seen.insert(v).second)
      throw ModelError("ranking on '" + target.name + "' repeats value '" +
                       target.values[v] + "'");
  }
  statements_.push_back(std::move(statement));
}

std::optional<FeatureId> StatementSet::find_feature(
    std::string_view name) const {
  for (FeatureId f = 0; f < features_.size(); ++f)
    if (features_[f].name == name) return f;
  return std::nullopt;
}

std::vector<std::size_t> StatementSet::statements_on(FeatureId f) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < statements_.size(); ++i)
    if (statements_[i].target == f) out.push_back(i);
  return out;
}

std::size_t StatementSet::max_domain_size() const {
  std::size_t m = 0;
  for (const auto& f : features_) m = std::max(m, f.domain_size());
  return m;
}

void StatementSet::check_outcome(const Outcome& outcome) const {
  if (outcome.size() != features_.size())
    throw ModelError("outcome assigns " + std::to_string(outcome.size()) +
                     " features, expected " +
                     std::to_string(features_.size()));
  for (FeatureId f = 0; f < features_.size(); ++f)
    if (outcome[f] >= features_[f].domain_size())
      throw ModelError("outcome value out of range for feature '" +
                       features_[f].name + "'");
}

Outcome parse_outcome(const StatementSet& set, std::string_view text) {
  constexpr ValueId kUnset = static_cast<ValueId>(-1);
  Outcome out{std::vector<ValueId>(set.feature_count(), kUnset)};
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  std::vector<std::string_view> items;
  if (!trim(text).empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) {
        items.push_back(trim(text.substr(start)));
        break;
      }
      items.push_back(trim(text.substr(start, end - start)));
      start = end + 1;
    }
  }
  for (std::string_view item : items) {
    if (item.empty())
      throw ModelError("empty item in outcome '" + std::string(text) + "'");
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ModelError("expected Feat=val in outcome, got '" +
                       std::string(item) + "'");
    std::string_view name = trim(item.substr(0, eq));
    std::string_view value = trim(item.substr(eq + 1));
    auto f = set.find_feature(name);
    if (!f) throw ModelError("unknown feature '" + std::string(name) + "'");
    auto v = set.feature(*f).find_value(value);
    if (!v)
      throw ModelError("unknown value '" + std::string(value) +
                       "' for feature '" + std::string(name) + "'");
    if (out.values[*f] != kUnset)
      throw ModelError("feature '" + std::string(name) +
                       "' assigned twice in outcome");
    out.values[*f] = *v;
  }
  for (FeatureId f = 0; f < set.feature_count(); ++f)
    if (out.values[f] == kUnset)
      throw ModelError("outcome does not assign feature '" +
                       set.feature(f).name + "'");
  return out;
}

std::string format_outcome(const StatementSet& set, const Outcome& outcome) {
  std::string out;
  for (FeatureId f = 0; f < outcome.size(); ++f) {
    if (f) out += ",";
    out += set.feature(f).name + "=" + set.feature(f).values[outcome[f]];
  }
  return out;
}

std::string format_condition(const StatementSet& set,
                             const Condition& condition) {
  std::string out;
  for (const Literal& l : condition.literals()) {
    if (!out.empty()) out += " & ";
    out += set.feature(l.feature).name + "=" +
           set.feature(l.feature).values[l.value];
  }
  return out;
}

std::size_t DependenceGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& p : parents) e += p.size();
  return e;
}

DependenceGraph dependence_graph(const StatementSet& set) {
  const std::size_t n = set.feature_count();
  std::vector<std::set<FeatureId>> parents(n);
  for (const auto& s : set.statements())
    for (const Literal& l : s.condition.literals())
      parents[s.target].insert(l.feature);
  DependenceGraph g;
  g.parents.resize(n);
  g.children.resize(n);
  for (FeatureId x = 0; x < n; ++x) {
    g.parents[x].assign(parents[x].begin(), parents[x].end());
    for (FeatureId y : parents[x]) g.children[y].push_back(x);
  }
  for (auto& c : g.children) std::sort(c.begin(), c.end());
  return g;
}

TopologicalOrder topological_order(const DependenceGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<std::size_t> in_degree(n);
  std::priority_queue<FeatureId, std::vector<FeatureId>, std::greater<>> ready;
  for (FeatureId x = 0; x < n; ++x) {
    in_degree[x] = graph.parents[x].size();
    if (in_degree[x] == 0) ready.push(x);
  }
  TopologicalOrder result;
  std::vector<bool> placed(n, false);
  while (!ready.empty()) {
    FeatureId x = ready.top();
    ready.pop();
    result.order.push_back(x);
    placed[x] = true;
    for (FeatureId c : graph.children[x])
      if (--in_degree[c] == 0) ready.push(c);
  }
  if (result.order.size() == n) return result;

  // Every unplaced node keeps an unplaced parent; walk parents until a node
  // repeats.
  FeatureId start = 0;
  while (placed[start]) ++start;
  std::vector<std::size_t> seen_at(n, static_cast<std::size_t>(-1));
  std::vector<FeatureId> walk;
  FeatureId x = start;
  while (seen_at[x] == static_cast<std::size_t>(-1)) {
    seen_at[x] = walk.size();
    walk.push_back(x);
    for (FeatureId p : graph.parents[x]) {
      if (!placed[p]) {
        x = p;
        break;
      }
    }
  }
  // The walk follows edges backwards; reverse it into edge order.
  result.cycle.assign(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[x]),
                      walk.end());
  std::reverse(result.cycle.begin(), result.cycle.end());
  return result;
}

namespace {

std::size_t domain_product(const StatementSet& set,
                           const std::vector<FeatureId>& features) {
  std::size_t product = 1;
  for (FeatureId f : features) {
    const std::size_t d = set.feature(f).domain_size();
    if (product > static_cast<std::size_t>(-1) / d)
      throw SizeError("parent assignment space overflows");
    product *= d;
  }
  return product;
}

// Mixed-radix index of a complete assignment to `features`, read from a
// condition; nullopt when the condition is not exactly such an assignment.
std::optional<std::size_t> condition_key(const StatementSet& set,
                                         const std::vector<FeatureId>& features,
                                         const Condition& condition) {
  if (condition.size() != features.size()) return std::nullopt;
  std::size_t key = 0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const Literal& l = condition.literals()[i];
    if (l.feature != features[i]) return std::nullopt;
    key = key * set.feature(features[i]).domain_size() + l.value;
  }
  return key;
}

}  // namespace

CpNetValidation validate_cpnet(const StatementSet& set) {
  CpNetValidation v;
  const DependenceGraph g = dependence_graph(set);
  v.acyclic = topological_order(g).acyclic();
  for (FeatureId x = 0; x < set.feature_count(); ++x) {
    const std::string& name = set.feature(x).name;
    const auto on_x = set.statements_on(x);
    if (on_x.empty()) {
      v.diagnostics.push_back(name + ": feature unranked");
      continue;
    }
    for (std::size_t a = 0; a < on_x.size(); ++a)
      for (std::size_t b = a + 1; b < on_x.size(); ++b)
        if (set.statements()[on_x[a]].condition.compatible(
                set.statements()[on_x[b]].condition))
          v.diagnostics.push_back(name +
                                  ": conditions not mutually exclusive "
                                  "(statements " +
                                  std::to_string(on_x[a]) + " and " +
                                  std::to_string(on_x[b]) + ")");
    std::set<std::size_t> covered;
    for (std::size_t i : on_x) {
      const auto& s = set.statements()[i];
      if (auto key = condition_key(set, g.parents[x], s.condition))
        covered.insert(*key);
      else
        v.diagnostics.push_back(name + ": condition of statement " +
                                std::to_string(i) +
                                " is not a complete assignment to Pa(" + name +
                                ")");
      if (s.ranking.size() != set.feature(x).domain_size())
        v.diagnostics.push_back(name + ": ranking of statement " +
                                std::to_string(i) + " does not totally order D(" +
                                name + ")");
    }
    const std::size_t contexts = domain_product(set, g.parents[x]);
    if (covered.size() != contexts)
      v.diagnostics.push_back(name + ": conditions not jointly exhaustive (" +
                              std::to_string(covered.size()) + " of " +
                              std::to_string(contexts) +
                              " parent assignments covered)");
  }
  v.kind = v.diagnostics.empty() ? NetKind::kProperCpNet : NetKind::kGeneralSet;
  return v;
}

void require_acyclic_cpnet(const StatementSet& set) {
  const CpNetValidation v = validate_cpnet(set);
  if (!v.proper()) {
    std::string msg = "statement set is not a proper CP-net";
    if (!v.diagnostics.empty()) msg += ": " + v.diagnostics.front();
    throw PreconditionError(msg);
  }
  if (!v.acyclic) throw PreconditionError("CP-net dependence graph is cyclic");
}

std::vector<std::vector<std::size_t>> cpt_index(const StatementSet& set,
                                                const DependenceGraph& graph) {
  std::vector<std::vector<std::size_t>> index(set.feature_count());
  for (FeatureId x = 0; x < set.feature_count(); ++x) {
    index[x].assign(domain_product(set, graph.parents[x]),
                    static_cast<std::size_t>(-1));
    for (std::size_t i : set.statements_on(x)) {
      auto key =
          condition_key(set, graph.parents[x], set.statements()[i].condition);
      if (!key)
        throw PreconditionError("statement " + std::to_string(i) +
                                " is not a CPT row");
      index[x][*key] = i;
    }
    for (std::size_t row : index[x])
      if (row == static_cast<std::size_t>(-1))
        throw PreconditionError("CPT of '" + set.feature(x).name +
                                "' is incomplete");
  }
  return index;
}

Outcome cpnet_optimal(const StatementSet& set) {
  require_acyclic_cpnet(set);
  const DependenceGraph g = dependence_graph(set);
  const auto order = topological_order(g).order;
  const auto cpt = cpt_index(set, g);
  Outcome out{std::vector<ValueId>(set.feature_count(), 0)};
  for (FeatureId x : order) {
    std::size_t key = 0;
    for (FeatureId p : g.parents[x])
      key = key * set.feature(p).domain_size() + out[p];
    out.values[x] = set.statements()[cpt[x][key]].ranking.front();
  }
  return out;
}

}  // namespace prefcomp
