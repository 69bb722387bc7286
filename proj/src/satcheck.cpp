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

#include "prefcomp/satcheck.hpp"

#include <algorithm>

#include "prefcomp/error.hpp"

namespace prefcomp {

std::size_t UndominanceTable::key_count() const {
  std::size_t n = 1;
  for (std::size_t r : parent_radix) n *= r;
  return n;
}

std::size_t UndominanceTable::key(std::span<const ValueId> values) const {
  std::size_t k = 0;
  for (std::size_t i = 0; i < parents.size(); ++i)
    k = k * parent_radix[i] + values[parents[i]];
  return k;
}

std::vector<ValueId> UndominanceTable::decode(std::size_t key) const {
  std::vector<ValueId> out(parents.size());
  for (std::size_t i = parents.size(); i-- > 0;) {
    out[i] = key % parent_radix[i];
    key /= parent_radix[i];
  }
  return out;
}

const std::vector<ValueId>* UndominanceTable::find(
    std::span<const ValueId> values) const {
  auto it = entries.find(key(values));
  return it == entries.end() ? nullptr : &it->second;
}

std::vector<ValueId> UndominanceTable::supported_values() const {
  std::vector<ValueId> out;
  for (const auto& [k, values] : entries)
    out.insert(out.end(), values.begin(), values.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t UndominanceTables::entry_count() const {
  std::size_t n = 0;
  for (const auto& t : tables) n += t.entries.size();
  return n;
}

std::optional<FeatureId> UndominanceTables::first_empty() const {
  for (const auto& t : tables)
    if (t.entries.empty()) return t.feature;
  return std::nullopt;
}

UndominanceTables build_tables(const StatementSet& set, SatOptions options) {
  const DependenceGraph g = dependence_graph(set);
  const TopologicalOrder topo = topological_order(g);
  if (!topo.acyclic())
    throw PreconditionError(
        "dependence graph is cyclic; the table algorithm needs an acyclic "
        "graph");
  UndominanceTables out;
  out.tables.resize(set.feature_count());
  for (FeatureId x = 0; x < set.feature_count(); ++x) {
    UndominanceTable& t = out.tables[x];
    t.feature = x;
    t.parents = g.parents[x];
    if (t.parents.size() > options.max_parents)
      throw SizeError("feature '" + set.feature(x).name + "' has " +
                      std::to_string(t.parents.size()) +
                      " parents, above the bound of " +
                      std::to_string(options.max_parents));
    for (FeatureId p : t.parents)
      t.parent_radix.push_back(set.feature(p).domain_size());

    const auto on_x = set.statements_on(x);
    const std::size_t domain = set.feature(x).domain_size();
    const std::size_t keys = t.key_count();
    out.entries_examined += keys;
    std::vector<ValueId> context(set.feature_count(), 0);
    std::vector<bool> beaten(domain);
    for (std::size_t k = 0; k < keys; ++k) {
      const auto parent_values = t.decode(k);
      for (std::size_t i = 0; i < t.parents.size(); ++i)
        context[t.parents[i]] = parent_values[i];
      // A value has a predecessor in the transitive closure of the
      // applicable rankings iff some ranking places a value directly above
      // it, so maximality reduces to "never ranked below anything"; values
      // on a cycle always have a predecessor.
      std::fill(beaten.begin(), beaten.end(), false);
      for (std::size_t si : on_x) {
        const PreferenceStatement& s = set.statements()[si];
        if (!s.condition.holds(context)) continue;
        for (std::size_t j = 1; j < s.ranking.size(); ++j)
          beaten[s.ranking[j]] = true;
      }
      std::vector<ValueId> undominated;
      for (ValueId v = 0; v < domain; ++v)
        if (!beaten[v]) undominated.push_back(v);
      if (!undominated.empty()) t.entries.emplace(k, std::move(undominated));
    }
  }
  return out;
}

UndominanceTables prune_unsupported(UndominanceTables tables,
                                    std::span<const FeatureId> order) {
  std::vector<std::vector<bool>> supported(tables.tables.size());
  std::vector<bool> processed(tables.tables.size(), false);
  for (FeatureId x : order) {
    UndominanceTable& t = tables.tables[x];
    for (FeatureId p : t.parents)
      if (!processed[p])
        throw PreconditionError("pruning order is not topological");
    for (auto it = t.entries.begin(); it != t.entries.end();) {
      const auto parent_values = t.decode(it->first);
      bool ok = true;
      for (std::size_t i = 0; i < t.parents.size() && ok; ++i) {
        const auto& sup = supported[t.parents[i]];
        ok = parent_values[i] < sup.size() && sup[parent_values[i]];
      }
      it = ok ? std::next(it) : t.entries.erase(it);
    }
    std::size_t max_value = 0;
    const auto values = t.supported_values();
    if (!values.empty()) max_value = values.back() + 1;
    supported[x].assign(max_value, false);
    for (ValueId v : values) supported[x][v] = true;
    processed[x] = true;
  }
  return tables;
}

namespace {

bool backtrack(const UndominanceTables& tables,
               std::span<const FeatureId> order, std::size_t depth,
               std::vector<ValueId>& values) {
  if (depth == order.size()) return true;
  const UndominanceTable& t = tables.tables[order[depth]];
  const auto* entry = t.find(values);
  if (!entry) return false;
  for (ValueId v : *entry) {
    values[t.feature] = v;
    if (backtrack(tables, order, depth + 1, values)) return true;
  }
  return false;
}

}  // namespace

std::optional<Outcome> extract_witness(const UndominanceTables& tables,
                                       std::span<const FeatureId> order) {
  if (order.size() != tables.tables.size())
    throw PreconditionError("witness order must list every feature");
  std::vector<ValueId> values(tables.tables.size(), 0);
  if (!backtrack(tables, order, 0, values)) return std::nullopt;
  return Outcome{std::move(values)};
}

SatVerdict satisfiable(const StatementSet& set, SatOptions options) {
  SatVerdict verdict;
  verdict.initial_tables = build_tables(set, options);
  const auto order = topological_order(dependence_graph(set)).order;
  verdict.tables = prune_unsupported(verdict.initial_tables, order);
  if (auto empty = verdict.tables.first_empty()) {
    verdict.reason = "empty table at " + set.feature(*empty).name;
    return verdict;
  }
  verdict.witness = extract_witness(verdict.tables, order);
  if (!verdict.witness) {
    verdict.reason = "no table-consistent assignment";
    return verdict;
  }
  verdict.satisfiable = true;
  return verdict;
}

}  // namespace prefcomp
