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

#ifndef PREFCOMP_SATCHECK_HPP
#define PREFCOMP_SATCHECK_HPP

// Satisfiability of statement sets with an acyclic, bounded in-degree
// dependence graph, via per-feature undominance tables.
//
// T_X[pi] holds the values of X that no statement applicable under the
// parent assignment pi ranks anything above. An outcome is undominated iff
// it is consistent with every table: alpha(X) is in T_X[alpha|Pa(X)] for
// all X. Pruning removes entries that rely on a parent value no table
// offers; a witness is then found by backtracking over consistent
// assignments. Backtracking is exponential only when several children
// constrain a shared ancestor in incompatible ways, and it keeps the
// decision exact in that case.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prefcomp/model.hpp"

namespace prefcomp {

struct SatOptions {
  std::size_t max_parents = 12;
};

struct UndominanceTable {
  FeatureId feature = 0;
  std::vector<FeatureId> parents;
  std::vector<std::size_t> parent_radix;
  // Nonempty undominated value sets keyed by the mixed-radix index of the
  // parent assignment (first parent most significant).
  std::map<std::size_t, std::vector<ValueId>> entries;

  std::size_t key_count() const;
  std::size_t key(std::span<const ValueId> values_by_feature) const;
  // Parent values in `parents` order.
  std::vector<ValueId> decode(std::size_t key) const;
  const std::vector<ValueId>* find(std::span<const ValueId> values) const;
  // Every value stored in some entry.
  std::vector<ValueId> supported_values() const;
};

struct UndominanceTables {
  std::vector<UndominanceTable> tables;  // indexed by feature
  // Parent assignments examined while building; sum over X of |D(Pa(X))|.
  std::size_t entries_examined = 0;

  std::size_t entry_count() const;
  std::optional<FeatureId> first_empty() const;
};

// Throws PreconditionError on a cyclic dependence graph and SizeError when
// a feature has more than `max_parents` parents.
UndominanceTables build_tables(const StatementSet& set, SatOptions options = {});

// Processes features in `order` (topological) and drops every entry whose
// parent assignment gives some parent Y a value that appears in no
// surviving entry of T_Y.
UndominanceTables prune_unsupported(UndominanceTables tables,
                                    std::span<const FeatureId> order);

// An outcome consistent with every table, by backtracking in `order`.
std::optional<Outcome> extract_witness(const UndominanceTables& tables,
                                       std::span<const FeatureId> order);

struct SatVerdict {
  bool satisfiable = false;
  std::optional<Outcome> witness;
  std::string reason;
  UndominanceTables tables;  // after pruning
  UndominanceTables initial_tables;
};

SatVerdict satisfiable(const StatementSet& set, SatOptions options = {});

}  // namespace prefcomp

#endif  // PREFCOMP_SATCHECK_HPP
