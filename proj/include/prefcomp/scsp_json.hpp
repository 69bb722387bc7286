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

#ifndef PREFCOMP_SCSP_JSON_HPP
#define PREFCOMP_SCSP_JSON_HPP

// JSON documents for soft constraint problems:
//
//   {"format": "prefcomp-scsp", "version": 1,
//    "semiring": {"tag": "minplus"} | {"tag": "slo", "length": 4, "max": 1,
//                                      "combine": "lexmin"} | ...,
//    "variables": [{"name": "A", "values": ["a", "a!"]},
//                  {"name": "Pa(C)", "values": [...], "components": [0, 1]}],
//    "constraints": [{"kind": "soft", "label": "C", "weight": "2",
//                     "scope": [4, 2],
//                     "rows": [{"tuple": [0, 0], "value": 0}, ...]}]}
//
// Penalties are JSON integers when they fit in 64 bits and decimal strings
// otherwise; +infinity is the string "inf". SLO values are integer arrays.

#include <json.hpp>

#include <variant>

#include "prefcomp/scsp.hpp"
#include "prefcomp/semiring.hpp"

namespace prefcomp {

using Json = nlohmann::json;

Json semiring_json(const ClassicalSemiring&);
Json semiring_json(const FuzzySemiring&);
Json semiring_json(const ProbabilisticSemiring&);
Json semiring_json(const WeightedSemiring&);
Json semiring_json(const SloSemiring& s);

Json value_json(const ClassicalSemiring&, bool v);
Json value_json(const FuzzySemiring&, double v);
Json value_json(const ProbabilisticSemiring&, double v);
Json value_json(const WeightedSemiring&, const Penalty& v);
Json value_json(const SloSemiring&, const SloValue& v);

// Each throws ModelError on a malformed value.
bool value_from_json(const ClassicalSemiring&, const Json& j);
double value_from_json(const FuzzySemiring&, const Json& j);
double value_from_json(const ProbabilisticSemiring&, const Json& j);
Penalty value_from_json(const WeightedSemiring&, const Json& j);
SloValue value_from_json(const SloSemiring&, const Json& j);

template <CSemiring S>
Json to_json(const SoftCsp<S>& p) {
  Json doc;
  doc["format"] = "prefcomp-scsp";
  doc["version"] = 1;
  doc["semiring"] = semiring_json(p.semiring());
  Json vars = Json::array();
  for (const Variable& v : p.variables()) {
    Json jv{{"name", v.name}, {"values", v.values}};
    if (v.derived()) jv["components"] = v.components;
    vars.push_back(std::move(jv));
  }
  doc["variables"] = std::move(vars);
  Json cons = Json::array();
  for (const auto& c : p.constraints()) {
    Json jc{{"kind", c.kind == ConstraintKind::kHard ? "hard" : "soft"},
            {"label", c.label},
            {"scope", c.scope}};
    if (!c.weight.empty()) jc["weight"] = c.weight;
    Json rows = Json::array();
    std::vector<std::size_t> tuple(c.scope.size(), 0);
    for (std::size_t i = 0; i < c.table.size(); ++i) {
      std::size_t rest = i;
      for (std::size_t k = c.scope.size(); k-- > 0;) {
        const std::size_t d = p.variables()[c.scope[k]].domain_size();
        tuple[k] = rest % d;
        rest /= d;
      }
      rows.push_back({{"tuple", tuple},
                      {"value", value_json(p.semiring(), c.table[i])}});
    }
    jc["rows"] = std::move(rows);
    cons.push_back(std::move(jc));
  }
  doc["constraints"] = std::move(cons);
  return doc;
}

using AnySoftCsp =
    std::variant<SoftCsp<ClassicalSemiring>, SoftCsp<FuzzySemiring>,
                 SoftCsp<ProbabilisticSemiring>, SoftCsp<WeightedSemiring>,
                 SoftCsp<SloSemiring>>;

// Throws ModelError on a malformed document.
AnySoftCsp soft_csp_from_json(const Json& doc);

bool is_soft_csp_document(const Json& doc);

}  // namespace prefcomp

#endif  // PREFCOMP_SCSP_JSON_HPP
