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

#include "prefcomp/scsp_json.hpp"

#include <limits>

#include "prefcomp/error.hpp"

namespace prefcomp {

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::kFirstBetter: return "lhs-better";
    case Comparison::kSecondBetter: return "rhs-better";
    case Comparison::kEqual: return "equal";
    case Comparison::kIncomparable: return "incomparable";
  }
  return "?";
}

Json semiring_json(const ClassicalSemiring&) { return {{"tag", "classical"}}; }
Json semiring_json(const FuzzySemiring&) { return {{"tag", "fuzzy"}}; }
Json semiring_json(const ProbabilisticSemiring&) {
  return {{"tag", "probabilistic"}};
}
Json semiring_json(const WeightedSemiring&) { return {{"tag", "minplus"}}; }
Json semiring_json(const SloSemiring& s) {
  return {{"tag", "slo"},
          {"length", s.length()},
          {"max", s.max()},
          {"combine", std::string(to_string(s.mode()))}};
}

Json value_json(const ClassicalSemiring&, bool v) { return v; }
Json value_json(const FuzzySemiring&, double v) { return v; }
Json value_json(const ProbabilisticSemiring&, double v) { return v; }
Json value_json(const WeightedSemiring&, const Penalty& v) {
  if (v.is_infinite()) return "inf";
  if (v.value() <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v.value());
  return v.value().str();
}
Json value_json(const SloSemiring&, const SloValue& v) { return v.digits(); }

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw ModelError("malformed problem document: " + what);
}

double unit_value(const Json& j) {
  if (!j.is_number()) bad("expected a number, got " + j.dump());
  return j.get<double>();
}

template <CSemiring S>
SoftCsp<S> read_problem(S semiring, const Json& doc) {
  SoftCsp<S> p(std::move(semiring));
  if (!doc.contains("variables") || !doc["variables"].is_array())
    bad("missing variables array");
  for (const Json& jv : doc["variables"]) {
    Variable v;
    v.name = jv.at("name").get<std::string>();
    v.values = jv.at("values").get<std::vector<std::string>>();
    if (jv.contains("components"))
      v.components = jv["components"].get<std::vector<std::size_t>>();
    p.add_variable(std::move(v));
  }
  if (!doc.contains("constraints") || !doc["constraints"].is_array())
    bad("missing constraints array");
  for (const Json& jc : doc["constraints"]) {
    SoftConstraint<typename S::value_type> c;
    const std::string kind = jc.value("kind", "soft");
    if (kind != "soft" && kind != "hard") bad("unknown constraint kind " + kind);
    c.kind = kind == "hard" ? ConstraintKind::kHard : ConstraintKind::kSoft;
    c.label = jc.value("label", "");
    c.weight = jc.value("weight", "");
    c.scope = jc.at("scope").get<std::vector<std::size_t>>();
    std::size_t tuples = 1;
    for (std::size_t var : c.scope) {
      if (var >= p.variables().size()) bad("scope index out of range");
      tuples *= p.variables()[var].domain_size();
    }
    std::vector<std::optional<typename S::value_type>> table(tuples);
    for (const Json& row : jc.at("rows")) {
      const auto tuple = row.at("tuple").get<std::vector<std::size_t>>();
      if (tuple.size() != c.scope.size()) bad("tuple arity mismatch");
      std::size_t idx = 0;
      for (std::size_t k = 0; k < tuple.size(); ++k) {
        const std::size_t d = p.variables()[c.scope[k]].domain_size();
        if (tuple[k] >= d) bad("tuple value out of range");
        idx = idx * d + tuple[k];
      }
      if (table[idx]) bad("duplicate tuple row");
      table[idx] = value_from_json(p.semiring(), row.at("value"));
    }
    for (auto& entry : table) {
      if (!entry) bad("constraint '" + c.label + "' does not cover every tuple");
      c.table.push_back(std::move(*entry));
    }
    p.add_constraint(std::move(c));
  }
  return p;
}

}  // namespace

bool value_from_json(const ClassicalSemiring&, const Json& j) {
  if (!j.is_boolean()) bad("expected a boolean, got " + j.dump());
  return j.get<bool>();
}
double value_from_json(const FuzzySemiring&, const Json& j) {
  return unit_value(j);
}
double value_from_json(const ProbabilisticSemiring&, const Json& j) {
  return unit_value(j);
}
Penalty value_from_json(const WeightedSemiring&, const Json& j) {
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    if (text == "inf") return Penalty::infinity();
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      bad("invalid penalty '" + text + "'");
    return Penalty(BigInt(text));
  }
  if (j.is_number_unsigned()) return Penalty(BigInt(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Penalty(j.get<std::int64_t>());
  bad("expected an integer penalty, got " + j.dump());
}
SloValue value_from_json(const SloSemiring&, const Json& j) {
  if (!j.is_array()) bad("expected an SLO integer array, got " + j.dump());
  return SloValue(j.get<std::vector<int>>());
}

bool is_soft_csp_document(const Json& doc) {
  return doc.is_object() && doc.value("format", "") == "prefcomp-scsp";
}

AnySoftCsp soft_csp_from_json(const Json& doc) {
  if (!is_soft_csp_document(doc)) bad("format is not prefcomp-scsp");
  try {
    const Json& s = doc.at("semiring");
    const std::string tag = s.at("tag").get<std::string>();
    if (tag == "classical") return read_problem(ClassicalSemiring{}, doc);
    if (tag == "fuzzy") return read_problem(FuzzySemiring{}, doc);
    if (tag == "probabilistic") return read_problem(ProbabilisticSemiring{}, doc);
    if (tag == "minplus") return read_problem(WeightedSemiring{}, doc);
    if (tag == "slo")
      return read_problem(
          SloSemiring(s.at("length").get<std::size_t>(), s.at("max").get<int>(),
                      parse_slo_combine(s.value("combine", "lexmin"))),
          doc);
    bad("unknown semiring tag '" + tag + "'");
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

}  // namespace prefcomp
