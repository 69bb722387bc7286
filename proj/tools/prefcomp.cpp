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

// prefcomp: command-line front end. Every run prints one JSON report on
// standard output; exit status 0 on success, 1 on a negative verdict and 2
// on usage, input or cap errors.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "prefcomp/cnf.hpp"
#include "prefcomp/compile.hpp"
#include "prefcomp/dsl.hpp"
#include "prefcomp/error.hpp"
#include "prefcomp/generate.hpp"
#include "prefcomp/model.hpp"
#include "prefcomp/oracle.hpp"
#include "prefcomp/satcheck.hpp"
#include "prefcomp/scsp_json.hpp"
#include "prefcomp/two_sat.hpp"

#ifndef PREFCOMP_VERSION
#define PREFCOMP_VERSION "0.0.0"
#endif

namespace pc = prefcomp;
using Json = nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) out << std::setw(2) << static_cast<int>(md[i]);
  return "sha256:" + out.str();
}

struct Input {
  std::string path;
  std::string bytes;
};

// Outcome of one subcommand; the report wrapper adds the common fields.
struct Run {
  Json results = Json::object();
  int exit_code = kOk;
  std::string digest;
};

class Session {
 public:
  Input read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    Input input{path, buf.str()};
    digest_ = sha256_hex(input.bytes);
    path_ = path;
    return input;
  }
  void digest_text(const std::string& text) { digest_ = sha256_hex(text); }
  const std::string& digest() const { return digest_; }
  const std::string& path() const { return path_; }

 private:
  std::string digest_;
  std::string path_;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

// .. Common option state ....................................................

struct Caps {
  std::size_t max_outcomes = std::size_t{1} << 20;
  std::size_t max_parents = 12;

  pc::OracleOptions oracle() const { return {max_outcomes}; }
  pc::SatOptions sat() const { return {max_parents}; }
};

Json outcome_json(const pc::StatementSet& set, const pc::Outcome& o) {
  return pc::format_outcome(set, o);
}

Json outcomes_json(const pc::StatementSet& set, const std::vector<pc::Outcome>& os) {
  Json out = Json::array();
  for (const auto& o : os) out.push_back(outcome_json(set, o));
  return out;
}

pc::StatementSet statements_from(const Input& input) {
  if (looks_like_json(input.bytes))
    throw UsageError("'" + input.path + "' is a compiled problem; this command needs a statement file");
  return pc::parse_statements(input.bytes);
}

// .. validate ...............................................................

Run cmd_validate(Session& session, const std::string& file) {
  const auto set = statements_from(session.read(file));
  const auto v = pc::validate_cpnet(set);
  Run run;
  run.results = {{"kind", v.proper() ? "proper-cpnet" : "general-set"},
                 {"acyclic", v.acyclic},
                 {"features", set.feature_count()},
                 {"statements", set.statements().size()},
                 {"diagnostics", v.diagnostics}};
  const auto order = pc::topological_order(pc::dependence_graph(set));
  Json cycle = Json::array();
  for (pc::FeatureId f : order.cycle) cycle.push_back(set.feature(f).name);
  if (!order.acyclic()) run.results["cycle"] = cycle;
  return run;
}

// .. sat ....................................................................

Json tables_json(const pc::StatementSet& set, const pc::UndominanceTables& tables) {
  Json out = Json::array();
  for (const auto& t : tables.tables) {
    Json parents = Json::array();
    for (pc::FeatureId p : t.parents) parents.push_back(set.feature(p).name);
    Json entries = Json::array();
    for (const auto& [key, values] : t.entries) {
      const auto parent_values = t.decode(key);
      std::vector<pc::Literal> lits;
      for (std::size_t i = 0; i < t.parents.size(); ++i)
        lits.push_back({t.parents[i], parent_values[i]});
      Json names = Json::array();
      for (pc::ValueId v : values) names.push_back(set.feature(t.feature).values[v]);
      entries.push_back({{"context", pc::format_condition(set, pc::Condition(lits))},
                         {"values", names}});
    }
    out.push_back({{"feature", set.feature(t.feature).name},
                   {"parents", parents},
                   {"entries", entries}});
  }
  return out;
}

Run cmd_sat(Session& session, const std::string& file, const std::string& method,
            bool dump_tables, const Caps& caps) {
  const auto set = statements_from(session.read(file));
  Run run;
  Json& r = run.results;
  r["method"] = method;
  Json stats = {{"features", set.feature_count()}, {"statements", set.statements().size()}};
  bool sat = false;
  std::optional<pc::Outcome> witness;
  std::string reason;
  if (method == "poly") {
    const auto v = pc::satisfiable(set, caps.sat());
    sat = v.satisfiable;
    witness = v.witness;
    reason = v.reason;
    stats["table_entries"] = v.initial_tables.entry_count();
    stats["pruned_entries"] = v.tables.entry_count();
    stats["entries_examined"] = v.initial_tables.entries_examined;
    if (dump_tables)
      r["tables"] = {{"initial", tables_json(set, v.initial_tables)},
                     {"pruned", tables_json(set, v.tables)}};
  } else if (method == "brute") {
    const auto g = pc::FlipGraph::build(set, caps.oracle());
    const auto v = pc::is_satisfiable_bruteforce(g);
    sat = v.satisfiable;
    witness = v.witness;
    if (!sat) reason = "every outcome has an improving flip";
    stats["outcomes"] = g.node_count();
    stats["flips"] = g.edge_count();
  } else {
    const auto v = pc::satisfiable_2sat(set);
    stats["clauses"] = v.clause_count;
    reason = v.reason;
    if (v.status == pc::TwoSatStatus::kNotApplicable) {
      r["verdict"] = "not-applicable";
      r["reason"] = reason;
      r["stats"] = stats;
      run.exit_code = kError;
      return run;
    }
    sat = v.status == pc::TwoSatStatus::kSatisfiable;
    witness = v.witness;
  }
  r["verdict"] = sat ? "sat" : "unsat";
  if (witness) r["witness"] = outcome_json(set, *witness);
  if (!reason.empty()) r["reason"] = reason;
  r["stats"] = stats;
  run.exit_code = sat ? kOk : kNegative;
  return run;
}

// .. asym ...................................................................

Run cmd_asym(Session& session, const std::string& file, const Caps& caps) {
  const auto set = statements_from(session.read(file));
  const auto g = pc::FlipGraph::build(set, caps.oracle());
  const auto a = pc::is_asymmetric(g);
  Run run;
  run.results = {{"asymmetric", a.asymmetric},
                 {"stats", {{"outcomes", g.node_count()}, {"flips", g.edge_count()}}}};
  if (!a.asymmetric) run.results["cycle"] = outcomes_json(set, a.cycle);
  run.exit_code = a.asymmetric ? kOk : kNegative;
  return run;
}

// .. compiled problems ......................................................

// Feature-level view of a compiled problem: the non-derived variables.
struct ProblemView {
  std::vector<std::size_t> free;
  const std::vector<pc::Variable>* vars = nullptr;

  template <class P>
  explicit ProblemView(const P& p) : vars(&p.variables()) {
    for (std::size_t i = 0; i < vars->size(); ++i)
      if (!(*vars)[i].derived()) free.push_back(i);
  }

  pc::Assignment parse(const std::string& text) const {
    pc::Assignment a(vars->size(), 0);
    std::vector<bool> seen(vars->size(), false);
    std::stringstream items(text);
    std::string item;
    while (std::getline(items, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw pc::ModelError("expected Var=val in assignment, got '" + item + "'");
      const std::string name = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      auto it = std::find_if(free.begin(), free.end(),
                             [&](std::size_t i) { return (*vars)[i].name == name; });
      if (it == free.end()) throw pc::ModelError("unknown variable '" + name + "'");
      const auto& values = (*vars)[*it].values;
      auto v = std::find(values.begin(), values.end(), value);
      if (v == values.end())
        throw pc::ModelError("unknown value '" + value + "' for variable '" + name + "'");
      if (seen[*it]) throw pc::ModelError("variable '" + name + "' assigned twice");
      seen[*it] = true;
      a[*it] = static_cast<std::size_t>(v - values.begin());
    }
    for (std::size_t i : free)
      if (!seen[i]) throw pc::ModelError("assignment does not cover variable '" + (*vars)[i].name + "'");
    return a;
  }

  std::string format(const pc::Assignment& a) const {
    std::string out;
    for (std::size_t i : free) {
      if (!out.empty()) out += ",";
      out += (*vars)[i].name + "=" + (*vars)[i].values[a[i]];
    }
    return out;
  }
};

pc::AnySoftCsp problem_from(const Input& input) {
  Json doc;
  try {
    doc = Json::parse(input.bytes);
  } catch (const Json::parse_error& e) {
    throw pc::ParseError(1, e.byte, std::string("invalid JSON: ") + e.what());
  }
  if (!pc::is_soft_csp_document(doc))
    throw pc::ModelError("'" + input.path + "' is not a compiled problem document");
  return pc::soft_csp_from_json(doc);
}

// .. optimal ................................................................

Run cmd_optimal(Session& session, const std::string& file, const std::string& method,
                bool branch_and_bound, const Caps& caps) {
  const Input input = session.read(file);
  Run run;
  Json& r = run.results;
  if (looks_like_json(input.bytes)) {
    const auto any = problem_from(input);
    std::visit(
        [&](const auto& p) {
          const ProblemView view(p);
          const auto best = pc::optimum(p, pc::OptimumOptions{caps.max_outcomes, branch_and_bound});
          Json assignments = Json::array();
          Json values = Json::array();
          for (std::size_t i = 0; i < best.assignments.size(); ++i) {
            assignments.push_back(view.format(best.assignments[i]));
            values.push_back(pc::value_json(p.semiring(), best.values[i]));
          }
          r = {{"method", branch_and_bound ? "branch-and-bound" : "exhaustive"},
               {"semiring", pc::semiring_json(p.semiring())},
               {"assignments", assignments},
               {"values", values},
               {"nodes_visited", best.nodes_visited}};
        },
        any);
    return run;
  }
  const auto set = pc::parse_statements(input.bytes);
  r["method"] = method;
  if (method == "sweep") {
    r["outcomes"] = outcomes_json(set, {pc::cpnet_optimal(set)});
  } else {
    r["outcomes"] = outcomes_json(set, pc::undominated_set(set, caps.oracle()));
  }
  return run;
}

// .. compile ................................................................

template <pc::CSemiring S>
Json compiled_summary(const pc::StatementSet& set, const pc::CompiledNet<S>& c,
                      bool weights) {
  const auto& net = c.net;
  Json soft = Json::array();
  for (pc::FeatureId x : net.order) {
    const auto& e = net.soft_edges[x];
    Json je = {{"feature", set.feature(x).name},
               {"source", e.source ? Json(net.nodes[*e.source].name) : Json(nullptr)},
               {"slo_position", e.slo_position}};
    if (weights) je["weight"] = e.weight.str();
    soft.push_back(std::move(je));
  }
  Json hard = Json::array();
  for (const auto& h : net.hard_edges)
    hard.push_back({{"aggregate", net.nodes[h.aggregate].name}, {"parent", net.nodes[h.parent].name}});
  return {{"nodes", net.nodes.size()},
          {"node_bound", 2 * set.feature_count()},
          {"edges", net.edge_count()},
          {"edge_bound", net.graph.edge_count() + set.feature_count()},
          {"soft_edges", soft},
          {"hard_edges", hard}};
}

Run cmd_compile(Session& session, const std::string& file, const std::string& semiring,
                const std::string& slo_combine, const std::string& out) {
  const auto set = statements_from(session.read(file));
  Run run;
  Json doc;
  if (semiring == "minplus") {
    const auto c = pc::compile_minplus(set);
    run.results = compiled_summary(set, c, true);
    doc = pc::to_json(c.problem);
  } else {
    const auto c = pc::compile_slo(set, pc::parse_slo_combine(slo_combine));
    run.results = compiled_summary(set, c, false);
    doc = pc::to_json(c.problem);
  }
  run.results["semiring"] = doc["semiring"];
  if (out.empty()) {
    run.results["problem"] = doc;
  } else {
    write_file(out, doc.dump(2) + "\n");
    run.results["output"] = out;
  }
  return run;
}

// .. compare ................................................................

std::string relation_name(pc::Comparison c) { return std::string(pc::to_string(c)); }

Run cmd_compare(Session& session, const std::string& file, const std::string& lhs,
                const std::string& rhs, const std::string& method,
                const std::string& slo_combine, const Caps& caps) {
  const Input input = session.read(file);
  Run run;
  Json& r = run.results;
  if (looks_like_json(input.bytes)) {
    if (method == "cpnet")
      throw UsageError("--method cpnet needs a statement file, not a compiled problem");
    const auto any = problem_from(input);
    std::visit(
        [&](const auto& p) {
          const std::string tag = pc::semiring_json(p.semiring())["tag"];
          if (tag != method)
            throw UsageError("--method " + method + " does not match the problem's semiring '" + tag + "'");
          const ProblemView view(p);
          auto a = view.parse(lhs);
          auto b = view.parse(rhs);
          p.fill_derived(a);
          p.fill_derived(b);
          const auto va = p.evaluate(a);
          const auto vb = p.evaluate(b);
          r = {{"method", method},
               {"relation", relation_name(pc::compare_values(p.semiring(), va, vb))},
               {"lhs", view.format(a)},
               {"rhs", view.format(b)},
               {"lhs_value", pc::value_json(p.semiring(), va)},
               {"rhs_value", pc::value_json(p.semiring(), vb)}};
        },
        any);
    return run;
  }
  const auto set = pc::parse_statements(input.bytes);
  const auto a = pc::parse_outcome(set, lhs);
  const auto b = pc::parse_outcome(set, rhs);
  r = {{"method", method}, {"lhs", outcome_json(set, a)}, {"rhs", outcome_json(set, b)}};
  if (method == "cpnet") {
    const auto g = pc::FlipGraph::build(set, caps.oracle());
    const bool ab = pc::dominates(g, a, b);
    const bool ba = pc::dominates(g, b, a);
    r["relation"] = a == b ? "equal"
                    : ab && ba ? "mutual"
                    : ab       ? "lhs-better"
                    : ba       ? "rhs-better"
                               : "incomparable";
    r["lhs_dominates_rhs"] = ab;
    r["rhs_dominates_lhs"] = ba;
  } else if (method == "minplus") {
    const auto c = pc::compile_minplus(set);
    const auto s = c.problem.semiring();
    r["relation"] = relation_name(c.compare(a, b));
    r["lhs_value"] = pc::value_json(s, c.evaluate(a));
    r["rhs_value"] = pc::value_json(s, c.evaluate(b));
  } else {
    const auto c = pc::compile_slo(set, pc::parse_slo_combine(slo_combine));
    const auto& s = c.problem.semiring();
    r["slo_combine"] = slo_combine;
    r["relation"] = relation_name(c.compare(a, b));
    r["lhs_value"] = pc::value_json(s, c.evaluate(a));
    r["rhs_value"] = pc::value_json(s, c.evaluate(b));
  }
  return run;
}

// .. tabulate / check-preservation .........................................

constexpr pc::CpRelation kRows[] = {pc::CpRelation::kBetter, pc::CpRelation::kWorse,
                                    pc::CpRelation::kIncomparable};
constexpr pc::Comparison kCols[] = {pc::Comparison::kFirstBetter, pc::Comparison::kSecondBetter,
                                    pc::Comparison::kEqual};

Json table_json(const pc::OrderingTable& t) {
  Json out = Json::object();
  for (auto row : kRows) {
    Json cells = Json::object();
    for (auto col : kCols) cells[std::string(pc::symbol(col))] = t.at(row, col);
    out[std::string(pc::symbol(row))] = cells;
  }
  return out;
}

Json pairs_json(const pc::StatementSet& set, const std::vector<pc::PairRecord>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs)
    out.push_back({{"lhs", outcome_json(set, p.lhs)},
                   {"rhs", outcome_json(set, p.rhs)},
                   {"cpnet", std::string(pc::symbol(p.cpnet))},
                   {"approximation", std::string(pc::symbol(p.approximation))}});
  return out;
}

Json flips_json(const pc::StatementSet& set, const std::vector<pc::FlipRecord>& flips) {
  Json out = Json::array();
  for (const auto& f : flips)
    out.push_back({{"better", outcome_json(set, f.better)},
                   {"worse", outcome_json(set, f.worse)},
                   {"feature", set.feature(f.feature).name}});
  return out;
}

void print_table(std::ostream& os, const std::string& title, const pc::OrderingTable& t) {
  os << std::left << std::setw(8) << title;
  for (auto col : kCols) os << std::right << std::setw(8) << pc::symbol(col);
  os << "\n";
  for (auto row : kRows) {
    os << std::left << std::setw(8) << ("  " + std::string(pc::symbol(row)));
    for (auto col : kCols) os << std::right << std::setw(8) << t.at(row, col);
    os << "\n";
  }
}

pc::AnalyzerOptions analyzer_options(const Caps& caps, const std::string& slo_combine,
                                     std::size_t max_pairs) {
  pc::AnalyzerOptions o;
  o.oracle = caps.oracle();
  o.slo_combine = pc::parse_slo_combine(slo_combine);
  o.max_pair_outcomes = max_pairs;
  return o;
}

Run cmd_tabulate(Session& session, const std::string& file, const std::string& slo_combine,
                 std::size_t max_pairs, const Caps& caps) {
  const auto set = statements_from(session.read(file));
  const pc::ApproximationAnalyzer analyzer(set, analyzer_options(caps, slo_combine, max_pairs));
  const auto r = analyzer.tabulate();
  std::vector<pc::PairRecord> strict_ties;
  for (const auto& t : r.slo_ties)
    if (t.cpnet == pc::CpRelation::kBetter) strict_ties.push_back(t);
  Run run;
  run.results = {{"pairs", r.pairs},
                 {"slo_combine", slo_combine},
                 {"minplus", {{"table", table_json(r.minplus)},
                              {"forbidden", pairs_json(set, r.minplus_forbidden)}}},
                 {"slo", {{"table", table_json(r.slo)},
                          {"forbidden", pairs_json(set, r.slo_forbidden)},
                          {"strict_ties", pairs_json(set, strict_ties)}}}};
  print_table(std::cerr, "min+", r.minplus);
  print_table(std::cerr, "slo", r.slo);
  return run;
}

Run cmd_check(Session& session, const std::string& file, const std::string& slo_combine,
              std::size_t max_pairs, const Caps& caps) {
  const auto set = statements_from(session.read(file));
  const pc::ApproximationAnalyzer analyzer(set, analyzer_options(caps, slo_combine, max_pairs));
  const auto r = analyzer.check_preservation();
  Run run;
  run.results = {{"ok", r.ok()},
                 {"slo_combine", slo_combine},
                 {"strict_pairs", r.strict_pairs},
                 {"flips", r.flips},
                 {"size", {{"nodes", r.nodes},
                           {"node_bound", r.node_bound},
                           {"edges", r.edges},
                           {"edge_bound", r.edge_bound},
                           {"ok", r.size_bounds_ok()}}},
                 {"minplus_violations", pairs_json(set, r.minplus_violations)},
                 {"cp_condition_violations", flips_json(set, r.cp_condition_violations)},
                 {"weight_violations", r.weight_violations},
                 {"slo_weak_violations", pairs_json(set, r.slo_weak_violations)},
                 {"slo_flip_violations", flips_json(set, r.slo_flip_violations)},
                 {"slo_strict_ties", r.slo_strict_ties.size()}};
  run.exit_code = r.ok() ? kOk : kNegative;
  return run;
}

// .. encode-3sat ...........................................................

Run cmd_encode(Session& session, const std::string& file, const std::string& out) {
  const auto f = pc::parse_dimacs(session.read(file).bytes);
  const auto enc = pc::encode_3sat(f);
  const std::string text = pc::serialize(enc.statements);
  Run run;
  run.results = {{"variables", f.variable_count},
                 {"clauses", f.clauses.size()},
                 {"statements", enc.statements.statements().size()},
                 {"tautologies_dropped", enc.tautologies_dropped},
                 {"has_empty_clause", enc.has_empty_clause}};
  if (out.empty()) {
    run.results["text"] = text;
  } else {
    write_file(out, text);
    run.results["output"] = out;
  }
  return run;
}

// .. generate ..............................................................

struct GenerateArgs {
  std::string kind = "cpnet";
  std::uint64_t seed = 0;
  std::size_t features = 4;
  std::size_t max_domain = 2;
  std::size_t max_parents = 2;
  std::size_t statements = 3;
  std::size_t clauses = 8;
  bool cycles = false;
  std::string out;
};

Run cmd_generate(Session& session, const GenerateArgs& g) {
  std::ostringstream params;
  params << "generate " << g.kind << " seed=" << g.seed << " features=" << g.features
         << " max-domain=" << g.max_domain << " max-parents=" << g.max_parents
         << " statements=" << g.statements << " clauses=" << g.clauses
         << " cycles=" << g.cycles;
  session.digest_text(params.str());
  pc::Rng rng(g.seed);
  std::string text;
  if (g.kind == "cpnet") {
    text = pc::serialize(pc::random_cpnet(rng, {g.features, 2, g.max_domain, g.max_parents}));
  } else if (g.kind == "set") {
    pc::StatementSetShape shape{g.features, g.max_domain, g.max_parents, g.statements, g.cycles, 0};
    text = pc::serialize(pc::random_statement_set(rng, shape));
  } else {
    text = pc::to_dimacs(pc::random_cnf(rng, g.features, g.clauses));
  }
  Run run;
  run.results = {{"kind", g.kind}, {"seed", g.seed}};
  if (g.out.empty()) {
    run.results["text"] = text;
  } else {
    write_file(g.out, text);
    run.results["output"] = g.out;
  }
  return run;
}

// .. report ..................................................................

Json base_report(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return {{"command", args}, {"tool_version", PREFCOMP_VERSION}, {"input_digest", nullptr}};
}

int emit(Json report, int exit_code, std::chrono::steady_clock::time_point start) {
  const auto ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  report["elapsed_ms"] = std::round(ms * 1000) / 1000;
  report["exit_code"] = exit_code;
  std::cout << report.dump(2) << "\n";
  return exit_code;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  Json report = base_report(argc, argv);

  CLI::App app{"Conditional preference statements, CP-nets and their soft-constraint compilations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", PREFCOMP_VERSION);
  Caps caps;
  app.add_option("--max-outcomes", caps.max_outcomes, "Cap on the outcome space explored by the oracle")
      ->envname("PREFCOMP_MAX_OUTCOMES")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-parents", caps.max_parents, "Cap on the parent count per feature for the table algorithm")
      ->check(CLI::PositiveNumber);

  std::string file, method, semiring = "minplus", slo_combine = "lexmin", out, lhs, rhs;
  bool dump_tables = false, branch_and_bound = false;
  std::size_t max_pairs = 4096;
  const auto combine_choice = CLI::IsMember({"lexmin", "pointwise-min"});

  auto* validate = app.add_subcommand("validate", "Classify a statement file as a proper CP-net or a general set");
  validate->add_option("file", file, "Statement file")->required();

  auto* sat = app.add_subcommand("sat", "Decide whether some outcome is undominated");
  sat->add_option("file", file, "Statement file")->required();
  method = "poly";
  sat->add_option("--method", method, "poly, brute or 2sat")->check(CLI::IsMember({"poly", "brute", "2sat"}));
  sat->add_flag("--dump-tables", dump_tables, "Include the undominance tables (poly only)");

  auto* asym = app.add_subcommand("asym", "Check that the induced relation is asymmetric");
  asym->add_option("file", file, "Statement file")->required();

  std::string optimal_method = "sweep";
  auto* optimal = app.add_subcommand("optimal", "Optimal outcomes of a CP-net or a compiled problem");
  optimal->add_option("file", file, "Statement file or compiled problem")->required();
  optimal->add_option("--method", optimal_method, "sweep (proper acyclic CP-nets) or oracle")
      ->check(CLI::IsMember({"sweep", "oracle"}));
  optimal->add_flag("--branch-and-bound", branch_and_bound, "Depth-first search for compiled problems");

  auto* compile = app.add_subcommand("compile", "Compile an acyclic CP-net to a soft-constraint problem");
  compile->add_option("file", file, "Statement file")->required();
  compile->add_option("--semiring", semiring, "minplus or slo")->check(CLI::IsMember({"minplus", "slo"}));
  compile->add_option("--slo-combine", slo_combine, "lexmin or pointwise-min")->check(combine_choice);
  compile->add_option("-o,--output", out, "Write the problem document here");

  std::string compare_method = "cpnet";
  auto* compare = app.add_subcommand("compare", "Compare two outcomes");
  compare->add_option("file", file, "Statement file or compiled problem")->required();
  compare->add_option("--lhs", lhs, "Outcome, e.g. A=a,B=b!")->required();
  compare->add_option("--rhs", rhs, "Outcome")->required();
  compare->add_option("--method", compare_method, "cpnet, minplus or slo")
      ->check(CLI::IsMember({"cpnet", "minplus", "slo"}));
  compare->add_option("--slo-combine", slo_combine, "lexmin or pointwise-min")->check(combine_choice);

  auto* tabulate = app.add_subcommand("tabulate", "Tabulate CP-net dominance against both approximations");
  tabulate->add_option("file", file, "Statement file")->required();
  tabulate->add_option("--slo-combine", slo_combine, "lexmin or pointwise-min")->check(combine_choice);
  tabulate->add_option("--max-pair-outcomes", max_pairs, "Cap on outcomes for all-pairs analysis");

  auto* check = app.add_subcommand("check-preservation", "Verify the preservation properties of both compilations");
  check->add_option("file", file, "Statement file")->required();
  check->add_option("--slo-combine", slo_combine, "lexmin or pointwise-min")->check(combine_choice);
  check->add_option("--max-pair-outcomes", max_pairs, "Cap on outcomes for all-pairs analysis");

  auto* encode = app.add_subcommand("encode-3sat", "Encode a DIMACS CNF formula as preference statements");
  encode->add_option("file", file, "DIMACS file")->required();
  encode->add_option("-o,--output", out, "Write the statement file here");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a seeded random instance");
  generate->add_option("kind", gen.kind, "cpnet, set or cnf")->check(CLI::IsMember({"cpnet", "set", "cnf"}));
  generate->add_option("--seed", gen.seed, "Random seed")->required();
  generate->add_option("--features", gen.features, "Feature (or variable) count")->check(CLI::PositiveNumber);
  generate->add_option("--max-domain", gen.max_domain, "Largest domain")->check(CLI::Range(2, 26));
  generate->add_option("--max-parents", gen.max_parents, "Largest parent set");
  generate->add_option("--statements", gen.statements, "Statements per feature (set)");
  generate->add_option("--clauses", gen.clauses, "Clause count (cnf)");
  generate->add_flag("--cycles", gen.cycles, "Allow cyclic dependence (set)");
  generate->add_option("-o,--output", gen.out, "Write the instance here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report["error"] = error_json("usage", e.what());
    return emit(std::move(report), kError, start);
  }

  Session session;
  Run run;
  try {
    const auto* sub = app.get_subcommands().front();
    report["subcommand"] = sub->get_name();
    if (sub == validate) run = cmd_validate(session, file);
    else if (sub == sat) run = cmd_sat(session, file, method, dump_tables, caps);
    else if (sub == asym) run = cmd_asym(session, file, caps);
    else if (sub == optimal) run = cmd_optimal(session, file, optimal_method, branch_and_bound, caps);
    else if (sub == compile) run = cmd_compile(session, file, semiring, slo_combine, out);
    else if (sub == compare) run = cmd_compare(session, file, lhs, rhs, compare_method, slo_combine, caps);
    else if (sub == tabulate) run = cmd_tabulate(session, file, slo_combine, max_pairs, caps);
    else if (sub == check) run = cmd_check(session, file, slo_combine, max_pairs, caps);
    else if (sub == encode) run = cmd_encode(session, file, out);
    else run = cmd_generate(session, gen);
  } catch (const pc::ParseError& e) {
    report["error"] = error_json("parse", session.path().empty()
                                              ? std::string(e.what())
                                              : session.path() + ": " + e.what());
    run.exit_code = kError;
  } catch (const pc::SizeError& e) {
    report["error"] = error_json("cap", e.what());
    run.exit_code = kError;
  } catch (const pc::PreconditionError& e) {
    report["error"] = error_json("precondition", e.what());
    run.exit_code = kError;
  } catch (const pc::Error& e) {
    report["error"] = error_json("model", e.what());
    run.exit_code = kError;
  } catch (const IoError& e) {
    report["error"] = error_json("io", e.what());
    run.exit_code = kError;
  } catch (const UsageError& e) {
    report["error"] = error_json("usage", e.what());
    run.exit_code = kError;
  }
  if (!session.digest().empty()) report["input_digest"] = session.digest();
  if (!report.contains("error")) report["results"] = std::move(run.results);
  return emit(std::move(report), run.exit_code, start);
}
