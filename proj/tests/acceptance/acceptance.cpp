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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "prefcomp/cnf.hpp"
#include "prefcomp/compile.hpp"
#include "prefcomp/dsl.hpp"
#include "prefcomp/generate.hpp"
#include "prefcomp/oracle.hpp"
#include "prefcomp/satcheck.hpp"
#include "prefcomp/semiring.hpp"
#include "prefcomp/two_sat.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace prefcomp;
using prefcomp::testing::load;

namespace {

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << " " << detail << "\n";
  if (!ok) ++failures;
}

template <class F>
void criterion(const char* id, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("threw: ") + e.what());
  }
}

std::string str(const BigInt& v) { return v.str(); }

void ac1() {
  const auto c = compile_minplus(load("n0.pref"));
  const auto& e = c.net.soft_edges;
  const bool ok = e[3].weight == 1 && e[2].weight == 2 && e[0].weight == 4 && e[1].weight == 4;
  report("AC1", ok,
         "min+ weights on N0: w(A)=" + str(e[0].weight) + " w(B)=" + str(e[1].weight) +
             " w(C)=" + str(e[2].weight) + " w(D)=" + str(e[3].weight) + " (want 4,4,2,1)");
}

void ac2() {
  const StatementSet n0 = load("n0.pref");
  const auto c = compile_minplus(n0);
  const Penalty p0 = c.evaluate(parse_outcome(n0, "A=a,B=b,C=c,D=d"));
  const Penalty p1 = c.evaluate(parse_outcome(n0, "A=a,B=b!,C=c,D=d"));
  report("AC2", p0 == Penalty(0) && p1 == Penalty(6),
         "min+ penalties: abcd=" + p0.to_string() + " ab!cd=" + p1.to_string() +
             " (want 0, 6)");
}

void ac3() {
  const StatementSet n0 = load("n0.pref");
  const auto c = compile_slo(n0);
  bool positions = true;
  for (FeatureId f = 0; f < 4; ++f) positions &= c.net.soft_edges[f].slo_position == f;
  const SloValue v0 = c.evaluate(parse_outcome(n0, "A=a,B=b,C=c,D=d"));
  const SloValue v1 = c.evaluate(parse_outcome(n0, "A=a,B=b!,C=c,D=d"));
  report("AC3",
         positions && v0 == SloValue({1, 1, 1, 1}) && v1 == SloValue({1, 0, 1, 1}),
         "SLO values with positions A,B,C,D: abcd=" + v0.to_string() +
             " ab!cd=" + v1.to_string() + " (want (1,1,1,1), (1,0,1,1))");
}

void ac4() {
  const StatementSet o1 = load("omega1.pref");
  const auto v = satisfiable(o1);
  const auto& before = v.initial_tables.tables[1];
  const auto& after = v.tables.tables[1];
  auto has = [](const UndominanceTable& t, ValueId a, ValueId c) {
    const std::vector<ValueId> values{a, 0, c};
    return t.find(values) != nullptr;
  };
  auto vals = [](const UndominanceTable& t, ValueId a, ValueId c) {
    const std::vector<ValueId> values{a, 0, c};
    const auto* e = t.find(values);
    return e ? *e : std::vector<ValueId>{};
  };
  using V = std::vector<ValueId>;
  // Values: A a=0 a!=1; C c=0 c!=1; B b=0 b!=1.
  const V t_a = vals(v.initial_tables.tables[0], 0, 0);
  const V t_c = vals(v.initial_tables.tables[2], 0, 0);
  const bool table_ok = t_a == V{0, 1} && t_c == V{0} && !has(before, 0, 0) &&
                        vals(before, 0, 1) == V{0} && vals(before, 1, 1) == V{0, 1} &&
                        vals(before, 1, 0) == V{0, 1} &&
                        v.initial_tables.entry_count() == 5;
  const bool prune_ok = !has(after, 0, 1) && !has(after, 1, 1) && has(after, 1, 0) &&
                        v.tables.entry_count() == v.initial_tables.entry_count() - 2;
  bool witness_ok = false;
  std::string w = "none";
  if (v.witness) {
    w = format_outcome(o1, *v.witness);
    const auto und = undominated_set(o1);
    witness_ok = std::find(und.begin(), und.end(), *v.witness) != und.end();
  }
  report("AC4", table_ok && prune_ok && v.satisfiable && witness_ok,
         std::string("Omega1 tables ") + (table_ok ? "match" : "differ") +
             ", pruning " + (prune_ok ? "removes exactly [a&c!],[a!&c!]" : "differs") +
             ", witness " + w + (witness_ok ? " undominated" : " NOT undominated"));
}

void ac5() {
  const StatementSet o2 = load("omega2.pref");
  const auto v = satisfiable(o2);
  const Outcome acb = parse_outcome(o2, "A=a,B=b,C=c!");
  const auto und = undominated_set(o2);
  const bool among = std::find(und.begin(), und.end(), acb) != und.end();
  const auto asym = is_asymmetric(o2);
  bool cycle_on_b = asym.cycle.size() == 2;
  if (cycle_on_b) {
    const auto& x = asym.cycle[0];
    const auto& y = asym.cycle[1];
    cycle_on_b = x[0] == y[0] && x[2] == y[2] && x[1] != y[1];
  }
  report("AC5", v.satisfiable && among && !asym.asymmetric && cycle_on_b,
         std::string("Omega2 sat=") + (v.satisfiable ? "yes" : "no") + ", ac!b " +
             (among ? "undominated" : "dominated") + ", asymmetric=" +
             (asym.asymmetric ? "yes" : "no") + ", cycle length " +
             std::to_string(asym.cycle.size()) + (cycle_on_b ? " on B" : ""));
}

void ac6() {
  Rng rng(6);
  std::size_t agree = 0, total = 0, sat = 0;
  for (int i = 0; i < 1200; ++i) {
    StatementSetShape shape;
    shape.features = 1 + i % 4;
    shape.max_domain = 2;
    shape.max_parents = 2;
    shape.max_statements_per_feature = 1 + i % 4;
    const StatementSet set = random_statement_set(rng, shape);
    const bool poly = satisfiable(set).satisfiable;
    const bool brute = is_satisfiable_bruteforce(set).satisfiable;
    ++total;
    agree += poly == brute;
    sat += brute;
  }
  report("AC6", agree == total,
         "table algorithm vs oracle: " + std::to_string(agree) + "/" + std::to_string(total) +
             " agree (" + std::to_string(sat) + " satisfiable)");
}

bool encoded_agrees(const CnfFormula& f) {
  const auto enc = encode_3sat(f);
  const bool encoded = !enc.has_empty_clause && is_satisfiable_bruteforce(enc.statements).satisfiable;
  return encoded == reference::truth_table_sat(f);
}

std::vector<std::vector<int>> clauses_over(int vars, std::size_t max_len) {
  std::vector<std::vector<int>> out;
  // Each variable absent, positive or negative.
  std::size_t combos = 1;
  for (int v = 0; v < vars; ++v) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<int> clause;
    std::size_t rest = code;
    for (int v = 1; v <= vars; ++v, rest /= 3)
      if (rest % 3) clause.push_back(rest % 3 == 1 ? v : -v);
    if (!clause.empty() && clause.size() <= max_len) out.push_back(clause);
  }
  return out;
}

void ac7() {
  std::size_t agree = 0, total = 0;
  auto check = [&](const CnfFormula& f) {
    ++total;
    agree += encoded_agrees(f);
  };
  // Every 2-variable formula over distinct non-tautological clauses.
  const auto two = clauses_over(2, 2);
  for (std::size_t mask = 0; mask < (std::size_t{1} << two.size()); ++mask) {
    CnfFormula f{2, {}};
    for (std::size_t i = 0; i < two.size(); ++i)
      if (mask >> i & 1) f.clauses.push_back(two[i]);
    check(f);
  }
  // Every 3-variable formula of at most five distinct clauses.
  const auto three = clauses_over(3, 3);
  std::vector<int> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    CnfFormula f{3, {}};
    for (int i : pick) f.clauses.push_back(three[i]);
    check(f);
    if (pick.size() == 5) return;
    for (std::size_t i = from; i < three.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  // Every subset of the eight full 3-clauses, including unsatisfiable ones.
  std::vector<std::vector<int>> full;
  for (const auto& c : three)
    if (c.size() == 3) full.push_back(c);
  for (std::size_t mask = 0; mask < (std::size_t{1} << full.size()); ++mask) {
    CnfFormula f{3, {}};
    for (std::size_t i = 0; i < full.size(); ++i)
      if (mask >> i & 1) f.clauses.push_back(full[i]);
    check(f);
  }
  const std::size_t exhaustive = total;
  Rng rng(7);
  std::size_t random_sat = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t vars = 4 + i % 3;
    const CnfFormula f = random_cnf(rng, vars, vars + i % (2 * vars));
    random_sat += reference::truth_table_sat(f);
    check(f);
  }
  report("AC7", agree == total,
         "3-SAT encoding: " + std::to_string(agree) + "/" + std::to_string(total) +
             " agree (" + std::to_string(exhaustive) + " exhaustive, 100 random of which " +
             std::to_string(random_sat) + " satisfiable)");
}

void ac8() {
  Rng rng(8);
  std::size_t violations = 0, strict = 0;
  for (int i = 0; i < 250; ++i) {
    CpNetShape shape;
    shape.features = 1 + i % 4;
    shape.max_domain = 3;
    const auto r = ApproximationAnalyzer(random_cpnet(rng, shape)).check_preservation();
    violations += r.minplus_violations.size();
    strict += r.strict_pairs;
  }
  report("AC8", violations == 0,
         "min+ preservation on 250 CP-nets: " + std::to_string(strict) +
             " dominance pairs, " + std::to_string(violations) + " violations");
}

void ac9() {
  const StatementSet n0 = load("n0.pref");
  const auto r = tabulate(n0);
  using R = CpRelation;
  using C = Comparison;
  const std::size_t minplus_bad =
      r.minplus.at(R::kBetter, C::kSecondBetter) + r.minplus.at(R::kBetter, C::kEqual) +
      r.minplus.at(R::kWorse, C::kFirstBetter) + r.minplus.at(R::kWorse, C::kEqual);
  const std::size_t slo_bad =
      r.slo.at(R::kBetter, C::kSecondBetter) + r.slo.at(R::kWorse, C::kFirstBetter);
  std::size_t itemized = 0;
  for (const auto& t : r.slo_ties) itemized += t.cpnet == R::kBetter;
  const auto pinned = classify_pair(n0, parse_outcome(n0, "A=a,B=b!,C=c,D=d"),
                                    parse_outcome(n0, "A=a,B=b!,C=c,D=d!"));
  const bool pin_ok = pinned.cpnet == R::kBetter && pinned.minplus == C::kFirstBetter &&
                      pinned.slo == C::kEqual;
  report("AC9",
         minplus_bad == 0 && slo_bad == 0 && pin_ok &&
             itemized == r.slo.at(R::kBetter, C::kEqual) && r.pairs == 240,
         "N0 tables over " + std::to_string(r.pairs) + " pairs: min+ forbidden mass " +
             std::to_string(minplus_bad) + ", SLO forbidden mass " + std::to_string(slo_bad) +
             ", SLO (>,=) ties itemized " + std::to_string(itemized) +
             ", (ab!cd, ab!cd!) = (" + std::string(symbol(pinned.cpnet)) + ", " +
             std::string(symbol(pinned.minplus)) + ", " + std::string(symbol(pinned.slo)) + ")");
}

template <CSemiring S>
std::size_t violations(const AxiomReport& r, std::ostringstream& log, const S& s) {
  std::size_t n = 0;
  for (const auto& v : r.violations) {
    n += v.occurrences;
    log << " " << s.name() << ":" << v.axiom << v.witness;
  }
  return n;
}

void ac10() {
  std::ostringstream log;
  std::size_t bad = 0, triples = 0;
  {
    ClassicalSemiring s;
    const bool all[] = {false, true};
    const auto r = check_axioms(s, std::span<const bool>(all));
    bad += violations(r, log, s);
    triples += r.triples_checked;
  }
  for (std::size_t n = 1; n <= 3; ++n)
    for (int max = 1; max <= 2; ++max) {
      SloSemiring s(n, max);
      const auto all = s.enumerate();
      const auto r = check_axioms(s, std::span<const SloValue>(all));
      bad += violations(r, log, s);
      triples += r.triples_checked;
    }
  Rng rng(10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> reals{0.0, 1.0};
  while (reals.size() < 200) reals.push_back(unit(rng));
  {
    FuzzySemiring s;
    const auto r = check_axioms_sampled(s, std::span<const double>(reals), 10000, rng);
    bad += violations(r, log, s);
    triples += r.triples_checked;
  }
  {
    ProbabilisticSemiring s;
    const auto r = check_axioms_sampled(s, std::span<const double>(reals), 10000, rng);
    bad += violations(r, log, s);
    triples += r.triples_checked;
  }
  {
    WeightedSemiring s;
    std::vector<Penalty> pens{Penalty::infinity(), Penalty(0)};
    std::uniform_int_distribution<std::int64_t> d(0, 1'000'000);
    while (pens.size() < 200) pens.push_back(Penalty(d(rng)));
    const auto r = check_axioms_sampled(s, std::span<const Penalty>(pens), 10000, rng);
    bad += violations(r, log, s);
    triples += r.triples_checked;
  }
  report("AC10", bad == 0,
         "semiring axioms over " + std::to_string(triples) + " triples: " +
             std::to_string(bad) + " violations" + log.str());
}

double seconds_to_compile(std::size_t n, Rng& rng) {
  CpNetShape shape;
  shape.features = n;
  shape.max_parents = 2;
  const StatementSet net = random_cpnet(rng, shape);
  using clock = std::chrono::steady_clock;
  std::vector<double> samples;
  for (int round = 0; round < 5; ++round) {
    std::size_t reps = 0;
    const auto start = clock::now();
    double elapsed = 0;
    while (elapsed < 0.02) {
      auto m = compile_minplus(net);
      auto s = compile_slo(net);
      reps += m.problem.constraints().size() > 0 && s.problem.constraints().size() > 0;
      elapsed = std::chrono::duration<double>(clock::now() - start).count();
    }
    samples.push_back(elapsed / static_cast<double>(reps));
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

void ac11() {
  Rng rng(11);
  std::size_t nets = 0, within = 0;
  for (int i = 0; i < 250; ++i) {
    CpNetShape shape;
    shape.features = 1 + i % 12;
    shape.max_domain = 2 + i % 3;
    shape.max_parents = i % 4;
    const StatementSet net = random_cpnet(rng, shape);
    const ScNet sc = build_scnet(net);
    const std::size_t n = net.feature_count();
    ++nets;
    within += sc.nodes.size() <= 2 * n && sc.edge_count() <= sc.graph.edge_count() + n;
  }
  // Least-squares slope of log(time) against log(n).
  std::vector<double> xs, ys;
  std::ostringstream times;
  for (std::size_t n : {8, 16, 32, 64}) {
    const double t = seconds_to_compile(n, rng);
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(t));
    times << " n=" << n << ":" << static_cast<long long>(t * 1e6) << "us";
  }
  const double mx = (xs[0] + xs[1] + xs[2] + xs[3]) / 4;
  const double my = (ys[0] + ys[1] + ys[2] + ys[3]) / 4;
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = num / den;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", slope);
  report("AC11", within == nets && slope <= 2.3,
         "size bounds hold on " + std::to_string(within) + "/" + std::to_string(nets) +
             " nets; compile log-log slope " + buf + " (max 2.3);" + times.str());
}

void ac12() {
  Rng rng(12);
  std::size_t applicable = 0, agree = 0;
  for (int i = 0; i < 2000; ++i) {
    StatementSetShape shape;
    shape.features = 1 + i % 4;
    shape.max_domain = 2;
    shape.max_condition = 1;
    shape.allow_cycles = i % 2 == 0;
    shape.max_statements_per_feature = 1 + i % 4;
    const StatementSet set = random_statement_set(rng, shape);
    const auto r = satisfiable_2sat(set);
    if (r.status == TwoSatStatus::kNotApplicable) continue;
    ++applicable;
    const bool brute = is_satisfiable_bruteforce(set).satisfiable;
    bool ok = (r.status == TwoSatStatus::kSatisfiable) == brute;
    if (ok && r.witness) ok = !reference::has_improving_flip(set, *r.witness);
    agree += ok;
  }
  report("AC12", applicable > 0 && agree == applicable,
         "2-SAT vs oracle: " + std::to_string(agree) + "/" + std::to_string(applicable) +
             " applicable instances agree");
}

}  // namespace

int main() {
  criterion("AC1", ac1);
  criterion("AC2", ac2);
  criterion("AC3", ac3);
  criterion("AC4", ac4);
  criterion("AC5", ac5);
  criterion("AC6", ac6);
  criterion("AC7", ac7);
  criterion("AC8", ac8);
  criterion("AC9", ac9);
  criterion("AC10", ac10);
  criterion("AC11", ac11);
  criterion("AC12", ac12);
  std::cout << (failures ? std::to_string(failures) + " criteria failed\n"
                         : std::string("all criteria passed\n"));
  return failures ? 1 : 0;
}
