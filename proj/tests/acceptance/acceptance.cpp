// Copyright 2026 The doext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>

#include "doext/center.hpp"
#include "doext/formulas.hpp"
#include "properties.hpp"

using namespace doext;
using namespace doext::testing;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

bool run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > limit_s) o.failures.push_back("runtime " + std::to_string(secs) + " s over the limit");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", secs);
  bool ok = o.failures.empty();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << buf << " s, limit "
            << limit_s << " s]";
  if (!o.detail.empty()) std::cout << " " << o.detail;
  std::cout << "\n";
  for (const auto& f : o.failures) std::cout << "    " << f << "\n";
  std::cout.flush();
  return ok;
}

Outcome family_d() {
  Outcome o;
  const auto& spec = registry().find("D");
  for (const char* p : {"1", "-1"}) {
    std::string tag = std::string("D[p=") + p + "] ";
    auto d = family("D", {{Param::p, p}});
    Reducer red(d.system);
    o.require(red.normal_form(el("y1^2*x2", d)) == el("x2*y1^2 - 2*p*x1*y1*y2", d), tag + "NF(y1^2*x2)");
    o.require(red.normal_form(el("y2^2*x2", d)) == el("x2*y2^2 + 2*x1*y1*y2", d), tag + "NF(y2^2*x2)");
    o.require(is_central(el("x1^2", d), red).central, tag + "x1^2 central");
    o.require(is_central(el("y2^2 + p*y1^2", d), red).central, tag + "y2^2 + p*y1^2 central");
    const ClaimSpec* claim = nullptr;
    for (const auto& c : spec.claims)
      for (const auto& [v, val] : c.params)
        if (v == Param::p && val == p) claim = &c;
    if (!claim) {
      o.failures.push_back(tag + "no center claim");
      continue;
    }
    auto rep = verify_table_entry(spec, *claim, {}, {{4, 4}, 2});
    o.require(rep.confirmed(), tag + rep.verdict());
    std::map<Bidegree, std::size_t> expected = {{{2, 0}, 1}, {{0, 2}, 1}, {{2, 2}, 1}, {{1, 0}, 0},
                                                {{0, 1}, 0}, {{1, 1}, 0}, {{2, 1}, 0}, {{1, 2}, 0}};
    for (const auto& dc : rep.degrees) {
      auto it = expected.find(dc.bidegree);
      if (it == expected.end()) continue;
      o.require(dc.kernel == it->second, tag + "kernel dimension at " + dc.bidegree.to_string() + " is " +
                                             std::to_string(dc.kernel));
      expected.erase(it);
    }
    o.require(expected.empty(), tag + "bidegrees missing from the report");
  }
  return o;
}

Outcome family_o() {
  Outcome o;
  auto fam = family("O");
  Reducer red(fam.system);
  auto w = el("x1^2 - f*x2^2", fam);
  for (const char* y : {"y1", "y2"}) {
    auto g = el(y, fam);
    auto lhs = red.multiply(red.normal_form(g), red.normal_form(w));
    auto rhs = red.multiply(red.normal_form(w), red.normal_form(g));
    rhs *= ParamScalar(1) - ParamScalar::parameter(Param::f, fam.context);
    o.require((lhs - rhs).is_zero(), std::string("NF(") + y + "*w - (1 - f)*w*" + y + ") != 0");
  }
  auto f2 = family("O", {{Param::f, "2"}});
  Reducer r2(f2.system);
  auto w2 = el("x1^2 - f*x2^2", f2);
  auto p2 = verify_power_central(w2, 2, r2);
  o.require(p2.central() && p2.agree(), "w^2 not confirmed central at f = 2");
  auto p1 = verify_power_central(w2, 1, r2);
  o.require(!p1.central() && p1.agree(), "w not confirmed non-central at f = 2");
  return o;
}

Outcome formula_suite() {
  Outcome o;
  FormulaOptions opt;
  opt.closed_nmax = 8;
  opt.recursion_nmax = 5;
  auto m = verify_formulas(registry(), opt);
  auto instances = formula_instances(registry()).size();
  for (const char* id : {"x2*x1^n", "x2^n*x1", "y2*y1^n", "y2^n*y1"}) {
    o.require(m.all_match(id, "closed"), std::string(id) + " closed form diverges");
    o.require(m.count(id, "closed") == 8 * (instances + 1), std::string(id) + " row count");
  }
  o.require(m.all_match("y_s*x_t^n", "expansion"), "y_s*x_t^n diverges from NF");
  o.require(m.count("y_s*x_t^n", "expansion") == instances * 4 * 5, "y_s*x_t^n row count");
  o.require(m.all_match("y_s^n*x_t", "normal-form"), "NF-derived y_s^n*x_t table diverges from NF");
  o.require(m.count("y_s^n*x_t", "printed") == instances * 4 * 5, "y_s^n*x_t matrix incomplete");
  std::set<std::string> labels;
  for (const auto& r : m.rows)
    if (r.identity == "y_s*x_t^n") labels.insert(r.family.substr(0, r.family.find('[')));
  o.require(labels.size() == 26, "y_s*x_t^n not covered for all 26 families");
  std::size_t printed_ok = 0, printed_all = m.count("y_s^n*x_t", "printed");
  for (const auto& r : m.rows)
    if (r.identity == "y_s^n*x_t" && r.form == "printed" && r.result.match) ++printed_ok;
  o.detail = "(" + std::to_string(instances) + " instances; printed y_s^n*x_t recursion matches " +
             std::to_string(printed_ok) + "/" + std::to_string(printed_all) + ")";
  return o;
}

Outcome tables() {
  Outcome o;
  std::size_t confirmed = 0, total = 0;
  for (const FamilySpec* fs : registry().primary()) {
    for (const auto& c : fs->claims) {
      ++total;
      auto rep = verify_table_entry(*fs, c, {}, {{4, 4}, 4});
      if (rep.confirmed()) {
        ++confirmed;
      } else {
        o.failures.push_back(c.id + ": " + rep.falsifications.front());
      }
    }
  }
  o.detail = "(" + std::to_string(confirmed) + "/" + std::to_string(total) + " claims confirmed)";
  return o;
}

Outcome consistency() {
  Outcome o;
  for (const auto& inst : formula_instances(registry())) {
    auto rep = check_consistency(inst);
    o.require(rep.passed(), inst.spec.name() + " " + inst.parameter_summary() + " fails the compatibility identities");
    o.require(rep.determinant_nonzero, inst.spec.name() + " det sigma = 0");
  }
  Specialization drop;
  drop.drop_constraints = true;
  o.require(!check_consistency(instantiate(registry().find("B"), drop)).passed(),
            "B passes without p^2 = -1");
  const auto& mis = registry().find("Z", "misprint");
  const auto& z = registry().find("Z");
  bool falsified = !check_consistency(instantiate(mis)).passed();
  for (const auto& c : z.claims) falsified = falsified && !verify_table_entry(mis, c, {}, {{2, 2}, 1}).confirmed();
  o.require(falsified, "Z misprint not falsified");
  return o;
}

Outcome cancellation() {
  Outcome o;
  for (const char* label : {"C", "E", "F", "I", "J", "S", "T", "U"}) {
    auto rep = cancellation_report(family(label), {3, 3}, 4);
    o.require(rep.trivial_center, std::string(label) + " center not trivial up to (3,3)");
    o.require(rep.verdict && rep.verdict->rfind("universally cancellative", 0) == 0,
              std::string(label) + " no cancellation verdict");
  }
  for (const char* p : {"1", "-1"}) {
    auto rep = cancellation_report(family("D", {{Param::p, p}}), {3, 3}, 4);
    o.require(!rep.verdict, std::string("D[p=") + p + "] unexpectedly received a verdict");
  }
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(20261015);
  std::size_t solves = 0;
  for (const auto& inst : formula_instances(registry())) {
    for (auto& f : nf_algebra_properties(inst, rng, 100, 6)) o.failures.push_back(f);
    for (auto& f : rewriting_properties(inst)) o.failures.push_back(f);
    std::vector<Bidegree> bds = {{1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}};
    for (auto& f : oracle_properties(inst, rng, bds)) o.failures.push_back(f);
    solves += bds.size();
  }
  o.detail = "(" + std::to_string(solves) + " symbolic solves checked against specializations)";
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  failed += !run(1, "family D hand computations and center claims", 30, family_d);
  failed += !run(2, "family O normal element and w^2 central", 10, family_o);
  failed += !run(3, "closed forms and recursions against normal forms", 300, formula_suite);
  failed += !run(4, "center and central subalgebra claims", 600, tables);
  failed += !run(5, "consistency of all families", 60, consistency);
  failed += !run(6, "universal cancellation verdicts", 300, cancellation);
  failed += !run(7, "normal form, rewriting and oracle properties", 600, properties);
  std::cout << (7 - failed) << "/7 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
