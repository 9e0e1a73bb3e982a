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

#include <random>
#include <sstream>

#include "doctest.h"
#include "doext/rewrite.hpp"
#include "support.hpp"

using namespace doext;
using testing::el;

TEST_CASE("family D hand computations") {
  for (const char* p : {"1", "-1"}) {
    CAPTURE(p);
    auto d = testing::family("D", {{Param::p, p}});
    Reducer red(d.system);
    // y1*x2 = p*x1*y2 + x2*y1 and y2*x2 = -x1*y1 + x2*y2 for D, expanded by hand.
    CHECK(normal_form(el("y1^2*x2", d), d.system) == el("x2*y1^2 - 2*p*x1*y1*y2", d));
    CHECK(normal_form(el("y2^2*x2", d), d.system) == el("x2*y2^2 + 2*x1*y1*y2", d));
    CHECK(red.normal_form(el("y1^2*x2", d)) == el("x2*y1^2 - 2*p*x1*y1*y2", d));
    CHECK(red.normal_form(el("y2^2*x2", d)) == el("x2*y2^2 + 2*x1*y1*y2", d));
    CHECK(red.commutator(el("x1^2", d), el("x2", d)).is_zero());
  }
}

TEST_CASE("quantum plane powers") {
  // B: x2*x1 = p*x1*x2 with p^2 = -1, so x2*x1^n = p^n x1^n x2.
  auto b = testing::family("B");
  CHECK(normal_form(el("x2*x1^3", b), b.system) == el("-p*x1^3*x2", b));
  CHECK(normal_form(el("x2*x1^4", b), b.system) == el("x1^4*x2", b));
  CHECK(normal_form(el("x2^2*x1^2", b), b.system) == el("x1^2*x2^2", b));
}

TEST_CASE("normal forms are PBW and fixed") {
  auto o = testing::family("O");
  auto nf = normal_form(el("y2*y1*x2*x1", o), o.system);
  for (const auto& [w, c] : nf.terms()) CHECK(w.is_pbw());
  CHECK(normal_form(nf, o.system) == nf);
  CHECK(normal_form(el("x1*x2*y1*y2", o), o.system) == el("x1*x2*y1*y2", o));
}

TEST_CASE("single steps and traces") {
  auto o = testing::family("O");
  auto r = reduce_once(el("x1*x2", o), o.system);
  CHECK_FALSE(r.changed);
  std::ostringstream tr;
  auto s = reduce_once(el("y1*x1", o), o.system, &tr);
  CHECK(s.changed);
  CHECK(s.value == el("x1*y1 + f*x2*y2", o));
  CHECK(tr.str().find("rule(y1*x1)") != std::string::npos);
}

TEST_CASE("step budget") {
  auto o = testing::family("O");
  CHECK_THROWS_AS(normal_form(el("y2^3*x2^3", o), o.system, 2), StepBudgetExceeded);
  CHECK_NOTHROW(normal_form(el("y2^3*x2^3", o), o.system));
}

TEST_CASE("reducer agrees with pass-based rewriting") {
  std::mt19937_64 rng(5);
  for (const char* label : {"A", "G", "K", "O", "Z"}) {
    CAPTURE(label);
    std::map<Param, std::string> values;
    if (std::string(label) == "K") values[Param::q] = "-1";
    auto inst = testing::family(label, values);
    Reducer red(inst.system);
    for (int i = 0; i < 10; ++i) {
      auto e = testing::random_element(rng, inst, 5, 3);
      CHECK(red.normal_form(e) == normal_form(e, inst.system));
    }
  }
}

TEST_CASE("termination and confluence of a registry system") {
  auto k = testing::family("K", {{Param::q, "1"}});
  CHECK(check_termination(k.system).passed());
  auto conf = check_local_confluence(k.system);
  CHECK(conf.overlaps.size() == 4);
  CHECK(conf.confluent());
}

TEST_CASE("an incompatible system has a failing overlap") {
  auto x1 = AlgebraElement::generator(Letter::x1);
  auto x2 = AlgebraElement::generator(Letter::x2);
  auto y1 = AlgebraElement::generator(Letter::y1);
  auto y2 = AlgebraElement::generator(Letter::y2);
  std::vector<RewriteRule> rules = {
      {Letter::x2, Letter::x1, x1 * x2 + x1 * x1},
      {Letter::y2, Letter::y1, y1 * y2},
      {Letter::y1, Letter::x1, x1 * y1},
      {Letter::y1, Letter::x2, ParamScalar(2) * x2 * y1},
      {Letter::y2, Letter::x1, x1 * y2},
      {Letter::y2, Letter::x2, x2 * y2},
  };
  RewriteSystem sys(rules, nullptr);
  CHECK(sys.has_standard_keys());
  CHECK(check_termination(sys).passed());
  auto conf = check_local_confluence(sys);
  CHECK_FALSE(conf.confluent());
  bool found = false;
  for (const auto& o : conf.overlaps)
    if (o.word == Word{Letter::y1, Letter::x2, Letter::x1}) found = !o.agrees;
  CHECK(found);
}

TEST_CASE("a rule that does not decrease fails termination") {
  auto x1 = AlgebraElement::generator(Letter::x1);
  auto x2 = AlgebraElement::generator(Letter::x2);
  auto y1 = AlgebraElement::generator(Letter::y1);
  auto y2 = AlgebraElement::generator(Letter::y2);
  std::vector<RewriteRule> rules = {
      {Letter::x2, Letter::x1, x1 * x2 + x2 * x2},
      {Letter::y2, Letter::y1, y1 * y2},
      {Letter::y1, Letter::x1, x1 * y1},
      {Letter::y1, Letter::x2, x2 * y1},
      {Letter::y2, Letter::x1, x1 * y2},
      {Letter::y2, Letter::x2, x2 * y2},
  };
  auto rep = check_termination(RewriteSystem(rules, nullptr));
  CHECK_FALSE(rep.passed());
  CHECK(rep.rules.front().offending.size() == 1);
}
