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

#include "doctest.h"
#include "doext/expr.hpp"
#include "support.hpp"

using namespace doext;

TEST_CASE("precedence and associativity") {
  CHECK(dump(*parse_expression("1 + 2*x1^2")) == "(+ 1 (* 2 (^ x1 2)))");
  CHECK(dump(*parse_expression("x1 - x2 - y1")) == "(- (- x1 x2) y1)");
  CHECK(dump(*parse_expression("-x1^2")) == "(neg (^ x1 2))");
  CHECK(dump(*parse_expression("(x1 + x2)^2*y1")) == "(* (^ (+ x1 x2) 2) y1)");
  CHECK(dump(*parse_expression("f/2*x1")) == "(* (/ f 2) x1)");
  CHECK(dump(*parse_expression("--p")) == "(neg (neg p))");
}

TEST_CASE("parse errors report position and expectations") {
  try {
    parse_expression("x1 + * x2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse_expression("x3"), ParseError);
  CHECK_THROWS_AS(parse_expression("(x1 + x2"), ParseError);
  CHECK_THROWS_AS(parse_expression("x1^"), ParseError);
  CHECK_THROWS_AS(parse_expression("x1^-1"), ParseError);
  CHECK_THROWS_AS(parse_expression(""), ParseError);
  CHECK_THROWS_AS(parse_expression("x1 x2"), ParseError);
}

TEST_CASE("lowering") {
  CHECK(parse_element("(x1 + x2)^2") == parse_element("x1*x1 + x1*x2 + x2*x1 + x2*x2"));
  CHECK(parse_element("x1*(f + 1)/2") == parse_element("(f/2)*x1 + x1/2"));
  CHECK_THROWS_AS(parse_element("1/x1"), LoweringError);
  CHECK_THROWS_AS(parse_element("x1/(f - f)"), DivisionByZero);
  CHECK(parse_scalar("(f^2 - 1)/(f - 1)") == parse_scalar("f + 1"));
  CHECK_THROWS_AS(parse_scalar("x1 + 1"), LoweringError);
}

TEST_CASE("bound parameters are substituted") {
  auto d = testing::family("D", {{Param::p, "-1"}});
  CHECK(testing::el("p*x1 + y1", d) == parse_element("-x1 + y1"));
  auto c = testing::family("C");
  auto e = testing::el("p^3*x1", c);
  CHECK(e == parse_element("x1"));
}

TEST_CASE("rendering round-trips through the parser") {
  std::mt19937_64 rng(2026);
  for (const auto& inst : testing::all_families()) {
    for (int i = 0; i < 4; ++i) {
      AlgebraElement e = testing::random_element(rng, inst, 6, 5);
      CHECK(parse_element(e.to_string(), inst.environment()) == e);
    }
  }
  // 100 elements in a family with a free parameter and a constraint-free context.
  auto o = testing::family("O");
  for (int i = 0; i < 100; ++i) {
    AlgebraElement e = testing::random_element(rng, o, 6, 6);
    REQUIRE(parse_element(e.to_string(), o.environment()) == e);
  }
}
