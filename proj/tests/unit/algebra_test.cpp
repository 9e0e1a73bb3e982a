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

#include "doctest.h"
#include "support.hpp"
#include "doext/algebra.hpp"
#include "doext/expr.hpp"

using namespace doext;

TEST_CASE("letters and word order") {
  CHECK(letter_name(Letter::y2) == "y2");
  CHECK(letter_from_name("x2") == Letter::x2);
  CHECK_FALSE(letter_from_name("z1").has_value());

  Word a{Letter::x2, Letter::x1};
  Word b{Letter::x1, Letter::x2};
  CHECK(deglex_less(b, a));
  CHECK(deglex_less(Word{Letter::y2}, Word{Letter::x1, Letter::x1}));
  CHECK_FALSE(a.is_pbw());
  CHECK(b.is_pbw());
  CHECK(a.leftmost_descent() == 0u);
  CHECK(Word({Letter::x1, Letter::y2, Letter::y1}).leftmost_descent() == 1u);
  CHECK(Word({Letter::x1, Letter::y1, Letter::x2}).bidegree() == Bidegree{2, 1});
  CHECK(Word::power(Letter::y1, 3).to_string() == "y1^3");
  CHECK(Word().to_string() == "1");
  CHECK(Word({Letter::x1, Letter::x1, Letter::x2, Letter::y2}).to_string() == "x1^2*x2*y2");
}

TEST_CASE("PBW enumeration") {
  auto m = enumerate_pbw({1, 1});
  REQUIRE(m.size() == 4);
  CHECK(m[0].word().to_string() == "x1*y1");
  CHECK(m[1].word().to_string() == "x1*y2");
  CHECK(m[2].word().to_string() == "x2*y1");
  CHECK(m[3].word().to_string() == "x2*y2");
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 4; ++b) {
      auto all = enumerate_pbw({a, b});
      CHECK(all.size() == (a + 1) * (b + 1));
      for (const auto& mono : all) {
        CHECK(mono.bidegree() == Bidegree{a, b});
        CHECK(mono.word().is_pbw());
        CHECK(PBWMonomial::from_word(mono.word()) == mono);
      }
    }
}

TEST_CASE("free algebra arithmetic") {
  auto x1 = AlgebraElement::generator(Letter::x1);
  auto x2 = AlgebraElement::generator(Letter::x2);
  CHECK(x2 * x1 != x1 * x2);
  CHECK((x1 * x2 - x1 * x2).is_zero());
  CHECK((x1 + x2).pow(2) == x1 * x1 + x1 * x2 + x2 * x1 + x2 * x2);
  CHECK(AlgebraElement(ParamScalar(3)).is_scalar());
  CHECK(AlgebraElement(ParamScalar(0)).is_zero());
  auto e = parse_element("2*x1*y1 - x2 + 5");
  CHECK(e.coefficient(Word{Letter::x1, Letter::y1}) == ParamScalar(2));
  CHECK(e.scalar_value() == ParamScalar(5));
  CHECK_FALSE(e.is_homogeneous());
  CHECK(raw_commutator(x1, x2) == x1 * x2 - x2 * x1);
  CHECK(raw_commutator(x1, x1).is_zero());
}

TEST_CASE("bidegree split and homogeneity") {
  auto e = parse_element("x1*y1 + y2*x2 + x1^2 + 3");
  auto parts = bidegree_split(e);
  REQUIRE(parts.size() == 3);
  CHECK(parts.at({1, 1}) == parse_element("x1*y1 + y2*x2"));
  CHECK(parts.at({2, 0}).bidegree() == Bidegree{2, 0});
  CHECK(parts.at({0, 0}) == parse_element("3"));
  CHECK(parse_element("x1*y2 - y1*x2").bidegree() == Bidegree{1, 1});
}

TEST_CASE("canonical rendering") {
  CHECK(parse_element("y1 + x1").to_string() == "x1 + y1");
  CHECK(parse_element("-x1^2*y1").to_string() == "-x1^2*y1");
  CHECK(parse_element("p*x1*y1*y2").to_string() == "(p)*x1*y1*y2");
  CHECK(parse_element("-2*p*x1*y1*y2").to_string() == "(-2*p)*x1*y1*y2");
  CHECK(parse_element("0").to_string() == "0");
}
