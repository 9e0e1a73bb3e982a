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

#include <sstream>

#include "doctest.h"
#include "doext/registry.hpp"
#include "support.hpp"

using namespace doext;

namespace {

// Blocks "[A]" followed by the relations of that family in TeX notation.
std::map<std::string, std::vector<std::string>> tex_relations() {
  std::map<std::string, std::vector<std::string>> out;
  std::istringstream in(testing::read_file(std::string(DOEXT_TEST_DATA_DIR) + "/relations_tex.txt"));
  std::string line, current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      current = line.substr(1, line.find(']') - 1);
      continue;
    }
    out[current].push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("the registry holds 26 families and the Z misprint") {
  const auto& reg = testing::registry();
  auto primary = reg.primary();
  REQUIRE(primary.size() == 26);
  for (std::size_t i = 0; i < 26; ++i) CHECK(primary[i]->label == std::string(1, char('A' + i)));
  CHECK(reg.find("Z", "misprint").name() == "Z[misprint]");
  CHECK_THROWS_AS(reg.find("AA"), UsageError);
  CHECK_THROWS_AS(reg.find("D", "misprint"), UsageError);
}

TEST_CASE("rendered relations match the TeX transcription") {
  auto golden = tex_relations();
  REQUIRE(golden.size() == 26);
  for (const FamilySpec* fs : testing::registry().primary()) {
    CAPTURE(fs->label);
    auto rendered = render_relations(*fs);
    const auto& expected = golden.at(fs->label);
    REQUIRE(rendered.size() == expected.size());
    for (std::size_t i = 0; i < rendered.size(); ++i)
      CHECK(normalize_relation_text(rendered[i]) == normalize_relation_text(expected[i]));
  }
}

TEST_CASE("malformed input") {
  auto load = [](const std::string& text) {
    std::istringstream in(text);
    return load_families(in, "inline");
  };
  CHECK_THROWS_AS(load("format = doext-registry/1\nfamily = A\nQ = 1\n"), MalformedRegistry);
  CHECK_THROWS_AS(load("format = doext-registry/9\n"), MalformedRegistry);
  CHECK_THROWS_AS(load("format = doext-registry/1\nQ = 1, 0\n"), MalformedRegistry);
  try {
    load("format = doext-registry/1\n\nfamily = A\nQ = 1, 0\nnot a field\n");
    FAIL("expected MalformedRegistry");
  } catch (const MalformedRegistry& e) {
    CHECK(std::string(e.what()).find("inline:5") != std::string::npos);
  }
}

TEST_CASE("choices and parameter validation") {
  CHECK_THROWS_AS(testing::family("D"), UsageError);
  CHECK_THROWS_AS(testing::family("D", {{Param::p, "2"}}), UsageError);
  CHECK_NOTHROW(testing::family("D", {{Param::p, "-1"}}));
  // O and P exclude f = 1.
  CHECK_THROWS(testing::family("O", {{Param::f, "1"}}));
  // B needs p^2 = -1; a rational p violates it.
  CHECK_THROWS(testing::family("B", {{Param::p, "2"}}));
}

TEST_CASE("a_{ijst} indexing") {
  auto a = testing::family("A");
  // A: y2*x2 = -2*x2*y1 - x1*y2 + x2*y2
  CHECK(a.a(2, 1, 2, 2) == ParamScalar(-2));
  CHECK(a.a(2, 2, 2, 1) == ParamScalar(-1));
  CHECK(a.a(2, 2, 2, 2) == ParamScalar(1));
  CHECK(a.a(1, 2, 2, 1) == ParamScalar(1));
  CHECK(a.a(1, 1, 1, 1) == ParamScalar(1));
}

TEST_CASE("consistency of every family") {
  for (const auto& inst : testing::all_families()) {
    CAPTURE(inst.spec.label);
    auto rep = check_consistency(inst);
    CHECK(rep.passed());
    CHECK(rep.determinant_nonzero);
    CHECK_FALSE(rep.determinant.is_zero());
  }
}

TEST_CASE("dropping the constraint of B breaks consistency") {
  Specialization sp;
  sp.drop_constraints = true;
  auto b = instantiate(testing::registry().find("B"), sp);
  auto rep = check_consistency(b);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.failures().empty());
  CHECK_THROWS_AS(require_consistent(b), ConsistencyFailure);
}

TEST_CASE("the Z misprint is inconsistent") {
  auto z = testing::family("Z", {}, "misprint");
  CHECK_FALSE(check_consistency(z).passed());
  CHECK(check_consistency(testing::family("Z")).passed());
}

TEST_CASE("determinants") {
  auto f = ParamScalar::parameter(Param::f);
  CHECK(determinant({{ParamScalar(1), ParamScalar(2)}, {ParamScalar(3), ParamScalar(4)}}) == ParamScalar(-2));
  CHECK(determinant({{f, ParamScalar(1)}, {ParamScalar(1), f}}) == f * f - ParamScalar(1));
  auto o = testing::family("O");
  CHECK(check_consistency(o).determinant == (ParamScalar(1) - f).pow(2));
}
