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
#include "doext/linalg.hpp"
#include "support.hpp"

using namespace doext;

namespace {

ParamScalar s(const char* text) { return parse_scalar(text); }

ScalarVector mat_vec(const ScalarMatrix& m, const ScalarVector& v) {
  ScalarVector out;
  for (const auto& row : m) {
    ParamScalar acc;
    for (std::size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
    out.push_back(acc);
  }
  return out;
}

bool all_zero(const ScalarVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("rank of rational matrices") {
  ScalarMatrix m = {{s("1"), s("2"), s("3")}, {s("2"), s("4"), s("6")}, {s("1"), s("0"), s("1")}};
  CHECK(matrix_rank(m, 3) == 2);
  CHECK(matrix_rank({}, 3) == 0);
  CHECK(matrix_rank({{s("0"), s("0")}}, 2) == 0);
  auto e = row_echelon(m, 3);
  CHECK((e.pivots == std::vector<std::size_t>{0, 1}));
}

TEST_CASE("kernel of a rational matrix") {
  ScalarMatrix m = {{s("1"), s("2"), s("3")}, {s("2"), s("4"), s("6")}, {s("1"), s("0"), s("1")}};
  auto k = kernel_basis(m, 3);
  REQUIRE(k.size() == 1);
  // x + 2y + 3z = 0, x + z = 0: (-1, -1, 1) up to scale, positive first entry
  CHECK((k[0] == ScalarVector{s("1"), s("1"), s("-1")}));
}

TEST_CASE("kernel over a parameter") {
  ScalarMatrix m = {{s("p"), s("1")}, {s("p^2"), s("p")}};
  CHECK(matrix_rank(m, 2) == 1);
  auto k = kernel_basis(m, 2);
  REQUIRE(k.size() == 1);
  CHECK(all_zero(mat_vec(m, k[0])));
  CHECK(k[0][0].denominator().is_constant());

  ScalarMatrix g = {{s("f - 1"), s("f^2 - 1")}, {s("1"), s("f + 1")}};
  auto kg = kernel_basis(g, 2);
  REQUIRE(kg.size() == 1);
  CHECK((kg[0] == ScalarVector{s("f + 1"), s("-1")}));
}

TEST_CASE("clearing denominators") {
  auto v = clear_denominators({s("1/2"), s("-f/3"), s("0")});
  CHECK((v == ScalarVector{s("3"), s("-2*f"), s("0")}));
  auto w = clear_denominators({s("0"), s("-2"), s("4*f")});
  CHECK((w == ScalarVector{s("0"), s("1"), s("-2*f")}));
  auto u = clear_denominators({s("1/(f + 1)"), s("1/(f - 1)")});
  CHECK((u == ScalarVector{s("f - 1"), s("f + 1")}));
}

TEST_CASE("rank plus nullity on random integer matrices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-2, 2), dim(1, 6);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = dim(rng), n = dim(rng);
    ScalarMatrix m(r, ScalarVector(n));
    for (auto& row : m)
      for (auto& x : row) x = ParamScalar(c(rng));
    auto k = kernel_basis(m, n);
    CHECK(matrix_rank(m, n) + k.size() == n);
    for (const auto& v : k) CHECK(all_zero(mat_vec(m, v)));
    if (!k.empty()) {
      ScalarMatrix km = k;
      CHECK(matrix_rank(km, n) == k.size());
    }
  }
}
