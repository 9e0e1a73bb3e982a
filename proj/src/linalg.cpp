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

#include "doext/linalg.hpp"

#include <gmpxx.h>

namespace doext {

namespace {

bool is_zero_row(const ScalarVector& r) {
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

mpz_class integer_lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class integer_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

Echelon row_echelon(ScalarMatrix m, std::size_t ncols) {
  Echelon out;
  std::erase_if(m, is_zero_row);
  ParamScalar prev(1);
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < m.size(); ++col) {
    std::size_t best = m.size();
    for (std::size_t r = top; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      if (best == m.size() || m[r][col].weight() < m[best][col].weight()) best = r;
    }
    if (best == m.size()) continue;
    std::swap(m[top], m[best]);
    const ScalarVector& piv = m[top];
    for (std::size_t r = top + 1; r < m.size(); ++r) {
      ScalarVector& row = m[r];
      if (row[col].is_zero()) {
        // Keep the Bareiss scaling uniform across rows.
        for (std::size_t j = col + 1; j < ncols; ++j)
          if (!row[j].is_zero()) row[j] = row[j] * piv[col] / prev;
        continue;
      }
      ParamScalar factor = row[col];
      row[col] = ParamScalar(0, piv[col].context());
      for (std::size_t j = col + 1; j < ncols; ++j)
        row[j] = (row[j] * piv[col] - factor * piv[j]) / prev;
    }
    prev = piv[col];
    out.pivots.push_back(col);
    ++top;
  }
  m.resize(top);
  out.rows = std::move(m);
  return out;
}

std::size_t matrix_rank(ScalarMatrix m, std::size_t ncols) {
  return row_echelon(std::move(m), ncols).rank();
}

std::vector<ScalarVector> kernel_basis(ScalarMatrix m, std::size_t ncols) {
  ParamScalar::Context ctx;
  for (const auto& r : m)
    for (const auto& x : r)
      if (!ctx && x.context()) ctx = x.context();
  Echelon e = row_echelon(std::move(m), ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    ScalarVector x(ncols, ParamScalar(0, ctx));
    x[free] = ParamScalar(1, ctx);
    for (std::size_t r = e.rank(); r-- > 0;) {
      std::size_t pc = e.pivots[r];
      ParamScalar acc(0, ctx);
      for (std::size_t j = pc + 1; j < ncols; ++j)
        if (!x[j].is_zero() && !e.rows[r][j].is_zero()) acc += e.rows[r][j] * x[j];
      x[pc] = acc.is_zero() ? acc : -acc / e.rows[r][pc];
    }
    basis.push_back(clear_denominators(std::move(x)));
  }
  return basis;
}

ScalarVector clear_denominators(ScalarVector v) {
  ParamScalar::Context ctx;
  Polynomial l(1);
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (!ctx) ctx = x.context();
    const Polynomial& d = x.denominator();
    l = *(l * d).divide_exact(gcd(l, d));
  }
  std::vector<Polynomial> nums;
  nums.reserve(v.size());
  Polynomial g;
  for (const auto& x : v) {
    if (x.is_zero()) {
      nums.emplace_back();
      continue;
    }
    nums.push_back(*(x.numerator() * l).divide_exact(x.denominator()));
    g = gcd(g, nums.back());
  }
  if (g.is_zero()) return v;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (auto& n : nums) {
    if (n.is_zero()) continue;
    n = *n.divide_exact(g);
    for (const auto& [e, c] : n.terms()) {
      den_lcm = integer_lcm(den_lcm, c.get_den());
      num_gcd = integer_gcd(num_gcd, c.get_num());
    }
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  for (const auto& n : nums) {
    if (n.is_zero()) continue;
    if (n.leading_coefficient() < 0) scale = -scale;
    break;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = nums[i].is_zero() ? ParamScalar(0, ctx)
                             : ParamScalar::fraction(nums[i] * scale, Polynomial(1), ctx);
  return v;
}

}  // namespace doext
