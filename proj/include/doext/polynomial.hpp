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

#ifndef DOEXT_POLYNOMIAL_HPP_
#define DOEXT_POLYNOMIAL_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace doext {

// Parameter registry. The enumerator order is the canonical variable order.
enum class Param : std::uint8_t { q12, q11, p12, p11, f, g, p, q };

inline constexpr std::size_t kParamCount = 8;
inline constexpr std::array<Param, kParamCount> kAllParams = {
    Param::q12, Param::q11, Param::p12, Param::p11,
    Param::f,   Param::g,   Param::p,   Param::q};

std::string_view param_name(Param v);
std::optional<Param> param_from_name(std::string_view name);

using Exponents = std::array<std::uint16_t, kParamCount>;

unsigned total_degree(const Exponents& e);

// Graded lexicographic order, q12 > q11 > ... > q.
bool deglex_greater(const Exponents& a, const Exponents& b);

// Sparse multivariate polynomial over Q. Terms are kept sorted by
// decreasing deglex with no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Exponents, mpq_class>;

  Polynomial() = default;
  Polynomial(const mpq_class& c);  // NOLINT: implicit constant
  Polynomial(long c) : Polynomial(mpq_class(c)) {}  // NOLINT
  static Polynomial variable(Param v, unsigned exponent = 1);
  static Polynomial monomial(const Exponents& e, const mpq_class& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_value() const;  // 0 for the zero polynomial
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Exponents& leading_exponents() const { return terms_.front().first; }
  const mpq_class& leading_coefficient() const { return terms_.front().second; }

  unsigned degree_in(Param v) const;
  bool depends_on(Param v) const;
  unsigned total_degree() const;

  // Coefficients as polynomials in the other parameters, indexed by the
  // exponent of v.
  std::map<unsigned, Polynomial> coefficients_in(Param v) const;
  Polynomial coefficient_in(Param v, unsigned k) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const mpq_class& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial pow(unsigned n) const;
  Polynomial monic() const;
  Polynomial shift(const Exponents& e) const;  // multiply by a monomial

  // Exact quotient if b divides *this, nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& b) const;

  // Number of terms plus total size of coefficients in limbs; pivot heuristic.
  std::size_t weight() const;

  std::string to_string() const;

 private:
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Pseudo-remainder of a by b with respect to v.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Param v);

// Monic gcd of the coefficients of a with respect to v.
Polynomial content_in(const Polynomial& a, Param v);

}  // namespace doext

#endif  // DOEXT_POLYNOMIAL_HPP_
