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

#ifndef DOEXT_PARAM_FIELD_HPP_
#define DOEXT_PARAM_FIELD_HPP_

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "doext/polynomial.hpp"

namespace doext {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConstraintViolated : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DenominatorVanishes : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Per-parameter monic minimal polynomials of degree 1 or 2 over Q.
class ConstraintSet {
 public:
  struct Rule {
    Param var;
    unsigned degree;  // 1: v + c, 2: v^2 + b*v + c
    mpq_class b;
    mpq_class c;
  };

  ConstraintSet() = default;

  // minpoly must be univariate in v; it is made monic. Degree-2 input must be
  // irreducible over Q. Throws std::invalid_argument otherwise.
  void add(Param v, const Polynomial& minpoly);
  // Accepts "poly = 0" where poly involves exactly one parameter.
  void add(const Polynomial& minpoly);

  bool empty() const { return rules_.empty(); }
  bool constrains(Param v) const;
  const Rule* rule(Param v) const;
  const std::vector<Rule>& rules() const { return rules_; }
  Polynomial minimal_polynomial(Param v) const;

  Polynomial reduce(const Polynomial& poly) const;

  ConstraintSet without(Param v) const;
  // Union; throws std::invalid_argument on conflicting rules.
  ConstraintSet merged(const ConstraintSet& other) const;

  std::string to_string() const;  // "p^2 + 1 = 0; ..."

  friend bool operator==(const ConstraintSet& a, const ConstraintSet& b);

 private:
  std::vector<Rule> rules_;  // sorted by var
};

Polynomial reduce_poly(const Polynomial& poly, const ConstraintSet& cs);

// Element of Frac(Q[params]) / (constraints). Immutable value type.
class ParamScalar {
 public:
  using Context = std::shared_ptr<const ConstraintSet>;

  ParamScalar() : den_(1) {}
  ParamScalar(const mpq_class& c, Context ctx = {});  // NOLINT
  ParamScalar(long c) : ParamScalar(mpq_class(c)) {}  // NOLINT
  static ParamScalar parameter(Param v, Context ctx = {});
  static ParamScalar fraction(const Polynomial& num, const Polynomial& den,
                              Context ctx = {});

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  const Context& context() const { return ctx_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class rational_value() const;
  bool depends_on(Param v) const;

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  ParamScalar& operator/=(const ParamScalar& o);
  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
  friend ParamScalar operator/(ParamScalar a, const ParamScalar& b) { return a /= b; }
  friend bool operator==(const ParamScalar& a, const ParamScalar& b);
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) {
    return !(a == b);
  }

  ParamScalar inverse() const;
  ParamScalar pow(unsigned n) const;
  ParamScalar with_context(Context ctx) const;

  std::size_t weight() const { return num_.weight() + den_.weight(); }
  std::string to_string() const;

 private:
  ParamScalar(Polynomial num, Polynomial den, Context ctx, bool canonical);
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
  Context ctx_;
};

// Context of a binary operation; throws std::invalid_argument on mismatch.
ParamScalar::Context merge_contexts(const ParamScalar::Context& a,
                                    const ParamScalar::Context& b);
ParamScalar::Context make_context(const ConstraintSet& cs);

bool scalar_eq(const ParamScalar& a, const ParamScalar& b);

using Assignment = std::map<Param, ParamScalar>;

// Exact evaluation at an assignment. The result lives in target (default:
// the constraints of a on unassigned parameters merged with the contexts of
// the assigned values). Throws ConstraintViolated or DenominatorVanishes.
ParamScalar specialize(const ParamScalar& a, const Assignment& values,
                       ParamScalar::Context target = {});
ParamScalar::Context specialization_context(const ParamScalar::Context& source,
                                            const Assignment& values);
// Checks values against the constraints of source.
void check_assignment(const ParamScalar::Context& source, const Assignment& values,
                      const ParamScalar::Context& target);
ParamScalar evaluate(const Polynomial& poly, const Assignment& values,
                     const ParamScalar::Context& target);

ParamScalar q_integer(unsigned m, const ParamScalar& q);
ParamScalar q_factorial(unsigned m, const ParamScalar& q);

}  // namespace doext

#endif  // DOEXT_PARAM_FIELD_HPP_
