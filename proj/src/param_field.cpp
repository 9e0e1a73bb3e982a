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

#include "doext/param_field.hpp"

#include <algorithm>
#include <sstream>

namespace doext {

namespace {

bool is_rational_square(const mpq_class& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_num_mpz_t()) &&
         mpz_perfect_square_p(x.get_den_mpz_t());
}

std::size_t index(Param v) { return static_cast<std::size_t>(v); }

// v^e reduced under rule r, as lo + hi*v.
std::pair<mpq_class, mpq_class> reduced_power(const ConstraintSet::Rule& r,
                                              unsigned e) {
  if (r.degree == 1) {
    mpq_class root = -r.c, acc = 1;
    for (unsigned i = 0; i < e; ++i) acc *= root;
    return {acc, 0};
  }
  mpq_class lo = 1, hi = 0;
  for (unsigned i = 0; i < e; ++i) {
    // v * (lo + hi v) = lo v + hi v^2 = -hi c + (lo - hi b) v
    mpq_class nlo = -hi * r.c;
    mpq_class nhi = lo - hi * r.b;
    lo = nlo;
    hi = nhi;
  }
  return {lo, hi};
}

}  // namespace

void ConstraintSet::add(Param v, const Polynomial& minpoly) {
  for (Param w : kAllParams)
    if (w != v && minpoly.depends_on(w))
      throw std::invalid_argument("constraint on " + std::string(param_name(v)) +
                                  " involves another parameter");
  unsigned d = minpoly.degree_in(v);
  if (d < 1 || d > 2)
    throw std::invalid_argument("constraint on " + std::string(param_name(v)) +
                                " must have degree 1 or 2");
  Polynomial m = minpoly.monic();
  Rule r{v, d, m.coefficient_in(v, 1).constant_value(),
         m.coefficient_in(v, 0).constant_value()};
  if (d == 1) {
    r.b = 0;
  } else if (is_rational_square(r.b * r.b - 4 * r.c)) {
    throw std::invalid_argument("constraint " + minpoly.to_string() +
                                " is reducible over Q");
  }
  if (const Rule* old = rule(v)) {
    if (old->degree == r.degree && old->b == r.b && old->c == r.c) return;
    throw std::invalid_argument("conflicting constraints on " +
                                std::string(param_name(v)));
  }
  rules_.push_back(r);
  std::sort(rules_.begin(), rules_.end(),
            [](const Rule& a, const Rule& b) { return a.var < b.var; });
}

void ConstraintSet::add(const Polynomial& minpoly) {
  std::optional<Param> var;
  for (Param w : kAllParams) {
    if (!minpoly.depends_on(w)) continue;
    if (var) throw std::invalid_argument("constraint involves several parameters");
    var = w;
  }
  if (!var) throw std::invalid_argument("constraint involves no parameter");
  add(*var, minpoly);
}

bool ConstraintSet::constrains(Param v) const { return rule(v) != nullptr; }

const ConstraintSet::Rule* ConstraintSet::rule(Param v) const {
  for (const auto& r : rules_)
    if (r.var == v) return &r;
  return nullptr;
}

Polynomial ConstraintSet::minimal_polynomial(Param v) const {
  const Rule* r = rule(v);
  if (!r) return Polynomial();
  if (r->degree == 1) return Polynomial::variable(v) + Polynomial(r->c);
  return Polynomial::variable(v, 2) + Polynomial::variable(v) * r->b +
         Polynomial(r->c);
}

Polynomial ConstraintSet::reduce(const Polynomial& poly) const {
  if (rules_.empty()) return poly;
  bool needed = false;
  for (const auto& [e, c] : poly.terms()) {
    for (const auto& r : rules_)
      if (e[index(r.var)] >= r.degree) needed = true;
    if (needed) break;
  }
  if (!needed) return poly;
  Polynomial out;
  for (const auto& [e, c] : poly.terms()) {
    Exponents base = e;
    Polynomial t;
    bool plain = true;
    for (const auto& r : rules_)
      if (e[index(r.var)] >= r.degree) plain = false;
    if (plain) {
      out += Polynomial::monomial(e, c);
      continue;
    }
    for (const auto& r : rules_) {
      if (e[index(r.var)] >= r.degree) base[index(r.var)] = 0;
    }
    t = Polynomial::monomial(base, c);
    for (const auto& r : rules_) {
      unsigned k = e[index(r.var)];
      if (k < r.degree) continue;
      auto [lo, hi] = reduced_power(r, k);
      t *= Polynomial(lo) + Polynomial::variable(r.var) * hi;
    }
    out += t;
  }
  return out;
}

ConstraintSet ConstraintSet::without(Param v) const {
  ConstraintSet out;
  for (const auto& r : rules_)
    if (r.var != v) out.rules_.push_back(r);
  return out;
}

ConstraintSet ConstraintSet::merged(const ConstraintSet& other) const {
  ConstraintSet out = *this;
  for (const auto& r : other.rules_) out.add(r.var, other.minimal_polynomial(r.var));
  return out;
}

std::string ConstraintSet::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (i) os << "; ";
    os << minimal_polynomial(rules_[i].var).to_string() << " = 0";
  }
  return os.str();
}

bool operator==(const ConstraintSet& a, const ConstraintSet& b) {
  if (a.rules_.size() != b.rules_.size()) return false;
  for (std::size_t i = 0; i < a.rules_.size(); ++i) {
    const auto &x = a.rules_[i], &y = b.rules_[i];
    if (x.var != y.var || x.degree != y.degree || x.b != y.b || x.c != y.c)
      return false;
  }
  return true;
}

Polynomial reduce_poly(const Polynomial& poly, const ConstraintSet& cs) {
  return cs.reduce(poly);
}

ParamScalar::Context make_context(const ConstraintSet& cs) {
  if (cs.empty()) return {};
  return std::make_shared<const ConstraintSet>(cs);
}

ParamScalar::Context merge_contexts(const ParamScalar::Context& a,
                                    const ParamScalar::Context& b) {
  if (a == b) return a;
  if (!a || a->empty()) return b;
  if (!b || b->empty()) return a;
  if (*a == *b) return a;
  throw std::invalid_argument("scalars carry different constraint sets: {" +
                              a->to_string() + "} vs {" + b->to_string() + "}");
}

ParamScalar::ParamScalar(const mpq_class& c, Context ctx)
    : num_(c), den_(1), ctx_(std::move(ctx)) {}

ParamScalar::ParamScalar(Polynomial num, Polynomial den, Context ctx, bool canonical)
    : num_(std::move(num)), den_(std::move(den)), ctx_(std::move(ctx)) {
  if (!canonical) canonicalize();
}

ParamScalar ParamScalar::parameter(Param v, Context ctx) {
  return ParamScalar(Polynomial::variable(v), Polynomial(1), std::move(ctx), false);
}

ParamScalar ParamScalar::fraction(const Polynomial& num, const Polynomial& den,
                                  Context ctx) {
  return ParamScalar(num, den, std::move(ctx), false);
}

void ParamScalar::canonicalize() {
  if (ctx_) {
    num_ = ctx_->reduce(num_);
    den_ = ctx_->reduce(den_);
  }
  if (den_.is_zero()) throw DivisionByZero("division by zero");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (ctx_) {
    for (const auto& r : ctx_->rules()) {
      if (!den_.depends_on(r.var)) continue;
      // den = u + w v with u, w free of v.
      Polynomial u = den_.coefficient_in(r.var, 0);
      Polynomial w = den_.coefficient_in(r.var, 1);
      Polynomial conj = u - w * r.b - w * Polynomial::variable(r.var);
      Polynomial norm = u * u - u * w * r.b + w * w * r.c;
      norm = ctx_->reduce(norm);
      if (norm.is_zero())
        throw DivisionByZero("denominator " + den_.to_string() +
                             " is a zero divisor under " + ctx_->to_string());
      num_ = ctx_->reduce(num_ * conj);
      den_ = norm;
    }
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  mpq_class lc = den_.leading_coefficient();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

bool ParamScalar::is_one() const {
  return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1;
}

mpq_class ParamScalar::rational_value() const {
  if (!is_rational()) throw std::logic_error("scalar " + to_string() + " is not rational");
  return num_.constant_value() / den_.constant_value();
}

bool ParamScalar::depends_on(Param v) const {
  return num_.depends_on(v) || den_.depends_on(v);
}

ParamScalar ParamScalar::operator-() const {
  return ParamScalar(-num_, den_, ctx_, true);
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  Context ctx = merge_contexts(ctx_, o.ctx_);
  bool same_ctx = ctx == ctx_ && ctx == o.ctx_;
  if (o.is_zero() && same_ctx) return *this;
  if (is_zero() && same_ctx) return *this = o;
  if (den_ == o.den_) {
    *this = ParamScalar(num_ + o.num_, den_, ctx, false);
  } else {
    *this = ParamScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_, ctx, false);
  }
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return *this += -o; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
  Context ctx = merge_contexts(ctx_, o.ctx_);
  bool same_ctx = ctx == ctx_ && ctx == o.ctx_;
  if (same_ctx && o.is_rational()) {
    mpq_class c = o.rational_value();
    if (c == 0) return *this = ParamScalar(0, ctx);
    num_ *= c;
    return *this;
  }
  if (same_ctx && is_rational()) {
    mpq_class c = rational_value();
    *this = o;
    if (c == 0) return *this = ParamScalar(0, ctx);
    num_ *= c;
    return *this;
  }
  *this = ParamScalar(num_ * o.num_, den_ * o.den_, ctx, false);
  return *this;
}

ParamScalar& ParamScalar::operator/=(const ParamScalar& o) {
  return *this *= o.inverse();
}

ParamScalar ParamScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero");
  return ParamScalar(den_, num_, ctx_, false);
}

ParamScalar ParamScalar::pow(unsigned n) const {
  ParamScalar result(1, ctx_), base = *this;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

ParamScalar ParamScalar::with_context(Context ctx) const {
  return ParamScalar(num_, den_, std::move(ctx), false);
}

bool operator==(const ParamScalar& a, const ParamScalar& b) {
  bool same = a.ctx_ == b.ctx_ || (a.ctx_ && b.ctx_ && *a.ctx_ == *b.ctx_) ||
              ((!a.ctx_ || a.ctx_->empty()) && (!b.ctx_ || b.ctx_->empty()));
  if (same) return a.num_ == b.num_ && a.den_ == b.den_;
  return (a - b).is_zero();
}

bool scalar_eq(const ParamScalar& a, const ParamScalar& b) { return a == b; }

std::string ParamScalar::to_string() const {
  std::string n = num_.to_string();
  if (den_.is_constant() && den_.constant_value() == 1) return n;
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  bool bare = den_.size() == 1 && (den_.is_constant() ||
                                   (den_.leading_coefficient() == 1 &&
                                    total_degree(den_.leading_exponents()) == 1));
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

ParamScalar::Context specialization_context(const ParamScalar::Context& source,
                                            const Assignment& values) {
  ConstraintSet cs;
  if (source) cs = *source;
  for (const auto& [v, val] : values) cs = cs.without(v);
  for (const auto& [v, val] : values)
    if (val.context()) cs = cs.merged(*val.context());
  return make_context(cs);
}

ParamScalar evaluate(const Polynomial& poly, const Assignment& values,
                     const ParamScalar::Context& target) {
  std::map<std::pair<Param, unsigned>, ParamScalar> powers;
  auto power = [&](Param v, unsigned e) -> ParamScalar {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto found = values.find(v);
    ParamScalar base = found != values.end() ? found->second.with_context(target)
                                             : ParamScalar::parameter(v, target);
    ParamScalar r = base.pow(e);
    powers.emplace(key, r);
    return r;
  };
  ParamScalar acc(0, target);
  for (const auto& [e, c] : poly.terms()) {
    ParamScalar t(c, target);
    for (Param v : kAllParams)
      if (e[index(v)]) t *= power(v, e[index(v)]);
    acc += t;
  }
  return acc;
}

void check_assignment(const ParamScalar::Context& source, const Assignment& values,
                      const ParamScalar::Context& target) {
  if (!source) return;
  for (const auto& [v, val] : values) {
    if (!source->constrains(v)) continue;
    Polynomial m = source->minimal_polynomial(v);
    if (!evaluate(m, values, target).is_zero())
      throw ConstraintViolated(std::string(param_name(v)) + " = " + val.to_string() +
                               " violates " + m.to_string() + " = 0");
  }
}

ParamScalar specialize(const ParamScalar& a, const Assignment& values,
                       ParamScalar::Context target) {
  if (!target) target = specialization_context(a.context(), values);
  check_assignment(a.context(), values, target);
  ParamScalar den = evaluate(a.denominator(), values, target);
  if (den.is_zero())
    throw DenominatorVanishes("denominator " + a.denominator().to_string() +
                              " vanishes at the assignment");
  return evaluate(a.numerator(), values, target) / den;
}

ParamScalar q_integer(unsigned m, const ParamScalar& q) {
  ParamScalar acc(0, q.context()), term(1, q.context());
  for (unsigned i = 0; i < m; ++i) {
    acc += term;
    term *= q;
  }
  return acc;
}

ParamScalar q_factorial(unsigned m, const ParamScalar& q) {
  ParamScalar acc(1, q.context());
  for (unsigned j = 1; j <= m; ++j) acc *= q_integer(j, q);
  return acc;
}

}  // namespace doext
