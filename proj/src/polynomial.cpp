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

#include "doext/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace doext {

namespace {

constexpr std::array<std::string_view, kParamCount> kNames = {
    "q12", "q11", "p12", "p11", "f", "g", "p", "q"};

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kParamCount; ++i) r[i] = a[i] + b[i];
  return r;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kParamCount; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents sub_exponents(const Exponents& b, const Exponents& a) {
  Exponents r{};
  for (std::size_t i = 0; i < kParamCount; ++i) r[i] = b[i] - a[i];
  return r;
}

struct DeglexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return deglex_greater(a, b);
  }
};

}  // namespace

std::string_view param_name(Param v) {
  return kNames[static_cast<std::size_t>(v)];
}

std::optional<Param> param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kParamCount; ++i)
    if (kNames[i] == name) return static_cast<Param>(i);
  return std::nullopt;
}

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool deglex_greater(const Exponents& a, const Exponents& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial::Polynomial(const mpq_class& c) {
  if (c != 0) terms_.push_back({Exponents{}, c});
}

Polynomial Polynomial::variable(Param v, unsigned exponent) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(exponent);
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& e, const mpq_class& c) {
  if (c == 0) return Polynomial();
  return Polynomial(std::vector<Term>{{e, c}});
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && doext::total_degree(terms_[0].first) == 0);
}

mpq_class Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_[0].second;
}

unsigned Polynomial::degree_in(Param v) const {
  unsigned d = 0;
  auto i = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[i]);
  return d;
}

bool Polynomial::depends_on(Param v) const { return degree_in(v) > 0; }

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : doext::total_degree(terms_.front().first);
}

std::map<unsigned, Polynomial> Polynomial::coefficients_in(Param v) const {
  auto i = static_cast<std::size_t>(v);
  std::map<unsigned, std::vector<Term>> parts;
  for (const auto& [e, c] : terms_) {
    Exponents r = e;
    r[i] = 0;
    parts[e[i]].push_back({r, c});
  }
  std::map<unsigned, Polynomial> out;
  // Removing one variable keeps the relative deglex order only within equal
  // v-degree, which is the case for each part.
  for (auto& [k, ts] : parts) out.emplace(k, Polynomial(std::move(ts)));
  return out;
}

Polynomial Polynomial::coefficient_in(Param v, unsigned k) const {
  auto i = static_cast<std::size_t>(v);
  std::vector<Term> ts;
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exponents r = e;
    r[i] = 0;
    ts.push_back({r, c});
  }
  return Polynomial(std::move(ts));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b,
                                    bool subtract) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() ||
        (i < a.size() && deglex_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || deglex_greater(b[j].first, a[i].first)) {
      out.push_back({b[j].first, subtract ? mpq_class(-b[j].second) : b[j].second});
      ++j;
    } else {
      mpq_class c = subtract ? mpq_class(a[i].second - b[j].second)
                             : mpq_class(a[i].second + b[j].second);
      if (c != 0) out.push_back({a[i].first, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (a.size() == 1 && a.is_constant()) return b * a.terms_[0].second;
  if (b.size() == 1 && b.is_constant()) return a * b.terms_[0].second;
  std::map<Exponents, mpq_class, DeglexGreater> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, fresh] = acc.try_emplace(add_exponents(ea, eb), ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  }
  std::vector<Polynomial::Term> ts;
  ts.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) ts.push_back({e, c});
  return Polynomial(std::move(ts));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1), base = *this;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  mpq_class inv = 1 / leading_coefficient();
  return *this * inv;
}

Polynomial Polynomial::shift(const Exponents& e) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.first = add_exponents(t.first, e);
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& b) const {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial q, r = *this;
  const auto& lb = b.leading_exponents();
  const auto& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    const auto& lr = r.leading_exponents();
    if (!divides(lb, lr)) return std::nullopt;
    Polynomial t = monomial(sub_exponents(lr, lb), r.leading_coefficient() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

std::size_t Polynomial::weight() const {
  std::size_t w = terms_.size();
  for (const auto& t : terms_)
    w += mpz_size(t.second.get_num_mpz_t()) + mpz_size(t.second.get_den_mpz_t());
  return w;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_one = doext::total_degree(e) > 0 && abs(c) == 1;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (!is_one) os << mpq_class(abs(c)).get_str();
    bool need_star = !is_one;
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << kNames[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Param v) {
  unsigned db = b.degree_in(v);
  Polynomial lcb = b.coefficient_in(v, db);
  Polynomial r = a;
  while (!r.is_zero()) {
    unsigned dr = r.degree_in(v);
    if (dr < db) break;
    Polynomial lcr = r.coefficient_in(v, dr);
    Exponents shift{};
    shift[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(dr - db);
    r = lcb * r - (lcr * b).shift(shift);
  }
  return r;
}

Polynomial content_in(const Polynomial& a, Param v) {
  Polynomial g;
  for (const auto& [k, c] : a.coefficients_in(v)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return Polynomial(1);
  }
  return g;
}

namespace {

Polynomial primitive_part(const Polynomial& a, Param v) {
  Polynomial c = content_in(a, v);
  if (c.is_constant()) return a.monic();
  return a.divide_exact(c)->monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return a.monic();
  // Quick exit when one divides the other.
  if (a.size() <= b.size()) {
    if (b.divide_exact(a)) return a.monic();
  } else if (a.divide_exact(b)) {
    return b.monic();
  }
  std::optional<Param> var;
  for (Param v : kAllParams) {
    if (a.depends_on(v) || b.depends_on(v)) {
      var = v;
      break;
    }
  }
  Param v = *var;
  if (!a.depends_on(v)) return gcd(a, content_in(b, v));
  if (!b.depends_on(v)) return gcd(content_in(a, v), b);
  Polynomial c = gcd(content_in(a, v), content_in(b, v));
  Polynomial x = primitive_part(a, v), y = primitive_part(b, v);
  if (x.degree_in(v) < y.degree_in(v)) std::swap(x, y);
  while (!y.is_zero() && y.depends_on(v)) {
    Polynomial r = pseudo_remainder(x, y, v);
    x = std::move(y);
    y = r.is_zero() ? Polynomial() : primitive_part(r, v);
  }
  // y == 0: x is the primitive gcd. y constant in v: primitive parts coprime.
  Polynomial g = y.is_zero() ? x : Polynomial(1);
  return (g * c).monic();
}

}  // namespace doext
