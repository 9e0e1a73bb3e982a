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

#include "doext/algebra.hpp"

#include <sstream>

namespace doext {

namespace {

constexpr std::string_view kLetterNames[4] = {"x1", "x2", "y1", "y2"};

}  // namespace

std::string_view letter_name(Letter a) { return kLetterNames[static_cast<int>(a)]; }

std::optional<Letter> letter_from_name(std::string_view name) {
  for (int i = 0; i < 4; ++i)
    if (kLetterNames[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

std::string Bidegree::to_string() const {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter a : letters) letters_.push_back(static_cast<char>(a));
}

Word Word::power(Letter a, unsigned n) {
  return Word(std::string(n, static_cast<char>(a)));
}

Bidegree Word::bidegree() const {
  Bidegree bd;
  for (char c : letters_) (c < 2 ? bd.x : bd.y) += 1;
  return bd;
}

bool Word::is_pbw() const { return !leftmost_descent(); }

std::optional<std::size_t> Word::leftmost_descent() const {
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
    if (letters_[i] > letters_[i + 1]) return i;
  return std::nullopt;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (!out.empty()) out += "*";
    out += kLetterNames[static_cast<int>(letters_[i])];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.raw() < b.raw();
}

bool WordOrder::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  Bidegree da = a.bidegree(), db = b.bidegree();
  if (da.x != db.x) return da.x > db.x;
  return a.raw() < b.raw();
}

Word PBWMonomial::word() const {
  std::string s;
  s.append(i, static_cast<char>(Letter::x1));
  s.append(j, static_cast<char>(Letter::x2));
  s.append(k, static_cast<char>(Letter::y1));
  s.append(l, static_cast<char>(Letter::y2));
  return Word(std::move(s));
}

PBWMonomial PBWMonomial::from_word(const Word& w) {
  PBWMonomial m;
  for (std::size_t n = 0; n < w.size(); ++n) {
    switch (w[n]) {
      case Letter::x1: ++m.i; break;
      case Letter::x2: ++m.j; break;
      case Letter::y1: ++m.k; break;
      case Letter::y2: ++m.l; break;
    }
  }
  return m;
}

std::vector<PBWMonomial> enumerate_pbw(Bidegree bd) {
  std::vector<PBWMonomial> out;
  out.reserve((bd.x + 1) * (bd.y + 1));
  for (unsigned i = bd.x + 1; i-- > 0;)
    for (unsigned k = bd.y + 1; k-- > 0;) out.push_back({i, bd.x - i, k, bd.y - k});
  return out;
}

AlgebraElement::AlgebraElement(const ParamScalar& c) {
  if (!c.is_zero()) terms_.emplace(Word(), c);
}

AlgebraElement AlgebraElement::generator(Letter a) {
  return term(Word{a}, ParamScalar(1));
}

AlgebraElement AlgebraElement::term(const Word& w, const ParamScalar& c) {
  AlgebraElement e;
  e.add_term(w, c);
  return e;
}

bool AlgebraElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

ParamScalar AlgebraElement::scalar_value() const { return coefficient(Word()); }

ParamScalar AlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ParamScalar(0, context()) : it->second;
}

bool AlgebraElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  Bidegree bd = terms_.begin()->first.bidegree();
  for (const auto& [w, c] : terms_)
    if (w.bidegree() != bd) return false;
  return true;
}

std::optional<Bidegree> AlgebraElement::bidegree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.bidegree();
}

ParamScalar::Context AlgebraElement::context() const {
  for (const auto& [w, c] : terms_)
    if (c.context()) return c.context();
  return {};
}

void AlgebraElement::add_term(const Word& w, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.terms_.size() != b.terms_.size()) return (a - b).is_zero();
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j)
    if (!(i->first == j->first) || i->second != j->second) return (a - b).is_zero();
  return true;
}

AlgebraElement AlgebraElement::pow(unsigned n) const {
  AlgebraElement r(ParamScalar(1, context()));
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

AlgebraElement AlgebraElement::map_coefficients(
    const std::function<ParamScalar(const ParamScalar&)>& fn) const {
  AlgebraElement r;
  for (const auto& [w, c] : terms_) r.add_term(w, fn(c));
  return r;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  // Within a bidegree, larger words first.
  std::vector<const Terms::value_type*> order;
  for (auto it = terms_.begin(); it != terms_.end();) {
    auto end = it;
    Bidegree bd = it->first.bidegree();
    while (end != terms_.end() && end->first.bidegree() == bd) ++end;
    std::vector<const Terms::value_type*> block;
    for (auto k = it; k != end; ++k) block.push_back(&*k);
    order.insert(order.end(), block.rbegin(), block.rend());
    it = end;
  }
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const Word& w = t->first;
    const ParamScalar& c = t->second;
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      mpq_class v = c.rational_value();
      negative = v < 0;
      mpq_class m = abs(v);
      if (w.empty()) body = m.get_str();
      else if (m == 1) body = w.to_string();
      else body = m.get_str() + "*" + w.to_string();
    } else {
      body = "(" + c.to_string() + ")";
      if (!w.empty()) body += "*" + w.to_string();
    }
    if (first) os << (negative ? "-" : "") << body;
    else os << (negative ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

AlgebraElement raw_commutator(const AlgebraElement& u, const AlgebraElement& v) {
  return u * v - v * u;
}

std::map<Bidegree, AlgebraElement> bidegree_split(const AlgebraElement& a) {
  std::map<Bidegree, AlgebraElement> out;
  for (const auto& [w, c] : a.terms()) out[w.bidegree()].add_term(w, c);
  return out;
}

}  // namespace doext
