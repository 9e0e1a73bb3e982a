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

#ifndef DOEXT_ALGEBRA_HPP_
#define DOEXT_ALGEBRA_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doext/param_field.hpp"

namespace doext {

// Generators in PBW order x1 < x2 < y1 < y2.
enum class Letter : std::uint8_t { x1 = 0, x2 = 1, y1 = 2, y2 = 3 };

inline constexpr Letter kLetters[4] = {Letter::x1, Letter::x2, Letter::y1, Letter::y2};

std::string_view letter_name(Letter a);
std::optional<Letter> letter_from_name(std::string_view name);
inline bool is_x(Letter a) { return a == Letter::x1 || a == Letter::x2; }

struct Bidegree {
  unsigned x = 0;
  unsigned y = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.x + b.x, a.y + b.y}; }
  bool within(Bidegree bound) const { return x <= bound.x && y <= bound.y; }
  std::string to_string() const;
};

// A word is a sequence of letters, stored one byte per letter.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters);
  static Word power(Letter a, unsigned n);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  const std::string& raw() const { return letters_; }

  Bidegree bidegree() const;
  bool is_pbw() const;  // nondecreasing
  // Position of the leftmost adjacent descent, if any.
  std::optional<std::size_t> leftmost_descent() const;

  Word operator+(const Word& o) const { return Word(letters_ + o.letters_); }
  Word substr(std::size_t pos, std::size_t n = std::string::npos) const {
    return Word(letters_.substr(pos, n));
  }

  friend bool operator==(const Word&, const Word&) = default;
  std::string to_string() const;  // "x1^2*y1", "1" for the empty word

 private:
  std::string letters_;
};

// Graded lexicographic comparison under x1 < x2 < y1 < y2.
bool deglex_less(const Word& a, const Word& b);

// Storage order: bidegree (total degree, then larger x-degree first), then
// deglex ascending.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::string>{}(w.raw()); }
};

struct PBWMonomial {
  unsigned i = 0, j = 0, k = 0, l = 0;  // x1^i x2^j y1^k y2^l
  Word word() const;
  Bidegree bidegree() const { return {i + j, k + l}; }
  static PBWMonomial from_word(const Word& w);  // requires w.is_pbw()
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

// All PBW monomials of a bidegree ordered lexicographically by (i, k)
// descending: (1,1) -> x1y1, x1y2, x2y1, x2y2.
std::vector<PBWMonomial> enumerate_pbw(Bidegree bd);

class AlgebraElement {
 public:
  using Terms = std::map<Word, ParamScalar, WordOrder>;

  AlgebraElement() = default;
  AlgebraElement(const ParamScalar& c);  // NOLINT: scalar embedding
  static AlgebraElement generator(Letter a);
  static AlgebraElement term(const Word& w, const ParamScalar& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  ParamScalar scalar_value() const;  // coefficient of the empty word
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  ParamScalar coefficient(const Word& w) const;
  bool is_homogeneous() const;
  std::optional<Bidegree> bidegree() const;  // when homogeneous and nonzero
  ParamScalar::Context context() const;

  void add_term(const Word& w, const ParamScalar& c);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const ParamScalar& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const ParamScalar& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(AlgebraElement a, const ParamScalar& c) { return a *= c; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }

  AlgebraElement pow(unsigned n) const;
  AlgebraElement map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& fn) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

AlgebraElement raw_commutator(const AlgebraElement& u, const AlgebraElement& v);
std::map<Bidegree, AlgebraElement> bidegree_split(const AlgebraElement& a);

}  // namespace doext

#endif  // DOEXT_ALGEBRA_HPP_
