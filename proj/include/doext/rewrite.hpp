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

#ifndef DOEXT_REWRITE_HPP_
#define DOEXT_REWRITE_HPP_

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "doext/algebra.hpp"

namespace doext {

inline constexpr std::size_t kDefaultMaxSteps = 20000;

class StepBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RewriteRule {
  Letter first;
  Letter second;
  AlgebraElement rhs;
  Word lhs() const { return Word{first, second}; }
};

// The six bad pairs, in the order x2x1, y2y1, y1x1, y1x2, y2x1, y2x2.
inline constexpr std::array<std::pair<Letter, Letter>, 6> kRulePairs = {{
    {Letter::x2, Letter::x1},
    {Letter::y2, Letter::y1},
    {Letter::y1, Letter::x1},
    {Letter::y1, Letter::x2},
    {Letter::y2, Letter::x1},
    {Letter::y2, Letter::x2},
}};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(std::vector<RewriteRule> rules, ParamScalar::Context ctx);

  const AlgebraElement* rhs(Letter a, Letter b) const;
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const ParamScalar::Context& context() const { return ctx_; }
  // True when the keys are exactly the six standard pairs.
  bool has_standard_keys() const;

 private:
  std::vector<RewriteRule> rules_;
  std::array<int, 16> slot_{};
  ParamScalar::Context ctx_;
};

struct ReduceResult {
  AlgebraElement value;
  bool changed = false;
};

// One leftmost rewrite per term.
ReduceResult reduce_once(const AlgebraElement& a, const RewriteSystem& sys,
                         std::ostream* trace = nullptr);

// Fixpoint of reduce_once; max_steps bounds the number of passes.
AlgebraElement normal_form(const AlgebraElement& a, const RewriteSystem& sys,
                           std::size_t max_steps = kDefaultMaxSteps,
                           std::ostream* trace = nullptr);

AlgebraElement nf_commutator(const AlgebraElement& u, const AlgebraElement& v,
                             const RewriteSystem& sys,
                             std::size_t max_steps = kDefaultMaxSteps);

struct TerminationReport {
  struct Entry {
    Word lhs;
    bool decreasing = true;
    std::vector<Word> offending;  // rhs words not below lhs
  };
  std::vector<Entry> rules;
  bool passed() const;
};

TerminationReport check_termination(const RewriteSystem& sys);

struct ConfluenceReport {
  struct Overlap {
    Word word;
    AlgebraElement left;   // NF after rewriting the first pair
    AlgebraElement right;  // NF after rewriting the second pair
    bool agrees = true;
  };
  std::vector<Overlap> overlaps;
  std::size_t mismatches() const;
  bool confluent() const { return mismatches() == 0; }
};

ConfluenceReport check_local_confluence(const RewriteSystem& sys,
                                        std::size_t max_steps = kDefaultMaxSteps);

// Memoized normal forms built letter by letter: NF(m*a) for a PBW monomial m
// and a letter a is cached. Agrees with normal_form() for terminating,
// confluent systems. Not thread-safe; use one instance per thread.
class Reducer {
 public:
  explicit Reducer(RewriteSystem sys, std::size_t max_depth = kDefaultMaxSteps);

  AlgebraElement normal_form(const AlgebraElement& a);
  AlgebraElement normal_form(const Word& w);
  AlgebraElement commutator(const AlgebraElement& u, const AlgebraElement& v);
  // NF(a*b) for a, b already in normal form.
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

  const RewriteSystem& system() const { return sys_; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  using Key = std::string;  // PBW word letters followed by the appended letter
  const AlgebraElement& times_letter(const Word& m, Letter a, std::size_t depth);
  void accumulate_times_word(const Word& m, const Word& w, const ParamScalar& c,
                             AlgebraElement& out, std::size_t depth);

  RewriteSystem sys_;
  std::size_t max_depth_;
  std::unordered_map<Key, AlgebraElement> cache_;
  std::set<Key> active_;
};

}  // namespace doext

#endif  // DOEXT_REWRITE_HPP_
