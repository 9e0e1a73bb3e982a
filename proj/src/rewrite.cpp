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

#include "doext/rewrite.hpp"

#include <ostream>

namespace doext {

namespace {

int slot_of(Letter a, Letter b) { return static_cast<int>(a) * 4 + static_cast<int>(b); }

// Leftmost position whose pair is a rule key.
std::optional<std::size_t> leftmost_redex(const Word& w, const RewriteSystem& sys) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (sys.rhs(w[i], w[i + 1])) return i;
  return std::nullopt;
}

}  // namespace

RewriteSystem::RewriteSystem(std::vector<RewriteRule> rules, ParamScalar::Context ctx)
    : rules_(std::move(rules)), ctx_(std::move(ctx)) {
  slot_.fill(-1);
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    int s = slot_of(rules_[i].first, rules_[i].second);
    if (slot_[s] >= 0)
      throw std::invalid_argument("duplicate rule for " + rules_[i].lhs().to_string());
    slot_[s] = static_cast<int>(i);
  }
}

const AlgebraElement* RewriteSystem::rhs(Letter a, Letter b) const {
  if (rules_.empty()) return nullptr;
  int s = slot_[slot_of(a, b)];
  return s < 0 ? nullptr : &rules_[s].rhs;
}

bool RewriteSystem::has_standard_keys() const {
  if (rules_.size() != kRulePairs.size()) return false;
  for (auto [a, b] : kRulePairs)
    if (!rhs(a, b)) return false;
  return true;
}

ReduceResult reduce_once(const AlgebraElement& a, const RewriteSystem& sys, std::ostream* trace) {
  ReduceResult out;
  for (const auto& [w, c] : a.terms()) {
    auto pos = leftmost_redex(w, sys);
    if (!pos) {
      out.value.add_term(w, c);
      continue;
    }
    out.changed = true;
    const AlgebraElement& rhs = *sys.rhs(w[*pos], w[*pos + 1]);
    Word prefix = w.substr(0, *pos), suffix = w.substr(*pos + 2);
    AlgebraElement expansion;
    for (const auto& [r, rc] : rhs.terms()) expansion.add_term(prefix + r + suffix, rc);
    if (trace) {
      *trace << w.to_string() << " : rule(" << w.substr(*pos, 2).to_string() << ") -> "
             << expansion.to_string() << "\n";
    }
    expansion *= c;
    out.value += expansion;
  }
  return out;
}

AlgebraElement normal_form(const AlgebraElement& a, const RewriteSystem& sys,
                           std::size_t max_steps, std::ostream* trace) {
  AlgebraElement cur = a;
  for (std::size_t step = 0; step < max_steps; ++step) {
    ReduceResult r = reduce_once(cur, sys, trace);
    if (!r.changed) return r.value;
    cur = std::move(r.value);
  }
  throw StepBudgetExceeded("normal form not reached within " + std::to_string(max_steps) +
                           " steps; increase max_steps");
}

AlgebraElement nf_commutator(const AlgebraElement& u, const AlgebraElement& v,
                             const RewriteSystem& sys, std::size_t max_steps) {
  return normal_form(raw_commutator(u, v), sys, max_steps);
}

bool TerminationReport::passed() const {
  for (const auto& e : rules)
    if (!e.decreasing) return false;
  return true;
}

TerminationReport check_termination(const RewriteSystem& sys) {
  TerminationReport rep;
  for (const auto& rule : sys.rules()) {
    TerminationReport::Entry e;
    e.lhs = rule.lhs();
    for (const auto& [w, c] : rule.rhs.terms()) {
      if (!deglex_less(w, e.lhs)) {
        e.decreasing = false;
        e.offending.push_back(w);
      }
    }
    rep.rules.push_back(std::move(e));
  }
  return rep;
}

std::size_t ConfluenceReport::mismatches() const {
  std::size_t n = 0;
  for (const auto& o : overlaps) n += !o.agrees;
  return n;
}

ConfluenceReport check_local_confluence(const RewriteSystem& sys, std::size_t max_steps) {
  ConfluenceReport rep;
  for (Letter a : kLetters) {
    for (Letter b : kLetters) {
      const AlgebraElement* ab = sys.rhs(a, b);
      if (!ab) continue;
      for (Letter c : kLetters) {
        const AlgebraElement* bc = sys.rhs(b, c);
        if (!bc) continue;
        AlgebraElement gc = AlgebraElement::generator(c);
        AlgebraElement ga = AlgebraElement::generator(a);
        ConfluenceReport::Overlap o;
        o.word = Word{a, b, c};
        o.left = normal_form(*ab * gc, sys, max_steps);
        o.right = normal_form(ga * *bc, sys, max_steps);
        o.agrees = o.left == o.right;
        rep.overlaps.push_back(std::move(o));
      }
    }
  }
  return rep;
}

Reducer::Reducer(RewriteSystem sys, std::size_t max_depth)
    : sys_(std::move(sys)), max_depth_(max_depth) {}

const AlgebraElement& Reducer::times_letter(const Word& m, Letter a, std::size_t depth) {
  Key key = m.raw();
  key.push_back(static_cast<char>(a));
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  if (depth > max_depth_)
    throw StepBudgetExceeded("rewriting depth exceeded " + std::to_string(max_depth_));
  if (!active_.insert(key).second)
    throw StepBudgetExceeded("rewriting cycle at " + Word(key).to_string());
  AlgebraElement result;
  const AlgebraElement* rhs = m.empty() ? nullptr : sys_.rhs(m[m.size() - 1], a);
  if (!rhs) {
    result = AlgebraElement::term(Word(key), ParamScalar(1, sys_.context()));
  } else {
    Word prefix = m.substr(0, m.size() - 1);
    for (const auto& [r, c] : rhs->terms()) accumulate_times_word(prefix, r, c, result, depth + 1);
  }
  active_.erase(key);
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

void Reducer::accumulate_times_word(const Word& m, const Word& w, const ParamScalar& c,
                                    AlgebraElement& out, std::size_t depth) {
  AlgebraElement cur = AlgebraElement::term(m, c);
  for (std::size_t i = 0; i < w.size(); ++i) {
    AlgebraElement next;
    for (const auto& [u, uc] : cur.terms()) {
      const AlgebraElement& prod = times_letter(u, w[i], depth);
      for (const auto& [v, vc] : prod.terms()) next.add_term(v, uc * vc);
    }
    cur = std::move(next);
  }
  out += cur;
}

AlgebraElement Reducer::normal_form(const Word& w) {
  AlgebraElement out;
  accumulate_times_word(Word(), w, ParamScalar(1, sys_.context()), out, 0);
  return out;
}

AlgebraElement Reducer::normal_form(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [w, c] : a.terms()) accumulate_times_word(Word(), w, c, out, 0);
  return out;
}

AlgebraElement Reducer::multiply(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [u, uc] : a.terms())
    for (const auto& [w, wc] : b.terms()) accumulate_times_word(u, w, uc * wc, out, 0);
  return out;
}

AlgebraElement Reducer::commutator(const AlgebraElement& u, const AlgebraElement& v) {
  AlgebraElement nu = normal_form(u), nv = normal_form(v);
  return multiply(nu, nv) - multiply(nv, nu);
}

}  // namespace doext
