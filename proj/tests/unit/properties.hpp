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

#ifndef DOEXT_TESTS_PROPERTIES_HPP_
#define DOEXT_TESTS_PROPERTIES_HPP_

#include <random>
#include <string>
#include <vector>

#include "doext/center.hpp"
#include "support.hpp"

namespace doext::testing {

// Each check returns failure descriptions; empty means it held.
using Failures = std::vector<std::string>;

// Idempotence, linearity and NF(ab) = NF(NF(a) NF(b)) on random elements,
// plus bidegree preservation.
inline Failures nf_algebra_properties(const FamilyInstance& inst, std::mt19937_64& rng,
                                      unsigned samples = 100, unsigned max_degree = 6) {
  Failures out;
  Reducer red(inst.system);
  std::uniform_int_distribution<int> c(-3, 3);
  auto name = inst.spec.name();
  for (unsigned i = 0; i < samples; ++i) {
    AlgebraElement a = random_element(rng, inst, max_degree, 3);
    AlgebraElement b = random_element(rng, inst, max_degree, 3);
    AlgebraElement na = red.normal_form(a), nb = red.normal_form(b);
    if (red.normal_form(na) != na) out.push_back(name + ": NF not idempotent on " + a.to_string());
    for (const auto& [w, coef] : na.terms())
      if (!w.is_pbw()) out.push_back(name + ": non-PBW word in NF(" + a.to_string() + ")");
    ParamScalar s(c(rng), inst.context), t(c(rng), inst.context);
    if (red.normal_form(s * a + t * b) != s * na + t * nb)
      out.push_back(name + ": NF not linear on " + a.to_string() + ", " + b.to_string());
    // Products stay within the degree bound.
    AlgebraElement sa = random_element(rng, inst, max_degree / 2, 2);
    AlgebraElement sb = random_element(rng, inst, max_degree - max_degree / 2, 2);
    if (red.normal_form(sa * sb) != red.multiply(red.normal_form(sa), red.normal_form(sb)))
      out.push_back(name + ": NF(ab) != NF(NF(a)NF(b)) for " + sa.to_string() + ", " + sb.to_string());
    auto before = bidegree_split(a);
    auto after = bidegree_split(na);
    for (const auto& [bd, part] : after)
      if (!before.count(bd)) out.push_back(name + ": NF introduced bidegree " + bd.to_string());
    for (const auto& [bd, part] : before) {
      auto it = after.find(bd);
      AlgebraElement expect = it == after.end() ? AlgebraElement() : it->second;
      if (red.normal_form(part) != expect)
        out.push_back(name + ": NF mixes bidegree components of " + a.to_string());
    }
  }
  return out;
}

inline Failures rewriting_properties(const FamilyInstance& inst) {
  Failures out;
  auto name = inst.spec.name();
  auto term = check_termination(inst.system);
  if (!term.passed()) out.push_back(name + ": a rule does not decrease");
  auto conf = check_local_confluence(inst.system);
  if (conf.overlaps.size() != 4) out.push_back(name + ": expected 4 overlaps");
  for (const auto& o : conf.overlaps)
    if (!o.agrees)
      out.push_back(name + ": overlap " + o.word.to_string() + " gives " + o.left.to_string() + " vs " +
                    o.right.to_string());
  return out;
}

// Kernel dimension at random rational points against the symbolic solve.
inline Failures oracle_properties(const FamilyInstance& inst, std::mt19937_64& rng,
                                  const std::vector<Bidegree>& bidegrees) {
  Failures out;
  Reducer red(inst.system);
  for (Bidegree bd : bidegrees) {
    auto sol = center_bidegree(red, bd);
    auto rep = specialization_oracle(inst, bd, sol.dimension(), rng, 3);
    if (!rep.passed()) {
      std::string s = inst.spec.name() + " at " + bd.to_string() + ": symbolic " +
                      std::to_string(rep.symbolic) + ", samples";
      for (const auto& x : rep.samples) s += " " + x.assignment + "->" + std::to_string(x.dimension);
      out.push_back(s);
    }
  }
  return out;
}

// Products of central basis elements are central.
inline Failures product_closure(const FamilyInstance& inst, Bidegree bound) {
  Failures out;
  Reducer red(inst.system);
  auto rep = center_scan(inst, {bound, 1, {}});
  std::vector<AlgebraElement> nonconst;
  for (const auto& d : rep.degrees)
    if (d.bidegree != Bidegree{0, 0})
      for (const auto& e : d.basis) nonconst.push_back(e);
  for (std::size_t i = 0; i < nonconst.size(); ++i)
    for (std::size_t j = i; j < nonconst.size() && j < i + 3; ++j) {
      auto p = red.multiply(nonconst[i], nonconst[j]);
      if (!is_central(p, red).central)
        out.push_back(inst.spec.name() + ": product of central " + nonconst[i].to_string() + " and " +
                      nonconst[j].to_string() + " is not central");
    }
  return out;
}

// If g*w = lambda_g*w*g then g*w^n = lambda_g^n*w^n*g.
inline Failures normality_composition(const FamilyInstance& inst, const AlgebraElement& w, unsigned nmax) {
  Failures out;
  Reducer red(inst.system);
  auto base = check_normality(w, red);
  if (!base) return {inst.spec.name() + ": " + w.to_string() + " not normal"};
  AlgebraElement wn = red.normal_form(w);
  for (unsigned n = 1; n <= nmax; ++n) {
    auto wit = check_normality(wn, red);
    if (!wit) {
      out.push_back(inst.spec.name() + ": power " + std::to_string(n) + " not normal");
    } else {
      for (int g = 0; g < 4; ++g)
        if (!base->lambda[g].is_zero() && wit->lambda[g] != base->lambda[g].pow(n))
          out.push_back(inst.spec.name() + ": lambda of power " + std::to_string(n) + " is not lambda^n");
    }
    wn = red.multiply(wn, red.normal_form(w));
  }
  return out;
}

// Every solve of a smaller scan equals the corresponding solve of a larger one.
inline Failures monotone_scan(const FamilyInstance& inst, Bidegree small, Bidegree large) {
  Failures out;
  auto a = center_scan(inst, {small, 1, {}});
  auto b = center_scan(inst, {large, 2, {}});
  for (const auto& d : a.degrees) {
    const auto* e = b.at(d.bidegree);
    if (!e || e->basis != d.basis || e->new_generators != d.new_generators)
      out.push_back(inst.spec.name() + ": scans disagree at " + d.bidegree.to_string());
  }
  return out;
}

inline std::string join(const Failures& f, std::size_t limit = 3) {
  std::string s;
  for (std::size_t i = 0; i < f.size() && i < limit; ++i) s += (i ? "; " : "") + f[i];
  if (f.size() > limit) s += "; ... (" + std::to_string(f.size()) + " total)";
  return s;
}

}  // namespace doext::testing

#endif  // DOEXT_TESTS_PROPERTIES_HPP_
