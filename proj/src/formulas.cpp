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

#include "doext/formulas.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace doext {

namespace {

ParamScalar param(Param v) { return ParamScalar::parameter(v); }

AlgebraElement word_term(const Word& w, const ParamScalar& c) { return AlgebraElement::term(w, c); }

Word xw(unsigned i, unsigned j) { return Word::power(Letter::x1, i) + Word::power(Letter::x2, j); }
Word yw(unsigned k, unsigned l) { return Word::power(Letter::y1, k) + Word::power(Letter::y2, l); }
Word letter_word(Letter a) { return Word{a}; }
Letter x_letter(int t) { return t == 1 ? Letter::x1 : Letter::x2; }
Letter y_letter(int s) { return s == 1 ? Letter::y1 : Letter::y2; }

// c(k,i) = q11^(k-i) q12^i [k]!/[i]!
ParamScalar c_ki(unsigned k, unsigned i, const ParamScalar& q12, const ParamScalar& q11) {
  return c_coefficient(k, k - i, q12, q11);
}

using Grid = std::vector<std::vector<ParamScalar>>;

ParamScalar at(const Grid& g, unsigned m, long k) {
  if (k < 0 || k > static_cast<long>(m) || m >= g.size() || g[m].empty()) return ParamScalar(0);
  return g[m][k];
}

AlphaBetaTable empty_table(int s, int t, unsigned n, RecursionForm form, const ParamScalar::Context& ctx) {
  AlphaBetaTable tab;
  tab.s = s;
  tab.t = t;
  tab.n = n;
  tab.form = form;
  tab.alpha.assign(n + 1, {});
  tab.beta.assign(n + 1, {});
  for (unsigned m = 1; m <= n; ++m) {
    tab.alpha[m].assign(m + 1, ParamScalar(0, ctx));
    tab.beta[m].assign(m + 1, ParamScalar(0, ctx));
  }
  return tab;
}

std::string family_label(const FamilyInstance& inst) {
  std::string out = inst.spec.name();
  std::string vals;
  for (const auto& ch : inst.spec.choices) {
    auto it = inst.values.find(ch.param);
    if (it == inst.values.end()) continue;
    vals += (vals.empty() ? "" : ",") + std::string(param_name(ch.param)) + "=" + it->second.to_string();
  }
  return vals.empty() ? out : out + "[" + vals + "]";
}

}  // namespace

RewriteSystem generic_system() {
  using L = Letter;
  std::vector<RewriteRule> rules;
  rules.push_back({L::x2, L::x1,
                   word_term(Word{L::x1, L::x2}, param(Param::q12)) +
                       word_term(Word{L::x1, L::x1}, param(Param::q11))});
  rules.push_back({L::y2, L::y1,
                   word_term(Word{L::y1, L::y2}, param(Param::p12)) +
                       word_term(Word{L::y1, L::y1}, param(Param::p11))});
  for (L y : {L::y1, L::y2})
    for (L x : {L::x1, L::x2}) rules.push_back({y, x, word_term(Word{x, y}, ParamScalar(1))});
  return RewriteSystem(std::move(rules), {});
}

AlgebraElement closed_form_x2_x1n(unsigned n, const ParamScalar& c12, const ParamScalar& c11,
                                  Letter a, Letter b) {
  return word_term(Word::power(a, n + 1), c11 * q_integer(n, c12)) +
         word_term(Word::power(a, n) + letter_word(b), c12.pow(n));
}

ParamScalar c_coefficient(unsigned n, unsigned k, const ParamScalar& c12, const ParamScalar& c11) {
  // [n]!/[n-k]! as a product: [m]_q vanishes at roots of unity.
  ParamScalar out = c11.pow(k) * c12.pow(n - k);
  for (unsigned j = n - k + 1; j <= n; ++j) out *= q_integer(j, c12);
  return out;
}

AlgebraElement closed_form_x2n_x1(unsigned n, const ParamScalar& c12, const ParamScalar& c11,
                                  Letter a, Letter b) {
  AlgebraElement out;
  for (unsigned k = 0; k <= n; ++k)
    out += word_term(Word::power(a, k + 1) + Word::power(b, n - k), c_coefficient(n, k, c12, c11));
  return out;
}

std::vector<CRecursionCheck> check_c_recursion(unsigned nmax, const ParamScalar& c12,
                                               const ParamScalar& c11) {
  std::vector<CRecursionCheck> out;
  for (unsigned n = 1; n <= nmax; ++n) {
    CRecursionCheck chk;
    chk.n = n;
    auto c = [&](unsigned m, unsigned k) { return c_coefficient(m, k, c12, c11); };
    for (unsigned k = 1; k <= n; ++k) {
      ParamScalar lhs = c(n + 1, k);
      if (lhs != c12 * c(n, k) + c11 * q_integer(n, c12) * c(n, k - 1)) {
        if (chk.printed) chk.first_printed_failure = k;
        chk.printed = false;
      }
      if (lhs != c12.pow(k + 1) * c(n, k) + c11 * q_integer(k, c12) * c(n, k - 1)) chk.corrected = false;
    }
    chk.boundary = c(n + 1, 0) == c12.pow(n + 1) &&
                   c(n + 1, n + 1) == c11.pow(n + 1) * q_factorial(n + 1, c12);
    out.push_back(chk);
  }
  return out;
}

std::string_view recursion_form_name(RecursionForm f) {
  switch (f) {
    case RecursionForm::kPrinted: return "printed";
    case RecursionForm::kExpansion: return "expansion";
    case RecursionForm::kGeneralS: return "general-s";
    case RecursionForm::kNormalForm: return "normal-form";
  }
  return "?";
}

AlphaBetaTable table_ys_xtn(const FamilyInstance& inst, int s, int t, unsigned n,
                            RecursionForm form, Reducer* red) {
  const auto& ctx = inst.context;
  AlphaBetaTable tab = empty_table(s, t, n, form, ctx);
  if (n == 0) return tab;
  if (form == RecursionForm::kNormalForm) {
    std::optional<Reducer> own;
    if (!red) red = &own.emplace(inst.system);
    for (unsigned m = 1; m <= n; ++m) {
      AlgebraElement nf = red->normal_form(Word{y_letter(s)} + Word::power(x_letter(t), m));
      for (unsigned k = 0; k <= m; ++k) {
        tab.alpha[m][k] = nf.coefficient(xw(m - k, k) + yw(1, 0));
        tab.beta[m][k] = nf.coefficient(xw(m - k, k) + yw(0, 1));
      }
    }
    return tab;
  }
  if (form != RecursionForm::kPrinted && form != RecursionForm::kExpansion)
    throw std::invalid_argument("unsupported recursion form for y_s*x_t^n");
  auto a = [&](int i, int j, int ss, int tt) { return inst.a(i, j, ss, tt); };
  tab.alpha[1] = {a(s, 1, t, 1), a(s, 1, t, 2)};
  tab.beta[1] = {a(s, 2, t, 1), a(s, 2, t, 2)};
  // Coefficients of alpha_{n,k} and beta_{n,k} in the x1 y_j and x2 y_j parts.
  struct Mix {
    ParamScalar aa, ab;
  };
  auto mix = [&](int j, int u) -> Mix {
    if (form == RecursionForm::kPrinted) return {a(s, j, t, u), a(s, j, t, u)};
    return {a(1, j, t, u), a(2, j, t, u)};
  };
  for (unsigned m = 1; m < n; ++m) {
    for (unsigned i = 0; i <= m + 1; ++i) {
      ParamScalar acc_a(0, ctx), acc_b(0, ctx);
      for (unsigned k = i; k <= m; ++k) {
        ParamScalar c = c_ki(k, i, inst.q12, inst.q11);
        Mix m1 = mix(1, 1), m2 = mix(2, 1);
        acc_a += c * (tab.alpha[m][k] * m1.aa + tab.beta[m][k] * m1.ab);
        acc_b += c * (tab.alpha[m][k] * m2.aa + tab.beta[m][k] * m2.ab);
      }
      if (i >= 1) {
        Mix m1 = mix(1, 2), m2 = mix(2, 2);
        acc_a += tab.alpha[m][i - 1] * m1.aa + tab.beta[m][i - 1] * m1.ab;
        acc_b += tab.alpha[m][i - 1] * m2.aa + tab.beta[m][i - 1] * m2.ab;
      }
      tab.alpha[m + 1][i] = acc_a;
      tab.beta[m + 1][i] = acc_b;
    }
  }
  return tab;
}

AlgebraElement assemble_ys_xtn(const AlphaBetaTable& tab, unsigned n) {
  AlgebraElement out;
  for (unsigned k = 0; k <= n; ++k) {
    out += word_term(xw(n - k, k) + yw(1, 0), tab.alpha[n][k]);
    out += word_term(xw(n - k, k) + yw(0, 1), tab.beta[n][k]);
  }
  return out;
}

AlphaBetaTable table_ysn_xt(const FamilyInstance& inst, int s, int t, unsigned n,
                            RecursionForm form, Reducer* red) {
  const auto& ctx = inst.context;
  AlphaBetaTable tab = empty_table(s, t, n, form, ctx);
  if (n == 0) return tab;
  if (form == RecursionForm::kNormalForm) {
    std::optional<Reducer> own;
    if (!red) red = &own.emplace(inst.system);
    for (unsigned m = 1; m <= n; ++m) {
      AlgebraElement nf = red->normal_form(Word::power(y_letter(s), m) + Word{x_letter(t)});
      for (unsigned i = 0; i <= m; ++i) {
        tab.alpha[m][i] = nf.coefficient(xw(1, 0) + yw(m - i, i));
        tab.beta[m][i] = nf.coefficient(xw(0, 1) + yw(m - i, i));
      }
    }
    return tab;
  }
  if (form != RecursionForm::kPrinted && form != RecursionForm::kGeneralS)
    throw std::invalid_argument("unsupported recursion form for y_s^n*x_t");
  auto a = [&](int i, int j, int ss, int tt) { return inst.a(i, j, ss, tt); };
  tab.alpha[1] = {a(s, 1, t, 1), a(s, 2, t, 1)};
  tab.beta[1] = {a(s, 1, t, 2), a(s, 2, t, 2)};
  // The printed recursion fixes the first index of a to 1.
  int r = form == RecursionForm::kPrinted ? 1 : s;
  for (unsigned m = 1; m < n; ++m) {
    for (unsigned i = 0; i <= m + 1; ++i) {
      ParamScalar pint = i <= m ? inst.p11 * q_integer(m - i, inst.p12) : ParamScalar(0, ctx);
      ParamScalar al = at(tab.alpha, m, i), be = at(tab.beta, m, i);
      ParamScalar al1 = at(tab.alpha, m, static_cast<long>(i) - 1);
      ParamScalar be1 = at(tab.beta, m, static_cast<long>(i) - 1);
      ParamScalar shift = i >= 1 ? inst.p12.pow(m - i + 1) : ParamScalar(0, ctx);
      tab.alpha[m + 1][i] = (a(r, 1, 1, 1) + pint * a(r, 2, 1, 1)) * al +
                            (a(r, 1, 2, 1) + pint * a(r, 2, 2, 1)) * be +
                            shift * (a(r, 2, 1, 1) * al1 + a(r, 2, 2, 1) * be1);
      tab.beta[m + 1][i] = (a(r, 1, 1, 2) + pint * a(r, 2, 1, 2)) * al +
                           (a(r, 1, 2, 2) + pint * a(r, 2, 2, 2)) * be +
                           shift * (a(r, 2, 1, 2) * al1 + a(r, 2, 2, 2) * be1);
    }
  }
  return tab;
}

AlgebraElement assemble_ysn_xt(const AlphaBetaTable& tab, unsigned n) {
  AlgebraElement out;
  for (unsigned i = 0; i <= n; ++i) {
    out += word_term(xw(1, 0) + yw(n - i, i), tab.alpha[n][i]);
    out += word_term(xw(0, 1) + yw(n - i, i), tab.beta[n][i]);
  }
  return out;
}

Comparison compare_elements(const AlgebraElement& formula, const AlgebraElement& nf) {
  Comparison c;
  if (formula == nf) return c;
  c.match = false;
  std::set<Word, WordOrder> words;
  for (const auto& [w, x] : formula.terms()) words.insert(w);
  for (const auto& [w, x] : nf.terms()) words.insert(w);
  for (auto it = words.rbegin(); it != words.rend(); ++it) {
    ParamScalar a = formula.coefficient(*it), b = nf.coefficient(*it);
    if (a != b) {
      c.divergence = "coefficient of " + it->to_string() + ": formula " + a.to_string() +
                     ", normal form " + b.to_string();
      break;
    }
  }
  return c;
}

bool VerificationMatrix::all_match(const std::string& identity, const std::string& form) const {
  for (const auto& r : rows)
    if (r.identity == identity && r.form == form && !r.result.match) return false;
  return true;
}

std::size_t VerificationMatrix::count(const std::string& identity, const std::string& form) const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.identity == identity && r.form == form;
  return n;
}

std::vector<FamilyInstance> formula_instances(const Registry& reg,
                                              const std::vector<std::string>& labels) {
  std::vector<FamilyInstance> out;
  for (const FamilySpec* fs : reg.primary()) {
    if (!labels.empty() && std::find(labels.begin(), labels.end(), fs->label) == labels.end()) continue;
    std::vector<Specialization> specs(1);
    for (const auto& ch : fs->choices) {
      std::vector<Specialization> next;
      for (const auto& sp : specs)
        for (const auto& v : ch.values) {
          Specialization s = sp;
          s.values[ch.param] = v;
          next.push_back(s);
        }
      specs = std::move(next);
    }
    for (const auto& sp : specs) out.push_back(instantiate(*fs, sp));
  }
  return out;
}

VerificationMatrix verify_formulas(const Registry& reg, const FormulaOptions& opt) {
  VerificationMatrix m;
  auto add = [&](std::string fam, std::string id, std::string form, unsigned n, int s, int t,
                 Comparison c) {
    m.rows.push_back({std::move(fam), std::move(id), std::move(form), n, s, t, std::move(c)});
  };

  // Symbolic closed forms over Q(q11, q12, p11, p12).
  {
    Reducer red(generic_system());
    ParamScalar q12 = param(Param::q12), q11 = param(Param::q11);
    ParamScalar p12 = param(Param::p12), p11 = param(Param::p11);
    for (unsigned n = 1; n <= opt.closed_nmax; ++n) {
      using L = Letter;
      add("generic", "x2*x1^n", "closed", n, 0, 0,
          compare_elements(closed_form_x2_x1n(n, q12, q11), red.normal_form(Word{L::x2} + Word::power(L::x1, n))));
      add("generic", "x2^n*x1", "closed", n, 0, 0,
          compare_elements(closed_form_x2n_x1(n, q12, q11), red.normal_form(Word::power(L::x2, n) + Word{L::x1})));
      add("generic", "y2*y1^n", "closed", n, 0, 0,
          compare_elements(closed_form_x2_x1n(n, p12, p11, L::y1, L::y2),
                           red.normal_form(Word{L::y2} + Word::power(L::y1, n))));
      add("generic", "y2^n*y1", "closed", n, 0, 0,
          compare_elements(closed_form_x2n_x1(n, p12, p11, L::y1, L::y2),
                           red.normal_form(Word::power(L::y2, n) + Word{L::y1})));
    }
    for (const auto& chk : check_c_recursion(opt.c_recursion_nmax, q12, q11)) {
      Comparison printed;
      printed.match = chk.printed;
      if (!chk.printed)
        printed.divergence = "c_{" + std::to_string(chk.n + 1) + "," + std::to_string(*chk.first_printed_failure) +
                             "} differs from c12*c_{n,k} + c11*[n]*c_{n,k-1}";
      add("generic", "c(n,k) recursion", "printed", chk.n, 0, 0, printed);
      Comparison corrected;
      corrected.match = chk.corrected && chk.boundary;
      if (!corrected.match) corrected.divergence = "corrected recursion or boundary values fail";
      add("generic", "c(n,k) recursion", "corrected", chk.n, 0, 0, corrected);
    }
  }

  for (const auto& inst : formula_instances(reg, opt.families)) {
    std::string fam = family_label(inst);
    Reducer red(inst.system);
    using L = Letter;
    for (unsigned n = 1; n <= opt.closed_nmax; ++n) {
      add(fam, "x2*x1^n", "closed", n, 0, 0,
          compare_elements(closed_form_x2_x1n(n, inst.q12, inst.q11), red.normal_form(Word{L::x2} + Word::power(L::x1, n))));
      add(fam, "x2^n*x1", "closed", n, 0, 0,
          compare_elements(closed_form_x2n_x1(n, inst.q12, inst.q11), red.normal_form(Word::power(L::x2, n) + Word{L::x1})));
      add(fam, "y2*y1^n", "closed", n, 0, 0,
          compare_elements(closed_form_x2_x1n(n, inst.p12, inst.p11, L::y1, L::y2),
                           red.normal_form(Word{L::y2} + Word::power(L::y1, n))));
      add(fam, "y2^n*y1", "closed", n, 0, 0,
          compare_elements(closed_form_x2n_x1(n, inst.p12, inst.p11, L::y1, L::y2),
                           red.normal_form(Word::power(L::y2, n) + Word{L::y1})));
    }
    for (int s = 1; s <= 2; ++s) {
      for (int t = 1; t <= 2; ++t) {
        unsigned nmax = opt.recursion_nmax;
        auto exp = table_ys_xtn(inst, s, t, nmax, RecursionForm::kExpansion);
        auto pr = table_ys_xtn(inst, s, t, nmax, RecursionForm::kPrinted);
        auto nft = table_ys_xtn(inst, s, t, nmax, RecursionForm::kNormalForm, &red);
        auto gen5 = table_ysn_xt(inst, s, t, nmax, RecursionForm::kGeneralS);
        auto pr5 = table_ysn_xt(inst, s, t, nmax, RecursionForm::kPrinted);
        auto nf5 = table_ysn_xt(inst, s, t, nmax, RecursionForm::kNormalForm, &red);
        for (unsigned n = 1; n <= nmax; ++n) {
          AlgebraElement lhs4 = red.normal_form(Word{y_letter(s)} + Word::power(x_letter(t), n));
          add(fam, "y_s*x_t^n", "expansion", n, s, t, compare_elements(assemble_ys_xtn(exp, n), lhs4));
          add(fam, "y_s*x_t^n", "printed", n, s, t, compare_elements(assemble_ys_xtn(pr, n), lhs4));
          add(fam, "y_s*x_t^n", "normal-form", n, s, t, compare_elements(assemble_ys_xtn(nft, n), lhs4));
          AlgebraElement lhs5 = red.normal_form(Word::power(y_letter(s), n) + Word{x_letter(t)});
          add(fam, "y_s^n*x_t", "printed", n, s, t, compare_elements(assemble_ysn_xt(pr5, n), lhs5));
          add(fam, "y_s^n*x_t", "general-s", n, s, t, compare_elements(assemble_ysn_xt(gen5, n), lhs5));
          add(fam, "y_s^n*x_t", "normal-form", n, s, t, compare_elements(assemble_ysn_xt(nf5, n), lhs5));
        }
      }
    }
  }
  return m;
}

nlohmann::ordered_json to_json(const VerificationMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : m.rows) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["identity"] = r.identity;
    j["form"] = r.form;
    j["n"] = r.n;
    j["s"] = r.s;
    j["t"] = r.t;
    j["match"] = r.result.match;
    j["divergence"] = r.result.match ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.result.divergence);
    rows.push_back(j);
  }
  nlohmann::ordered_json out;
  out["rows"] = rows;
  return out;
}

std::string to_text(const VerificationMatrix& m, bool only_divergent) {
  std::ostringstream os;
  // Summary per (identity, form).
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& r : m.rows) {
    std::pair<std::string, std::string> k{r.identity, r.form};
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  }
  for (const auto& [id, form] : keys) {
    std::size_t total = 0, ok = 0;
    for (const auto& r : m.rows)
      if (r.identity == id && r.form == form) {
        ++total;
        ok += r.result.match;
      }
    os << id << " [" << form << "]: " << ok << "/" << total << " match\n";
  }
  for (const auto& r : m.rows) {
    if (only_divergent && r.result.match) continue;
    os << r.family << " " << r.identity << " [" << r.form << "] n=" << r.n;
    if (r.s) os << " s=" << r.s << " t=" << r.t;
    os << ": " << (r.result.match ? "match" : "DIVERGES, " + r.result.divergence) << "\n";
  }
  return os.str();
}

}  // namespace doext
