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

#include "doext/registry.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <set>
#include <sstream>

#ifndef DOEXT_DEFAULT_REGISTRY
#define DOEXT_DEFAULT_REGISTRY "data/registry.txt"
#endif

namespace doext {

namespace {

constexpr std::array<const char*, 4> kRowNames = {"y1x1", "y1x2", "y2x1", "y2x2"};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

void collect_params(const Expr& e, std::set<Param>& out) {
  if (e.kind == Expr::Kind::kParam) out.insert(e.param);
  if (e.lhs) collect_params(*e.lhs, out);
  if (e.rhs) collect_params(*e.rhs, out);
}

std::pair<Param, std::string> parse_binding(const std::string& text, std::size_t line) {
  auto eq = text.find('=');
  if (eq == std::string::npos)
    throw MalformedRegistry("line " + std::to_string(line) + ": expected name = value");
  auto v = param_from_name(trim(text.substr(0, eq)));
  if (!v) throw MalformedRegistry("line " + std::to_string(line) + ": unknown parameter");
  return {*v, trim(text.substr(eq + 1))};
}

Param single_param(const Polynomial& m, const std::string& text) {
  std::optional<Param> var;
  for (Param v : kAllParams) {
    if (!m.depends_on(v)) continue;
    if (var) throw UsageError("constraint " + text + " involves several parameters");
    var = v;
  }
  if (!var) throw UsageError("constraint " + text + " involves no parameter");
  return *var;
}

// Rule right-hand sides generated from Q, P and sigma.
std::vector<RewriteRule> rules_from_data(const ParamScalar& q12, const ParamScalar& q11,
                                         const ParamScalar& p12, const ParamScalar& p11,
                                         const std::array<std::array<ParamScalar, 4>, 4>& sigma) {
  using L = Letter;
  static const Word kCols[4] = {Word{L::x1, L::y1}, Word{L::x2, L::y1}, Word{L::x1, L::y2},
                                Word{L::x2, L::y2}};
  std::vector<RewriteRule> rules;
  AlgebraElement x = AlgebraElement::term(Word{L::x1, L::x2}, q12);
  x.add_term(Word{L::x1, L::x1}, q11);
  rules.push_back({L::x2, L::x1, x});
  AlgebraElement y = AlgebraElement::term(Word{L::y1, L::y2}, p12);
  y.add_term(Word{L::y1, L::y1}, p11);
  rules.push_back({L::y2, L::y1, y});
  const std::pair<L, L> lhs[4] = {{L::y1, L::x1}, {L::y1, L::x2}, {L::y2, L::x1}, {L::y2, L::x2}};
  for (int r = 0; r < 4; ++r) {
    AlgebraElement m;
    for (int c = 0; c < 4; ++c) m.add_term(kCols[c], sigma[r][c]);
    rules.push_back({lhs[r].first, lhs[r].second, m});
  }
  return rules;
}

void validate_relations(const FamilySpec& spec, const std::vector<RewriteRule>& rules,
                        const Environment& env) {
  if (spec.relations.size() != rules.size())
    throw MalformedRegistry(spec.name() + ": expected " + std::to_string(rules.size()) +
                            " relation lines");
  std::set<std::string> seen;
  for (const auto& text : spec.relations) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw MalformedRegistry(spec.name() + ": relation without '='");
    AlgebraElement lhs = parse_element(text.substr(0, eq), env);
    AlgebraElement rhs = parse_element(text.substr(eq + 1), env);
    if (lhs.size() != 1 || lhs.terms().begin()->first.size() != 2 ||
        !lhs.terms().begin()->second.is_one())
      throw MalformedRegistry(spec.name() + ": relation lhs must be a two-letter word: " + text);
    const Word& w = lhs.terms().begin()->first;
    const RewriteRule* rule = nullptr;
    for (const auto& r : rules)
      if (r.lhs() == w) rule = &r;
    if (!rule) throw MalformedRegistry(spec.name() + ": unexpected relation " + text);
    if (!seen.insert(w.raw()).second)
      throw MalformedRegistry(spec.name() + ": duplicate relation for " + w.to_string());
    if (rule->rhs != rhs)
      throw MalformedRegistry(spec.name() + ": relation " + text +
                              " disagrees with sigma/P/Q, which give " + rule->rhs.to_string());
  }
}

std::string tex_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    std::string name(letter_name(w[i]));
    out += name.substr(0, 1) + "_" + name.substr(1);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// Coefficient in table notation: "-2p^2", "f", "" for 1.
std::string tex_coefficient(const ParamScalar& c, bool& negative) {
  negative = false;
  const Polynomial& n = c.numerator();
  bool monomial = n.size() == 1 && c.denominator().is_constant();
  if (!monomial) return "(" + c.to_string() + ")";
  const auto& [e, k] = n.terms().front();
  negative = k < 0;
  mpq_class m = abs(k) / c.denominator().constant_value();
  std::string out;
  if (m != 1) out += m.get_str();
  for (Param v : kAllParams) {
    unsigned d = e[static_cast<std::size_t>(v)];
    if (!d) continue;
    out += std::string(param_name(v));
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace

std::string FamilySpec::name() const {
  return variant.empty() ? label : label + "[" + variant + "]";
}

std::vector<Param> FamilySpec::parameters() const {
  std::set<Param> found;
  auto scan = [&](const std::string& s) { collect_params(*parse_expression(s), found); };
  for (const auto& s : q) scan(s);
  for (const auto& s : p) scan(s);
  for (const auto& row : sigma)
    for (const auto& s : row) scan(s);
  return {found.begin(), found.end()};
}

const ClaimSpec* FamilySpec::find_claim(const std::string& id) const {
  for (const auto& c : claims)
    if (c.id == id) return &c;
  return nullptr;
}

const FamilySpec& Registry::find(const std::string& label, const std::string& variant) const {
  for (const auto& f : families)
    if (f.label == label && f.variant == variant) return f;
  throw UsageError("unknown family " + label + (variant.empty() ? "" : " variant " + variant) +
                   "; labels are A..Z");
}

std::vector<const FamilySpec*> Registry::primary() const {
  std::vector<const FamilySpec*> out;
  for (const auto& f : families)
    if (f.variant.empty()) out.push_back(&f);
  return out;
}

Registry load_families(std::istream& in, const std::string& source) {
  Registry reg;
  reg.source = source;
  std::string raw;
  std::size_t lineno = 0;
  bool have_format = false;
  FamilySpec* cur = nullptr;
  ClaimSpec* claim = nullptr;
  std::map<std::string, std::set<std::string>> seen_keys;
  auto fail = [&](const std::string& msg) -> void {
    throw MalformedRegistry(source + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "format") {
      if (value != "doext-registry/1") fail("unsupported format " + value);
      have_format = true;
      continue;
    }
    if (key == "family") {
      if (value.size() != 1 || value[0] < 'A' || value[0] > 'Z') fail("bad family label " + value);
      reg.families.emplace_back();
      cur = &reg.families.back();
      cur->label = value;
      cur->line = lineno;
      claim = nullptr;
      continue;
    }
    if (!cur) fail("key " + key + " outside a family record");
    if (key.rfind("claim.", 0) == 0) {
      if (!claim) fail(key + " before any claim line");
      std::string sub = key.substr(6);
      if (sub == "kind") {
        if (value == "center") claim->kind = ClaimSpec::Kind::kCenter;
        else if (value == "subalgebra") claim->kind = ClaimSpec::Kind::kSubalgebra;
        else fail("claim.kind must be center or subalgebra");
      } else if (sub == "param") {
        claim->params.push_back(parse_binding(value, lineno));
      } else if (sub == "constraint") {
        claim->constraints.push_back(value);
      } else if (sub == "generator") {
        claim->generators.push_back(value);
      } else if (sub == "relation") {
        claim->relations.push_back(value);
      } else if (sub == "hypothesis") {
        claim->hypothesis = value;
      } else if (sub == "note") {
        claim->note = value;
      } else {
        fail("unknown key " + key);
      }
      continue;
    }
    if (key == "variant") {
      cur->variant = value;
    } else if (key == "Q" || key == "P") {
      auto parts = split(value, ',');
      if (parts.size() != 2) fail(key + " needs two entries");
      (key == "Q" ? cur->q : cur->p) = {parts[0], parts[1]};
    } else if (key.rfind("sigma.", 0) == 0) {
      auto it = std::find(kRowNames.begin(), kRowNames.end(), key.substr(6));
      if (it == kRowNames.end()) fail("unknown sigma row " + key);
      auto parts = split(value, ',');
      if (parts.size() != 4) fail(key + " needs four entries");
      auto r = static_cast<std::size_t>(it - kRowNames.begin());
      for (std::size_t c = 0; c < 4; ++c) cur->sigma[r][c] = parts[c];
    } else if (key == "relation") {
      cur->relations.push_back(value);
    } else if (key == "constraint") {
      cur->constraints.push_back(value);
    } else if (key == "choice") {
      auto colon = value.find(':');
      if (colon == std::string::npos) fail("choice needs 'name: v1, v2'");
      auto v = param_from_name(trim(value.substr(0, colon)));
      if (!v) fail("unknown parameter in choice");
      cur->choices.push_back({*v, split(value.substr(colon + 1), ',')});
    } else if (key == "nonzero") {
      cur->nonzero.push_back(value);
    } else if (key == "conditions") {
      cur->conditions = value;
    } else if (key == "corollary") {
      cur->corollary = value;
    } else if (key == "note") {
      cur->note = value;
    } else if (key == "claim") {
      cur->claims.emplace_back();
      claim = &cur->claims.back();
      claim->id = value;
      continue;
    } else {
      fail("unknown key " + key);
    }
    if (key != "relation" && key != "constraint" && key != "choice" && key != "nonzero" &&
        !seen_keys[cur->name() + "@" + std::to_string(cur->line)].insert(key).second)
      fail("duplicate key " + key);
  }
  if (!have_format) throw MalformedRegistry(source + ": missing format line");

  std::set<std::string> labels;
  for (const auto& f : reg.families) {
    std::string where = source + ":" + std::to_string(f.line) + ": family " + f.name();
    if (!labels.insert(f.name()).second) throw MalformedRegistry(where + " appears twice");
    if (f.q[0].empty() || f.p[0].empty()) throw MalformedRegistry(where + " lacks P or Q");
    for (std::size_t r = 0; r < 4; ++r)
      if (f.sigma[r][0].empty())
        throw MalformedRegistry(where + " lacks sigma." + kRowNames[r]);
    try {
      Specialization sp;
      sp.drop_constraints = true;
      sp.require_choices = false;
      FamilyInstance inst = instantiate(f, sp);
      validate_relations(f, inst.system.rules(), inst.environment());
      for (const auto& c : f.constraints) parse_polynomial(c);
      for (const auto& c : f.nonzero) parse_polynomial(c);
      for (const auto& cl : f.claims) {
        for (const auto& g : cl.generators) parse_expression(g);
        for (const auto& g : cl.relations) parse_expression(g);
        for (const auto& g : cl.constraints) parse_polynomial(g);
      }
    } catch (const MalformedRegistry&) {
      throw;
    } catch (const std::exception& e) {
      throw MalformedRegistry(where + ": " + e.what());
    }
  }
  for (char c = 'A'; c <= 'Z'; ++c)
    if (!labels.count(std::string(1, c)))
      throw MalformedRegistry(source + ": family " + std::string(1, c) + " missing");
  return reg;
}

Registry load_registry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open registry " + path);
  return load_families(in, path);
}

std::string default_registry_path() {
  if (const char* env = std::getenv("DOEXT_REGISTRY"); env && *env) return env;
  return DOEXT_DEFAULT_REGISTRY;
}

std::vector<Param> FamilyInstance::free_parameters() const {
  std::vector<Param> out;
  for (Param v : spec.parameters())
    if (!values.count(v)) out.push_back(v);
  return out;
}

std::string FamilyInstance::parameter_summary() const {
  std::vector<std::string> parts;
  for (const auto& [v, val] : values) parts.push_back(std::string(param_name(v)) + " = " + val.to_string());
  if (context && !context->empty()) parts.push_back(context->to_string());
  for (Param v : free_parameters())
    if (!context || !context->constrains(v)) parts.push_back(std::string(param_name(v)) + " generic");
  if (parts.empty()) return "no parameters";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out;
}

FamilyInstance instantiate(const FamilySpec& spec, const Specialization& sp) {
  FamilyInstance inst;
  inst.spec = spec;
  inst.specialization = sp;
  for (const auto& ch : spec.choices) {
    if (sp.require_choices && !sp.values.count(ch.param)) {
      std::string opts;
      for (const auto& v : ch.values) opts += (opts.empty() ? "" : ", ") + v;
      throw UsageError("family " + spec.label + " needs --param " +
                       std::string(param_name(ch.param)) + "=<value> with value in {" + opts + "}");
    }
  }
  ConstraintSet cs;
  std::vector<std::pair<Param, Polynomial>> checked;
  if (!sp.drop_constraints) {
    for (const auto& c : spec.constraints) {
      Polynomial m = parse_polynomial(c);
      Param v = single_param(m, c);
      if (sp.values.count(v)) checked.push_back({v, m});
      else cs.add(v, m);
    }
  }
  for (const auto& c : sp.extra_constraints) {
    Polynomial m = parse_polynomial(c);
    Param v = single_param(m, c);
    if (sp.values.count(v))
      throw UsageError("parameter " + std::string(param_name(v)) + " is both bound and constrained");
    try {
      cs.add(v, m);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  inst.context = make_context(cs);
  Environment bare{inst.context, {}};
  for (const auto& [v, text] : sp.values) inst.values[v] = parse_scalar(text, bare);
  for (const auto& [v, m] : checked) {
    if (!evaluate(m, inst.values, inst.context).is_zero())
      throw ConstraintViolated(std::string(param_name(v)) + " = " + inst.values[v].to_string() +
                               " violates " + m.to_string() + " = 0 of family " + spec.label);
  }
  for (const auto& ch : spec.choices) {
    auto it = inst.values.find(ch.param);
    if (it == inst.values.end()) continue;
    bool ok = false;
    for (const auto& text : ch.values) ok = ok || parse_scalar(text, bare) == it->second;
    if (!ok)
      throw UsageError(std::string(param_name(ch.param)) + " = " + it->second.to_string() +
                               " is not an allowed value for family " + spec.label);
  }
  for (const auto& nz : spec.nonzero) {
    Polynomial m = parse_polynomial(nz);
    if (evaluate(m, inst.values, inst.context).is_zero())
      throw ConstraintViolated("family " + spec.label + " requires " + nz + " != 0");
  }
  Environment env = inst.environment();
  inst.q12 = parse_scalar(spec.q[0], env);
  inst.q11 = parse_scalar(spec.q[1], env);
  inst.p12 = parse_scalar(spec.p[0], env);
  inst.p11 = parse_scalar(spec.p[1], env);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) inst.sigma[r][c] = parse_scalar(spec.sigma[r][c], env);
  inst.system = build_rewrite_system(inst);
  return inst;
}

RewriteSystem build_rewrite_system(const FamilyInstance& inst) {
  return RewriteSystem(rules_from_data(inst.q12, inst.q11, inst.p12, inst.p11, inst.sigma),
                       inst.context);
}

std::vector<std::string> render_relations(const FamilySpec& spec) {
  Specialization sp;
  sp.drop_constraints = true;
  sp.require_choices = false;
  FamilyInstance inst = instantiate(spec, sp);
  std::vector<std::string> out;
  for (const auto& rule : inst.system.rules()) {
    std::string s = tex_word(rule.lhs()) + " = ";
    // Rule terms are stored in WordOrder; the tables list x1y1, x2y1, x1y2,
    // x2y2 and, for the quadratic relations, the mixed word first.
    std::vector<std::pair<Word, ParamScalar>> terms(rule.rhs.terms().begin(), rule.rhs.terms().end());
    auto rank = [](const Word& w) {
      if (w.size() == 2 && w[0] == w[1]) return 100;
      return static_cast<int>(w[1]) * 4 + static_cast<int>(w[0]);
    };
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const auto& a, const auto& b) { return rank(a.first) < rank(b.first); });
    bool first = true;
    for (const auto& [w, c] : terms) {
      bool neg = false;
      std::string coef = tex_coefficient(c, neg);
      if (first) s += (neg ? "-" : "");
      else s += (neg ? "-" : "+");
      s += coef + tex_word(w);
      first = false;
    }
    if (first) s += "0";
    out.push_back(s);
  }
  return out;
}

std::string normalize_relation_text(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') out.push_back(c);
  return out;
}

bool ConsistencyReport::passed() const { return failures().empty() && determinant_nonzero; }

std::vector<const ConsistencyReport::Check*> ConsistencyReport::failures() const {
  std::vector<const Check*> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(&c);
  return out;
}

ParamScalar determinant(std::vector<std::vector<ParamScalar>> m) {
  std::size_t n = m.size();
  if (n == 0) return ParamScalar(1);
  if (n == 1) return m[0][0];
  ParamScalar acc(0, m[0][0].context());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<ParamScalar>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<ParamScalar> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    ParamScalar t = m[0][c] * determinant(std::move(minor));
    if (c % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

namespace {

// Linear endomorphism of span(x1, x2): M[s][t] is the coefficient of x_t in
// the image of x_s.
using Map2 = std::array<std::array<ParamScalar, 2>, 2>;

Map2 sigma_map(const FamilyInstance& inst, int i, int j) {
  Map2 m;
  for (int s = 1; s <= 2; ++s)
    for (int t = 1; t <= 2; ++t) m[s - 1][t - 1] = inst.a(i, j, s, t);
  return m;
}

// (F o G)(x_s) = F(G(x_s)).
Map2 compose(const Map2& f, const Map2& g) {
  Map2 out;
  for (int s = 0; s < 2; ++s)
    for (int k = 0; k < 2; ++k) {
      ParamScalar acc = g[s][0] * f[0][k];
      acc += g[s][1] * f[1][k];
      out[s][k] = acc;
    }
  return out;
}

Map2 scaled(const Map2& m, const ParamScalar& c) {
  Map2 out = m;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

Map2 add(const Map2& a, const Map2& b) {
  Map2 out = a;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) out[s][t] += b[s][t];
  return out;
}

AlgebraElement image(const Map2& m, int s) {
  AlgebraElement e = AlgebraElement::term(Word{Letter::x1}, m[s][0]);
  e.add_term(Word{Letter::x2}, m[s][1]);
  return e;
}

}  // namespace

ConsistencyReport check_consistency(const FamilyInstance& inst) {
  ConsistencyReport rep;
  auto ctx = inst.context;
  RewriteSystem xsys({{Letter::x2, Letter::x1, *inst.system.rhs(Letter::x2, Letter::x1)}}, ctx);
  Map2 sig[2][2];
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) sig[i - 1][j - 1] = sigma_map(inst, i, j);

  // sigma_ij(x_f x_g) = sum_p sigma_ip(x_f) sigma_pj(x_g)
  auto sigma_product = [&](int i, int j, int f, int g) {
    AlgebraElement acc;
    for (int p = 0; p < 2; ++p) acc += image(sig[i][p], f) * image(sig[p][j], g);
    return acc;
  };
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      AlgebraElement e = sigma_product(i, j, 1, 0);
      e -= inst.q11 * sigma_product(i, j, 0, 0);
      e -= inst.q12 * sigma_product(i, j, 0, 1);
      AlgebraElement r = normal_form(e, xsys);
      ConsistencyReport::Check c;
      c.identity = "sigma" + std::to_string(i + 1) + std::to_string(j + 1) +
                   "(x2*x1 - q11*x1^2 - q12*x1*x2) = 0";
      c.point = "x2*x1";
      c.passed = r.is_zero();
      c.residual = r.to_string();
      rep.checks.push_back(std::move(c));
    }
  }

  const Map2 &s11 = sig[0][0], &s12 = sig[0][1], &s21 = sig[1][0], &s22 = sig[1][1];
  const ParamScalar &p11 = inst.p11, &p12 = inst.p12;
  struct Identity {
    std::string text;
    Map2 lhs, rhs;
  };
  std::vector<Identity> ids;
  ids.push_back({"s21 s11 + p11 s22 s11 = p11 s11^2 + p11^2 s12 s11 + p12 s11 s21 + p11 p12 s12 s21",
                 add(compose(s21, s11), scaled(compose(s22, s11), p11)),
                 add(add(scaled(compose(s11, s11), p11), scaled(compose(s12, s11), p11 * p11)),
                     add(scaled(compose(s11, s21), p12), scaled(compose(s12, s21), p11 * p12)))});
  ids.push_back({"s21 s12 + p12 s22 s11 = p11 s11 s12 + p11 p12 s12 s11 + p12 s11 s22 + p12^2 s12 s21",
                 add(compose(s21, s12), scaled(compose(s22, s11), p12)),
                 add(add(scaled(compose(s11, s12), p11), scaled(compose(s12, s11), p11 * p12)),
                     add(scaled(compose(s11, s22), p12), scaled(compose(s12, s21), p12 * p12)))});
  ids.push_back({"s22 s12 = p11 s12^2 + p12 s12 s22", compose(s22, s12),
                 add(scaled(compose(s12, s12), p11), scaled(compose(s12, s22), p12))});
  for (const auto& id : ids) {
    for (int s = 0; s < 2; ++s) {
      AlgebraElement r = image(id.lhs, s) - image(id.rhs, s);
      ConsistencyReport::Check c;
      c.identity = id.text;
      c.point = s == 0 ? "x1" : "x2";
      c.passed = r.is_zero();
      c.residual = r.to_string();
      rep.checks.push_back(std::move(c));
    }
  }

  std::vector<std::vector<ParamScalar>> m(4, std::vector<ParamScalar>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = inst.sigma[r][c];
  rep.determinant = determinant(m);
  rep.determinant_nonzero = !rep.determinant.is_zero();
  return rep;
}

void require_consistent(const FamilyInstance& inst) {
  ConsistencyReport rep = check_consistency(inst);
  if (rep.passed()) return;
  if (!rep.determinant_nonzero) throw ConsistencyFailure(inst.spec.name() + ": det sigma = 0");
  const auto* f = rep.failures().front();
  throw ConsistencyFailure(inst.spec.name() + ": " + f->identity + " fails at " + f->point +
                           " with residual " + f->residual);
}

}  // namespace doext
