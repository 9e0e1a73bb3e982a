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

#include "doext/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "doext/center.hpp"
#include "doext/formulas.hpp"
#include "doext/registry.hpp"

namespace doext {

namespace {

struct RunConfig {
  std::string registry;
  std::string family;
  std::string variant;
  std::vector<std::string> params;
  std::vector<std::string> constraints;
  std::string format = "text";
  std::size_t max_steps = kDefaultMaxSteps;
  unsigned threads = 1;
};

Bidegree parse_bidegree(const std::string& text) {
  auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    std::size_t used = 0;
    int a = std::stoi(text.substr(0, comma), &used);
    int b = std::stoi(text.substr(comma + 1));
    if (a < 0 || b < 0) throw std::invalid_argument("");
    return {static_cast<unsigned>(a), static_cast<unsigned>(b)};
  } catch (const std::exception&) {
    throw UsageError("expected a bidegree a,b with nonnegative integers, got '" + text + "'");
  }
}

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  const Registry& registry() {
    if (!registry_) {
      std::string path = cfg_.registry.empty() ? default_registry_path() : cfg_.registry;
      registry_ = load_registry_file(path);
    }
    return *registry_;
  }

  const FamilySpec& spec() {
    if (cfg_.family.empty()) throw UsageError("this command needs --family <label>");
    return registry().find(cfg_.family, cfg_.variant);
  }

  Specialization specialization() {
    const FamilySpec& fs = spec();
    Specialization sp;
    auto known = fs.parameters();
    for (const auto& b : cfg_.params) {
      auto eq = b.find('=');
      if (eq == std::string::npos) throw UsageError("--param expects name=value, got '" + b + "'");
      std::string name = b.substr(0, eq);
      name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
      auto v = param_from_name(name);
      if (!v) throw UsageError("unknown parameter '" + name + "'");
      if (std::find(known.begin(), known.end(), *v) == known.end())
        throw UsageError("family " + fs.label + " has no parameter " + name);
      sp.values[*v] = b.substr(eq + 1);
    }
    sp.extra_constraints = cfg_.constraints;
    return sp;
  }

  const FamilyInstance& instance() {
    if (!instance_) instance_ = instantiate(spec(), specialization());
    return *instance_;
  }

  Reducer& reducer() {
    if (!reducer_) reducer_.emplace(instance().system, cfg_.max_steps);
    return *reducer_;
  }

  bool json() const { return cfg_.format == "json"; }

  Json header() {
    const auto& inst = instance();
    Json j;
    j["family"] = inst.spec.name();
    j["parameters"] = inst.parameter_summary();
    j["assumptions"] = generic_assumptions(inst);
    return j;
  }

  void text_header() {
    Json h = header();
    out_ << "# family " << h["family"].get<std::string>() << "; "
         << h["parameters"].get<std::string>() << "\n";
    for (const auto& a : h["assumptions"]) out_ << "# assumption: " << a.get<std::string>() << "\n";
  }

  int emit(Json j, const std::string& text, int status) {
    if (json()) {
      j["exit_status"] = status;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << text;
    }
    return status;
  }

  AlgebraElement element(const std::string& text) {
    return parse_element(text, instance().environment());
  }

  const RunConfig& cfg() const { return cfg_; }
  std::ostream& out() { return out_; }

 private:
  RunConfig cfg_;
  std::ostream& out_;
  std::optional<Registry> registry_;
  std::optional<FamilyInstance> instance_;
  std::optional<Reducer> reducer_;
};

std::string family_text(const FamilySpec& fs) {
  std::ostringstream os;
  os << "family: " << fs.name() << "\n";
  os << "Q = (" << fs.q[0] << ", " << fs.q[1] << ")\n";
  os << "P = (" << fs.p[0] << ", " << fs.p[1] << ")\n";
  static const char* rows[4] = {"y1x1", "y1x2", "y2x1", "y2x2"};
  for (int r = 0; r < 4; ++r) {
    os << "sigma." << rows[r] << " =";
    for (int c = 0; c < 4; ++c) os << (c ? ", " : " ") << fs.sigma[r][c];
    os << "\n";
  }
  for (const auto& r : fs.relations) os << "relation: " << r << "\n";
  for (const auto& c : fs.constraints) os << "constraint: " << c << " = 0\n";
  for (const auto& ch : fs.choices) {
    os << "choice: " << param_name(ch.param) << " in {";
    for (std::size_t i = 0; i < ch.values.size(); ++i) os << (i ? ", " : "") << ch.values[i];
    os << "}\n";
  }
  for (const auto& n : fs.nonzero) os << "nonzero: " << n << "\n";
  if (!fs.conditions.empty()) os << "conditions: " << fs.conditions << "\n";
  os << "corollary: " << fs.corollary << "\n";
  if (!fs.note.empty()) os << "note: " << fs.note << "\n";
  for (const auto& c : fs.claims) {
    os << "claim " << c.id << " (" << (c.kind == ClaimSpec::Kind::kCenter ? "center" : "subalgebra") << "):";
    for (const auto& [v, val] : c.params) os << " " << param_name(v) << "=" << val;
    for (const auto& k : c.constraints) os << " [" << k << " = 0]";
    for (const auto& g : c.generators) os << " {" << g << "}";
    os << "\n";
  }
  return os.str();
}

Json family_json(const FamilySpec& fs) {
  Json j;
  j["family"] = fs.label;
  j["variant"] = fs.variant;
  j["Q"] = {fs.q[0], fs.q[1]};
  j["P"] = {fs.p[0], fs.p[1]};
  Json sigma = Json::array();
  for (const auto& r : fs.sigma) sigma.push_back({r[0], r[1], r[2], r[3]});
  j["sigma"] = sigma;
  j["relations"] = fs.relations;
  j["constraints"] = fs.constraints;
  Json ch = Json::array();
  for (const auto& c : fs.choices) ch.push_back({{"param", std::string(param_name(c.param))}, {"values", c.values}});
  j["choices"] = ch;
  j["nonzero"] = fs.nonzero;
  j["conditions"] = fs.conditions;
  j["corollary"] = fs.corollary;
  Json cl = Json::array();
  for (const auto& c : fs.claims) cl.push_back(c.id);
  j["claims"] = cl;
  return j;
}

int cmd_families(Session& s, const std::string& action) {
  if (action == "list") {
    Json arr = Json::array();
    std::ostringstream os;
    for (const auto& fs : s.registry().families) {
      std::string params;
      for (Param v : fs.parameters()) params += (params.empty() ? "" : ",") + std::string(param_name(v));
      arr.push_back({{"family", fs.label}, {"variant", fs.variant}, {"parameters", params},
                     {"conditions", fs.conditions}});
      os << fs.name() << "\t" << (params.empty() ? "-" : params) << "\t" << fs.conditions << "\n";
    }
    return s.emit(Json{{"families", arr}}, os.str(), kExitConfirmed);
  }
  const FamilySpec& fs = s.spec();
  if (action == "show") return s.emit(family_json(fs), family_text(fs), kExitConfirmed);
  if (action == "render-relations") {
    auto rel = render_relations(fs);
    std::string text;
    for (const auto& r : rel) text += r + "\n";
    return s.emit(Json{{"family", fs.name()}, {"relations", rel}}, text, kExitConfirmed);
  }
  throw UsageError("families expects list, show or render-relations");
}

int cmd_nf(Session& s, const std::string& expr, bool trace) {
  AlgebraElement e = s.element(expr);
  std::ostringstream tr;
  AlgebraElement nf = normal_form(e, s.instance().system, s.cfg().max_steps, trace ? &tr : nullptr);
  Json j = s.header();
  j["input"] = expr;
  j["normal_form"] = nf.to_string();
  if (trace) j["trace"] = tr.str();
  std::ostringstream os;
  if (!s.json()) s.text_header();
  if (trace) os << tr.str();
  os << nf.to_string() << "\n";
  return s.emit(j, os.str(), kExitConfirmed);
}

int cmd_comm(Session& s, const std::string& a, const std::string& b) {
  AlgebraElement c = s.reducer().commutator(s.element(a), s.element(b));
  Json j = s.header();
  j["left"] = a;
  j["right"] = b;
  j["commutator"] = c.to_string();
  if (!s.json()) s.text_header();
  return s.emit(j, c.to_string() + "\n", kExitConfirmed);
}

int cmd_central(Session& s, const std::string& expr) {
  auto rep = is_central(s.element(expr), s.reducer());
  Json j = s.header();
  j["result"] = to_json(rep);
  if (!s.json()) s.text_header();
  return s.emit(j, to_text(rep), rep.central ? kExitConfirmed : kExitFalsified);
}

int cmd_center(Session& s, Bidegree bd) {
  BidegreeSolve sol = center_bidegree(s.reducer(), bd);
  Json j = s.header();
  j["result"] = to_json(sol);
  std::ostringstream os;
  if (!s.json()) s.text_header();
  os << "bidegree " << bd.to_string() << ": dimension " << sol.dimension() << "\n";
  for (const auto& e : sol.basis) os << e.to_string() << "\n";
  return s.emit(j, os.str(), kExitConfirmed);
}

int cmd_scan(Session& s, Bidegree bound, const std::vector<std::string>& normal) {
  ScanOptions opt{bound, s.cfg().threads, {}};
  for (const auto& e : normal) opt.normal_candidates.push_back(s.element(e));
  CenterReport rep = center_scan(s.instance(), opt);
  return s.emit(to_json(rep), to_text(rep), kExitConfirmed);
}

int cmd_normality(Session& s, const std::string& expr) {
  auto wit = check_normality(s.element(expr), s.reducer());
  Json j = s.header();
  j["input"] = expr;
  j["witness"] = wit ? to_json(*wit) : Json(nullptr);
  if (!s.json()) s.text_header();
  std::string text = wit ? to_text(*wit) : "no normality witness for " + expr + "\n";
  return s.emit(j, text, wit ? kExitConfirmed : kExitFalsified);
}

int cmd_power_central(Session& s, const std::string& expr, unsigned n) {
  if (n == 0) throw UsageError("--n must be a positive integer");
  auto rep = verify_power_central(s.element(expr), n, s.reducer());
  Json j = s.header();
  j["result"] = to_json(rep);
  if (!s.json()) s.text_header();
  bool ok = rep.central() && rep.agree();
  return s.emit(j, to_text(rep), ok ? kExitConfirmed : kExitFalsified);
}

int cmd_verify_consistency(Session& s) {
  const auto& inst = s.instance();
  ConsistencyReport cons = check_consistency(inst);
  TerminationReport term = check_termination(inst.system);
  ConfluenceReport conf = check_local_confluence(inst.system, s.cfg().max_steps);
  bool ok = cons.passed() && term.passed() && conf.confluent();
  Json j = s.header();
  Json checks = Json::array();
  std::ostringstream os;
  if (!s.json()) s.text_header();
  for (const auto& c : cons.checks) {
    checks.push_back({{"identity", c.identity}, {"point", c.point}, {"passed", c.passed}, {"residual", c.residual}});
    if (!c.passed) os << "FAIL " << c.identity << " at " << c.point << ": residual " << c.residual << "\n";
  }
  os << "system checks: " << (cons.failures().empty() ? "pass" : "fail") << " ("
     << cons.checks.size() - cons.failures().size() << "/" << cons.checks.size() << ")\n";
  os << "det sigma = " << cons.determinant.to_string() << (cons.determinant_nonzero ? " (nonzero)" : " (ZERO)") << "\n";
  os << "termination: " << (term.passed() ? "pass" : "fail") << "\n";
  os << "local confluence: " << conf.overlaps.size() - conf.mismatches() << "/" << conf.overlaps.size()
     << " overlaps resolve\n";
  for (const auto& o : conf.overlaps)
    if (!o.agrees)
      os << "  overlap " << o.word.to_string() << ": " << o.left.to_string() << " vs " << o.right.to_string() << "\n";
  os << "verdict: " << (ok ? "consistent" : "inconsistent") << "\n";
  j["checks"] = checks;
  j["determinant"] = cons.determinant.to_string();
  j["determinant_nonzero"] = cons.determinant_nonzero;
  j["termination"] = term.passed();
  Json ov = Json::array();
  for (const auto& o : conf.overlaps)
    ov.push_back({{"word", o.word.to_string()}, {"left", o.left.to_string()}, {"right", o.right.to_string()}, {"agrees", o.agrees}});
  j["overlaps"] = ov;
  j["consistent"] = ok;
  return s.emit(j, os.str(), ok ? kExitConfirmed : kExitFalsified);
}

int cmd_verify_formulas(Session& s, std::optional<unsigned> nmax) {
  FormulaOptions opt;
  if (nmax) {
    opt.closed_nmax = *nmax;
    opt.recursion_nmax = *nmax;
    opt.c_recursion_nmax = *nmax;
  }
  if (!s.cfg().family.empty()) {
    s.registry().find(s.cfg().family);  // validates the label
    opt.families = {s.cfg().family};
  }
  VerificationMatrix m = verify_formulas(s.registry(), opt);
  // Normal forms are the ground truth; printed recursions may diverge.
  bool ok = true;
  for (const auto& r : m.rows)
    if (r.form != "printed" && !r.result.match) ok = false;
  Json j = to_json(m);
  j["normal_form_forms_match"] = ok;
  std::string text = to_text(m, true) + "verdict: " +
                     (ok ? "closed forms and recursions confirmed" : "divergence from normal form") + "\n";
  return s.emit(j, text, ok ? kExitConfirmed : kExitFalsified);
}

int cmd_verify_tables(Session& s, Bidegree bound, const std::string& claim_id) {
  std::vector<const FamilySpec*> specs;
  if (s.cfg().family.empty()) {
    specs = s.registry().primary();
  } else {
    specs.push_back(&s.spec());
  }
  Specialization base;
  if (!s.cfg().family.empty()) base = s.specialization();
  TableOptions opt{bound, s.cfg().threads};
  Json arr = Json::array();
  std::ostringstream os;
  bool ok = true;
  std::size_t checked = 0;
  for (const FamilySpec* fs : specs) {
    // A variant without claims of its own is checked against the primary record's claims.
    const std::vector<ClaimSpec>* claims = &fs->claims;
    if (claims->empty() && !fs->variant.empty()) claims = &s.registry().find(fs->label).claims;
    for (const auto& c : *claims) {
      if (!claim_id.empty() && c.id != claim_id) continue;
      ++checked;
      TableEntryReport rep = verify_table_entry(*fs, c, base, opt);
      if (!fs->variant.empty()) rep.family = fs->name();
      arr.push_back(to_json(rep));
      os << "[" << rep.family << "] " << to_text(rep);
      if (!rep.confirmed()) {
        ok = false;
        os << "ClaimFalsified: " << rep.family << " " << rep.claim << ": " << rep.falsifications.front() << "\n";
      }
    }
    if (claims->empty() && claim_id.empty()) {
      // Nothing to check beyond the relations themselves.
      ConsistencyReport cons = check_consistency(instantiate(*fs, base));
      if (!cons.passed()) {
        ok = false;
        os << "ClaimFalsified: " << fs->name() << ": relations inconsistent\n";
      }
    }
  }
  if (!claim_id.empty() && checked == 0) throw UsageError("no claim " + claim_id);
  os << "verdict: " << (ok ? "all claims confirmed" : "falsified") << "\n";
  return s.emit(Json{{"claims", arr}, {"confirmed", ok}}, os.str(), ok ? kExitConfirmed : kExitFalsified);
}

int cmd_cancellation(Session& s, Bidegree bound) {
  CancellationReport rep = cancellation_report(s.instance(), bound, s.cfg().threads);
  return s.emit(to_json(rep), to_text(rep), rep.verdict ? kExitConfirmed : kExitFalsified);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact normal forms, centers and formula checks for double Ore extensions of type (14641)",
               "doext"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--registry", cfg.registry, "Registry file (default: $DOEXT_REGISTRY or the built-in path)");
    sub->add_option("--family", cfg.family, "Family label A..Z");
    sub->add_option("--variant", cfg.variant, "Registry variant, e.g. misprint");
    sub->add_option("--param", cfg.params, "Parameter binding name=value (repeatable)")->allow_extra_args(false);
    sub->add_option("--constraint", cfg.constraints, "Extra minimal polynomial, e.g. 'f^2 + 1' (repeatable)")
        ->allow_extra_args(false);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-steps", cfg.max_steps, "Rewriting step budget");
    sub->add_option("--threads", cfg.threads, "Worker threads for center scans");
  };

  std::string action, expr, expr2, bidegree, bound, claim;
  std::vector<std::string> normal;
  std::optional<unsigned> nmax;
  unsigned power = 0;
  bool trace = false;

  auto* families = app.add_subcommand("families", "List, show or render registry records");
  families->add_option("action", action, "list | show | render-relations")->required()
      ->check(CLI::IsMember({"list", "show", "render-relations"}));
  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("expr", expr)->required();
  nf->add_flag("--trace", trace, "Print each rewrite");
  auto* comm = app.add_subcommand("comm", "Normal form of [a, b]");
  comm->add_option("a", expr)->required();
  comm->add_option("b", expr2)->required();
  auto* central = app.add_subcommand("central", "Check centrality");
  central->add_option("expr", expr)->required();
  auto* center = app.add_subcommand("center", "Center in one bidegree");
  center->add_option("--bidegree", bidegree, "a,b")->required();
  auto* scan = app.add_subcommand("scan", "Center in all bidegrees up to a bound");
  scan->add_option("--bound", bound, "a,b (default 4,4)");
  scan->add_option("--normal", normal, "Also report a normality witness for this element (repeatable)")
      ->allow_extra_args(false);
  auto* normality = app.add_subcommand("normality", "Find lambda with g*w = lambda_g*w*g");
  normality->add_option("expr", expr)->required();
  auto* pc = app.add_subcommand("power-central", "Check that w^n is central by two routes");
  pc->add_option("expr", expr)->required();
  pc->add_option("--n", power, "Exponent")->required();
  auto* vc = app.add_subcommand("verify-consistency", "Compatibility identities, det sigma, termination, confluence");
  auto* vf = app.add_subcommand("verify-formulas", "Closed forms and recursions against normal forms");
  vf->add_option("--nmax", nmax, "Largest n");
  auto* vt = app.add_subcommand("verify-tables", "Check the center and central subalgebra claims");
  vt->add_option("--bound", bound, "a,b (default 4,4)");
  vt->add_option("--claim", claim, "Only this claim id, e.g. D.1");
  auto* canc = app.add_subcommand("cancellation", "Universal cancellation verdict");
  canc->add_option("--bound", bound, "a,b (default 3,3)");
  for (auto* sub : {families, nf, comm, central, center, scan, normality, pc, vc, vf, vt, canc}) common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Session s(cfg, out);
  try {
    if (families->parsed()) return cmd_families(s, action);
    if (nf->parsed()) return cmd_nf(s, expr, trace);
    if (comm->parsed()) return cmd_comm(s, expr, expr2);
    if (central->parsed()) return cmd_central(s, expr);
    if (center->parsed()) return cmd_center(s, parse_bidegree(bidegree));
    if (scan->parsed()) return cmd_scan(s, bound.empty() ? Bidegree{4, 4} : parse_bidegree(bound), normal);
    if (normality->parsed()) return cmd_normality(s, expr);
    if (pc->parsed()) return cmd_power_central(s, expr, power);
    if (vc->parsed()) return cmd_verify_consistency(s);
    if (vf->parsed()) return cmd_verify_formulas(s, nmax);
    if (vt->parsed()) return cmd_verify_tables(s, bound.empty() ? Bidegree{4, 4} : parse_bidegree(bound), claim);
    if (canc->parsed()) return cmd_cancellation(s, bound.empty() ? Bidegree{3, 3} : parse_bidegree(bound));
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LoweringError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MalformedRegistry& e) {
    err << "error: malformed registry: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstraintViolated& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DenominatorVanishes& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StepBudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --max-steps)\n";
    return kExitUsage;
  } catch (const ClaimFalsified& e) {
    err << "ClaimFalsified: " << e.what() << "\n";
    return kExitFalsified;
  }
  return kExitUsage;
}

}  // namespace doext
