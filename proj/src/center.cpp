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

#include "doext/center.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace doext {

namespace {

AlgebraElement gen(Letter a) { return AlgebraElement::generator(a); }

std::string commutator_text(const AlgebraElement& e, Letter g) {
  return "[" + e.to_string() + ", " + std::string(letter_name(g)) + "]";
}

// Coordinates of a homogeneous element in the PBW basis of bd.
class Coordinates {
 public:
  explicit Coordinates(Bidegree bd) : bd_(bd) {
    auto mons = enumerate_pbw(bd);
    for (std::size_t i = 0; i < mons.size(); ++i) index_.emplace(mons[i].word(), i);
  }
  std::size_t size() const { return index_.size(); }
  ScalarVector operator()(const AlgebraElement& e) const {
    ScalarVector v(index_.size(), ParamScalar(0, e.context()));
    for (const auto& [w, c] : e.terms()) {
      auto it = index_.find(w);
      if (it == index_.end())
        throw std::logic_error(w.to_string() + " is not a normal word of bidegree " +
                               bd_.to_string());
      v[it->second] = c;
    }
    return v;
  }

 private:
  Bidegree bd_;
  std::map<Word, std::size_t, WordOrder> index_;
};

std::vector<Bidegree> bidegrees_within(Bidegree bound) {
  std::vector<Bidegree> out;
  for (unsigned i = 0; i <= bound.x; ++i)
    for (unsigned j = 0; j <= bound.y; ++j) out.push_back({i, j});
  return out;
}


std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

bool depends_on_generic(const ParamScalar& x, const FamilyInstance& inst) {
  for (Param v : inst.free_parameters()) {
    if (inst.context && inst.context->constrains(v)) continue;
    if (x.depends_on(v)) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> generic_assumptions(const FamilyInstance& inst) {
  std::vector<std::string> out;
  for (Param v : inst.free_parameters()) {
    if (inst.context && inst.context->constrains(v)) continue;
    out.push_back(std::string(param_name(v)) + " treated as transcendental");
  }
  return out;
}

CentralityReport is_central(const AlgebraElement& e, Reducer& red) {
  CentralityReport rep;
  rep.element = red.normal_form(e);
  for (Letter g : kLetters) {
    AlgebraElement c = red.multiply(rep.element, gen(g)) - red.multiply(gen(g), rep.element);
    if (!c.is_zero()) {
      rep.central = false;
      rep.commutators.emplace_back(g, std::move(c));
    }
  }
  return rep;
}

CentralityReport is_central(const AlgebraElement& e, const RewriteSystem& sys) {
  Reducer red(sys);
  return is_central(e, red);
}

CentralityLinearSystem centrality_system(Reducer& red, Bidegree bd) {
  CentralityLinearSystem out;
  out.bidegree = bd;
  out.unknowns = enumerate_pbw(bd);
  const auto& ctx = red.system().context();
  std::size_t n = out.unknowns.size();
  for (Letter g : kLetters) {
    std::map<Word, ScalarVector, WordOrder> rows;
    for (std::size_t i = 0; i < n; ++i) {
      Word m = out.unknowns[i].word();
      AlgebraElement c = red.multiply(AlgebraElement::term(m, ParamScalar(1, ctx)), gen(g)) -
                         red.normal_form(Word{g} + m);
      for (const auto& [w, coeff] : c.terms()) {
        auto [it, fresh] = rows.try_emplace(w, ScalarVector(n, ParamScalar(0, ctx)));
        it->second[i] = coeff;
      }
    }
    for (auto& [w, row] : rows) {
      out.row_labels.emplace_back(g, w);
      out.matrix.push_back(std::move(row));
    }
  }
  return out;
}

BidegreeSolve center_bidegree(Reducer& red, Bidegree bd) {
  CentralityLinearSystem sys = centrality_system(red, bd);
  BidegreeSolve out;
  out.bidegree = bd;
  out.unknowns = sys.unknowns.size();
  out.equations = sys.matrix.size();
  auto kernel = kernel_basis(std::move(sys.matrix), out.unknowns);
  out.rank = out.unknowns - kernel.size();
  for (const auto& v : kernel) {
    AlgebraElement e;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) e.add_term(sys.unknowns[i].word(), v[i]);
    if (!is_central(e, red).central)
      throw std::logic_error("kernel element " + e.to_string() + " failed the centrality recheck");
    out.basis.push_back(std::move(e));
  }
  return out;
}

BidegreeSolve center_bidegree(const FamilyInstance& inst, Bidegree bd) {
  Reducer red(inst.system);
  return center_bidegree(red, bd);
}

std::optional<NormalityWitness> check_normality(const AlgebraElement& w, Reducer& red) {
  NormalityWitness out;
  out.element = red.normal_form(w);
  if (out.element.is_zero()) return std::nullopt;
  for (Letter g : kLetters) {
    AlgebraElement left = red.multiply(gen(g), out.element);
    AlgebraElement right = red.multiply(out.element, gen(g));
    if (right.is_zero()) return std::nullopt;
    const auto& [w0, c0] = *right.terms().begin();
    ParamScalar lambda = left.coefficient(w0) / c0;
    if (left != right * lambda) return std::nullopt;
    out.lambda[static_cast<int>(g)] = lambda;
  }
  return out;
}

std::vector<AlgebraElement> extend_span(const std::vector<AlgebraElement>& base,
                                        const std::vector<AlgebraElement>& candidates,
                                        Bidegree bd, std::size_t* base_rank) {
  Coordinates coords(bd);
  ScalarMatrix rows;
  for (const auto& b : base) rows.push_back(coords(b));
  std::size_t r = matrix_rank(rows, coords.size());
  if (base_rank) *base_rank = r;
  std::vector<AlgebraElement> picked;
  for (const auto& c : candidates) {
    if (r == coords.size()) break;
    rows.push_back(coords(c));
    std::size_t r2 = matrix_rank(rows, coords.size());
    if (r2 > r) {
      picked.push_back(c);
      r = r2;
    } else {
      rows.pop_back();
    }
  }
  return picked;
}

const BidegreeSolve* CenterReport::at(Bidegree bd) const {
  for (const auto& d : degrees)
    if (d.bidegree == bd) return &d;
  return nullptr;
}

bool CenterReport::only_constants() const {
  for (const auto& d : degrees)
    if (d.bidegree != Bidegree{0, 0} && d.dimension() > 0) return false;
  return true;
}

std::vector<AlgebraElement> CenterReport::generators() const {
  std::vector<AlgebraElement> out;
  for (const auto& d : degrees) out.insert(out.end(), d.new_generators.begin(), d.new_generators.end());
  return out;
}

CenterReport center_scan(const FamilyInstance& inst, const ScanOptions& opt) {
  CenterReport rep;
  rep.family = inst.spec.name();
  rep.parameters = inst.parameter_summary();
  rep.assumptions = generic_assumptions(inst);
  rep.bound = opt.bound;
  auto bds = bidegrees_within(opt.bound);
  rep.degrees.resize(bds.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    Reducer red(inst.system);
    for (std::size_t i = next++; i < bds.size(); i = next++) {
      try {
        rep.degrees[i] = center_bidegree(red, bds[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = std::max(1U, opt.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Reducer red(inst.system);
  for (auto& d : rep.degrees) {
    if (d.bidegree == Bidegree{0, 0}) {
      d.from_products = d.dimension();
      continue;
    }
    if (d.basis.empty()) continue;
    std::vector<AlgebraElement> products;
    for (const auto& lo : rep.degrees) {
      Bidegree a = lo.bidegree;
      if (a == Bidegree{0, 0} || !a.within(d.bidegree) || a == d.bidegree) continue;
      Bidegree b{d.bidegree.x - a.x, d.bidegree.y - a.y};
      if (b < a) continue;
      const BidegreeSolve* hi = rep.at(b);
      for (const auto& e1 : lo.basis)
        for (const auto& e2 : hi->basis) products.push_back(red.multiply(e1, e2));
    }
    d.new_generators = extend_span(products, d.basis, d.bidegree, &d.from_products);
  }
  for (const auto& w : opt.normal_candidates)
    if (auto wit = check_normality(w, red)) rep.witnesses.push_back(std::move(*wit));
  return rep;
}

PowerCentralReport verify_power_central(const AlgebraElement& w, unsigned n, Reducer& red) {
  if (n == 0) throw std::invalid_argument("power must be positive");
  PowerCentralReport rep;
  rep.n = n;
  rep.element = red.normal_form(w);
  AlgebraElement wn = rep.element;
  for (unsigned i = 1; i < n; ++i) wn = red.multiply(wn, rep.element);
  rep.direct = is_central(wn, red);
  rep.witness = check_normality(rep.element, red);
  if (rep.witness) {
    rep.lambda_central = true;
    for (int g = 0; g < 4; ++g) {
      rep.lambda_power[g] = rep.witness->lambda[g].pow(n);
      if (!rep.lambda_power[g].is_one()) rep.lambda_central = false;
    }
  }
  return rep;
}

std::string TableEntryReport::verdict() const {
  if (!confirmed()) return "falsified: " + falsifications.front();
  if (kind == ClaimSpec::Kind::kCenter) return "confirmed up to bidegree " + bound.to_string();
  return "confirmed: all listed generators central";
}

TableEntryReport verify_table_entry(const FamilySpec& fs, const ClaimSpec& claim,
                                    const Specialization& base, const TableOptions& opt) {
  Specialization sp = base;
  for (const auto& [v, val] : claim.params) sp.values.try_emplace(v, val);
  for (const auto& c : claim.constraints) sp.extra_constraints.push_back(c);
  FamilyInstance inst = instantiate(fs, sp);

  TableEntryReport rep;
  rep.family = fs.name();
  rep.claim = claim.id;
  rep.kind = claim.kind;
  rep.parameters = inst.parameter_summary();
  rep.assumptions = generic_assumptions(inst);
  if (!claim.hypothesis.empty()) rep.assumptions.push_back("hypothesis: " + claim.hypothesis);
  rep.bound = opt.bound;

  ConsistencyReport cons = check_consistency(inst);
  bool consistent = cons.passed();
  if (!consistent) {
    std::string what = "relations inconsistent";
    if (!cons.determinant_nonzero) what += ": det sigma = 0";
    if (auto f = cons.failures(); !f.empty())
      what += ": " + f.front()->identity + " at " + f.front()->point + " leaves " + f.front()->residual;
    rep.falsifications.push_back(what);
    rep.consistency = std::move(cons);
  }

  Reducer red(inst.system);
  Environment env = inst.environment();
  std::vector<AlgebraElement> gens;
  for (const auto& text : claim.generators) {
    AlgebraElement e = parse_element(text, env);
    auto cr = is_central(e, red);
    if (!cr.central) {
      const auto& [g, c] = cr.commutators.front();
      rep.falsifications.push_back("generator " + text + " is not central: " +
                                   commutator_text(cr.element, g) + " = " + c.to_string());
    }
    gens.push_back(cr.element);
    rep.generators.push_back({text, std::move(cr)});
  }
  for (const auto& text : claim.relations) {
    TableEntryReport::RelationCheck rc{text, red.normal_form(parse_element(text, env))};
    if (!rc.holds())
      rep.falsifications.push_back("relation " + text + " has normal form " + rc.normal_form.to_string());
    rep.relations.push_back(std::move(rc));
  }

  if (claim.kind == ClaimSpec::Kind::kCenter && consistent) {
    // Homogeneous pieces of the generators, then all their products in range.
    std::vector<AlgebraElement> pieces;
    for (const auto& g : gens)
      for (auto& [bd, part] : bidegree_split(g))
        if (bd != Bidegree{0, 0}) pieces.push_back(part);
    std::map<Bidegree, std::vector<AlgebraElement>> claimed;
    const auto& ctx = inst.system.context();
    std::function<void(std::size_t, Bidegree, const AlgebraElement&)> grow =
        [&](std::size_t k, Bidegree bd, const AlgebraElement& prod) {
          if (k == pieces.size()) {
            claimed[bd].push_back(prod);
            return;
          }
          grow(k + 1, bd, prod);
          Bidegree step = *pieces[k].bidegree();
          Bidegree cur = bd + step;
          AlgebraElement p = prod;
          while (cur.within(opt.bound)) {
            p = red.multiply(p, pieces[k]);
            grow(k + 1, cur, p);
            cur = cur + step;
          }
        };
    grow(0, {0, 0}, AlgebraElement(ParamScalar(1, ctx)));

    CenterReport scan = center_scan(inst, {opt.bound, opt.threads, {}});
    for (const auto& d : scan.degrees) {
      TableEntryReport::DegreeCheck dc;
      dc.bidegree = d.bidegree;
      dc.kernel = d.dimension();
      const auto& mine = claimed[d.bidegree];
      dc.extra = extend_span(mine, d.basis, d.bidegree, &dc.claimed);
      if (!dc.ok()) {
        if (!dc.extra.empty())
          rep.falsifications.push_back("central element outside the claimed subalgebra at " +
                                       d.bidegree.to_string() + ": " + dc.extra.front().to_string());
        else
          rep.falsifications.push_back("claimed span has dimension " + std::to_string(dc.claimed) +
                                       " but the center has dimension " + std::to_string(dc.kernel) +
                                       " at " + d.bidegree.to_string());
      }
      rep.degrees.push_back(std::move(dc));
    }
  }
  return rep;
}

void require_confirmed(const TableEntryReport& rep) {
  if (!rep.confirmed())
    throw ClaimFalsified(rep.family + " " + rep.claim + ": " + rep.falsifications.front());
}

bool is_low_degree_root_of_unity(const ParamScalar& x) {
  for (unsigned n : {1U, 2U, 3U, 4U, 6U})
    if (x.pow(n).is_one()) return true;
  return false;
}

CancellationReport cancellation_report(const FamilyInstance& inst, Bidegree bound,
                                       unsigned threads) {
  CancellationReport rep;
  rep.family = inst.spec.name();
  rep.parameters = inst.parameter_summary();
  rep.bound = bound;
  rep.corollary = inst.spec.corollary;
  CenterReport scan = center_scan(inst, {bound, threads, {}});
  rep.trivial_center = scan.only_constants();
  rep.central_generators = scan.generators();

  Environment env = inst.environment();
  const std::string& cor = rep.corollary;
  auto starts = [&](const std::string& p) { return cor.rfind(p, 0) == 0; };
  if (cor == "unconditional") {
    rep.hypothesis = true;
  } else if (starts("not-root-of-unity:")) {
    rep.hypothesis = true;
    for (const auto& expr : split(cor.substr(cor.find(':') + 1), ';')) {
      ParamScalar x = parse_scalar(expr, env);
      if (depends_on_generic(x, inst)) {
        rep.assumptions.push_back(expr + " is not a root of unity (generic parameters)");
      } else if (is_low_degree_root_of_unity(x)) {
        rep.hypothesis = false;
        rep.assumptions.push_back(expr + " = " + x.to_string() + " is a root of unity");
      }
    }
  } else if (starts("not-in:")) {
    auto parts = split(cor.substr(cor.find(':') + 1), ':');
    ParamScalar x = parse_scalar(parts.at(0), env);
    if (depends_on_generic(x, inst)) {
      rep.hypothesis = true;
      rep.assumptions.push_back(parts[0] + " generic, outside {" + parts.at(1) + "}");
    } else {
      rep.hypothesis = true;
      for (const auto& v : split(parts.at(1), ','))
        if (x == parse_scalar(v, env)) rep.hypothesis = false;
    }
  } else if (starts("not-positive-rational:")) {
    std::string expr = trim(cor.substr(cor.find(':') + 1));
    ParamScalar x = parse_scalar(expr, env);
    if (depends_on_generic(x, inst)) {
      rep.hypothesis = true;
      rep.assumptions.push_back(expr + " generic, not a positive rational");
    } else {
      rep.hypothesis = !(x.is_rational() && x.rational_value() > 0);
    }
  }
  for (const auto& a : generic_assumptions(inst)) rep.assumptions.push_back(a);

  if (rep.trivial_center && rep.hypothesis.value_or(false)) rep.verdict = "universally cancellative";
  return rep;
}

bool OracleReport::passed() const {
  if (samples.empty()) return true;
  bool equal = false;
  for (const auto& s : samples) {
    if (s.dimension < symbolic) return false;
    equal = equal || s.dimension == symbolic;
  }
  return equal;
}

OracleReport specialization_oracle(const FamilyInstance& inst, Bidegree bd,
                                   std::size_t symbolic_dimension, std::mt19937_64& rng,
                                   unsigned samples) {
  OracleReport rep;
  rep.bidegree = bd;
  rep.symbolic = symbolic_dimension;
  std::vector<Param> generic;
  for (Param v : inst.free_parameters())
    if (!inst.context || !inst.context->constrains(v)) generic.push_back(v);
  if (generic.empty()) return rep;
  std::uniform_int_distribution<int> num(-12, 12), den(1, 5);
  for (unsigned s = 0; s < samples; ++s) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      Specialization sp = inst.specialization;
      std::string label;
      for (Param v : generic) {
        std::string val = std::to_string(num(rng)) + "/" + std::to_string(den(rng));
        sp.values[v] = val;
        label += (label.empty() ? "" : ", ") + std::string(param_name(v)) + "=" + val;
      }
      try {
        FamilyInstance sample = instantiate(inst.spec, sp);
        rep.samples.push_back({label, center_bidegree(sample, bd).dimension()});
        break;
      } catch (const UsageError&) {
      } catch (const std::domain_error&) {
      }
    }
  }
  return rep;
}

// Serialization.

Json to_json(const CentralityReport& r) {
  Json j;
  j["element"] = r.element.to_string();
  j["central"] = r.central;
  Json cs = Json::array();
  for (const auto& [g, c] : r.commutators)
    cs.push_back({{"generator", std::string(letter_name(g))}, {"commutator", c.to_string()}});
  j["nonzero_commutators"] = cs;
  return j;
}

Json to_json(const BidegreeSolve& s) {
  Json j;
  j["bidegree"] = {s.bidegree.x, s.bidegree.y};
  j["unknowns"] = s.unknowns;
  j["equations"] = s.equations;
  j["rank"] = s.rank;
  j["dimension"] = s.dimension();
  Json b = Json::array();
  for (const auto& e : s.basis) b.push_back(e.to_string());
  j["basis"] = b;
  j["from_products"] = s.from_products;
  Json g = Json::array();
  for (const auto& e : s.new_generators) g.push_back(e.to_string());
  j["new_generators"] = g;
  return j;
}

Json to_json(const NormalityWitness& w) {
  Json j;
  j["element"] = w.element.to_string();
  Json l;
  for (Letter g : kLetters) l[std::string(letter_name(g))] = w.lambda[static_cast<int>(g)].to_string();
  j["lambda"] = l;
  return j;
}

Json to_json(const CenterReport& r) {
  Json j;
  j["family"] = r.family;
  j["parameters"] = r.parameters;
  j["assumptions"] = r.assumptions;
  j["bound"] = {r.bound.x, r.bound.y};
  Json ds = Json::array();
  for (const auto& d : r.degrees) ds.push_back(to_json(d));
  j["degrees"] = ds;
  Json gs = Json::array();
  for (const auto& e : r.generators()) gs.push_back(e.to_string());
  j["generators"] = gs;
  j["only_constants"] = r.only_constants();
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(to_json(w));
  j["normality_witnesses"] = ws;
  j["cancellation"] = r.cancellation ? Json(*r.cancellation) : Json(nullptr);
  return j;
}

Json to_json(const PowerCentralReport& r) {
  Json j;
  j["element"] = r.element.to_string();
  j["n"] = r.n;
  j["direct"] = to_json(r.direct);
  if (r.witness) {
    j["witness"] = to_json(*r.witness);
    Json l;
    for (Letter g : kLetters)
      l[std::string(letter_name(g))] = r.lambda_power[static_cast<int>(g)].to_string();
    j["lambda_power"] = l;
    j["lambda_route_central"] = r.lambda_central;
  } else {
    j["witness"] = nullptr;
    j["lambda_power"] = nullptr;
    j["lambda_route_central"] = nullptr;
  }
  j["central"] = r.central();
  j["routes_agree"] = r.agree();
  return j;
}

Json to_json(const TableEntryReport& r) {
  Json j;
  j["family"] = r.family;
  j["claim"] = r.claim;
  j["kind"] = r.kind == ClaimSpec::Kind::kCenter ? "center" : "subalgebra";
  j["parameters"] = r.parameters;
  j["assumptions"] = r.assumptions;
  j["consistent"] = !r.consistency.has_value();
  Json gs = Json::array();
  for (const auto& g : r.generators) {
    Json x = to_json(g.centrality);
    x["text"] = g.text;
    gs.push_back(x);
  }
  j["generators"] = gs;
  Json rs = Json::array();
  for (const auto& rel : r.relations)
    rs.push_back({{"text", rel.text}, {"normal_form", rel.normal_form.to_string()}, {"holds", rel.holds()}});
  j["relations"] = rs;
  if (r.kind == ClaimSpec::Kind::kCenter) {
    j["bound"] = {r.bound.x, r.bound.y};
    Json ds = Json::array();
    for (const auto& d : r.degrees) {
      Json x;
      x["bidegree"] = {d.bidegree.x, d.bidegree.y};
      x["kernel"] = d.kernel;
      x["claimed"] = d.claimed;
      Json ex = Json::array();
      for (const auto& e : d.extra) ex.push_back(e.to_string());
      x["extra"] = ex;
      ds.push_back(x);
    }
    j["degrees"] = ds;
  }
  j["falsifications"] = r.falsifications;
  j["confirmed"] = r.confirmed();
  j["verdict"] = r.verdict();
  return j;
}

Json to_json(const CancellationReport& r) {
  Json j;
  j["family"] = r.family;
  j["parameters"] = r.parameters;
  j["bound"] = {r.bound.x, r.bound.y};
  j["trivial_center"] = r.trivial_center;
  Json gs = Json::array();
  for (const auto& e : r.central_generators) gs.push_back(e.to_string());
  j["central_generators"] = gs;
  j["corollary"] = r.corollary;
  j["hypothesis"] = r.hypothesis ? Json(*r.hypothesis) : Json(nullptr);
  j["assumptions"] = r.assumptions;
  j["verdict"] = r.verdict ? Json(*r.verdict) : Json(nullptr);
  return j;
}

std::string to_text(const CentralityReport& r) {
  std::ostringstream os;
  os << "element: " << r.element.to_string() << "\n";
  os << "central: " << (r.central ? "yes" : "no") << "\n";
  for (const auto& [g, c] : r.commutators) os << "  " << commutator_text(r.element, g) << " = " << c.to_string() << "\n";
  return os.str();
}

std::string to_text(const NormalityWitness& w) {
  std::ostringstream os;
  os << "normal element: " << w.element.to_string() << "\n";
  for (Letter g : kLetters)
    os << "  lambda_" << letter_name(g) << " = " << w.lambda[static_cast<int>(g)].to_string() << "\n";
  return os.str();
}

std::string to_text(const CenterReport& r) {
  std::ostringstream os;
  os << "family: " << r.family << "\n";
  os << "parameters: " << r.parameters << "\n";
  for (const auto& a : r.assumptions) os << "assumption: " << a << "\n";
  os << "bound: " << r.bound.to_string() << "\n";
  for (const auto& d : r.degrees) {
    os << d.bidegree.to_string() << " dim " << d.dimension() << " (unknowns " << d.unknowns
       << ", equations " << d.equations << ", rank " << d.rank << ", from products "
       << d.from_products << ")\n";
    for (const auto& e : d.basis) os << "  basis: " << e.to_string() << "\n";
    for (const auto& e : d.new_generators) os << "  new generator: " << e.to_string() << "\n";
  }
  if (r.only_constants()) os << "center: constants only up to " << r.bound.to_string() << "\n";
  for (const auto& w : r.witnesses) os << to_text(w);
  if (r.cancellation) os << "cancellation: " << *r.cancellation << "\n";
  return os.str();
}

std::string to_text(const PowerCentralReport& r) {
  std::ostringstream os;
  os << "element: " << r.element.to_string() << "\n";
  os << "n: " << r.n << "\n";
  os << "direct route: w^n " << (r.direct.central ? "central" : "not central") << "\n";
  for (const auto& [g, c] : r.direct.commutators)
    os << "  [w^n, " << letter_name(g) << "] = " << c.to_string() << "\n";
  if (r.witness) {
    os << "lambda route: w^n " << (r.lambda_central ? "central" : "not central") << "\n";
    for (Letter g : kLetters)
      os << "  lambda_" << letter_name(g) << "^n = " << r.lambda_power[static_cast<int>(g)].to_string() << "\n";
  } else {
    os << "lambda route: no normality witness\n";
  }
  os << "routes agree: " << (r.agree() ? "yes" : "no") << "\n";
  return os.str();
}

std::string to_text(const TableEntryReport& r) {
  std::ostringstream os;
  os << "claim " << r.claim << " ("
     << (r.kind == ClaimSpec::Kind::kCenter ? "center" : "central subalgebra") << ")\n";
  os << "parameters: " << r.parameters << "\n";
  for (const auto& a : r.assumptions) os << "assumption: " << a << "\n";
  for (const auto& g : r.generators)
    os << "  generator " << g.text << ": " << (g.centrality.central ? "central" : "NOT central") << "\n";
  for (const auto& rel : r.relations)
    os << "  relation " << rel.text << ": " << (rel.holds() ? "holds" : "fails, NF = " + rel.normal_form.to_string()) << "\n";
  for (const auto& d : r.degrees)
    if (!d.ok() || d.kernel > 0)
      os << "  " << d.bidegree.to_string() << " center dim " << d.kernel << ", claimed " << d.claimed
         << (d.ok() ? "" : "  MISMATCH") << "\n";
  for (const auto& f : r.falsifications) os << "  falsified: " << f << "\n";
  os << "verdict: " << r.verdict() << "\n";
  return os.str();
}

std::string to_text(const CancellationReport& r) {
  std::ostringstream os;
  os << "family: " << r.family << "\n";
  os << "parameters: " << r.parameters << "\n";
  os << "scan bound: " << r.bound.to_string() << "\n";
  os << "center trivial up to bound: " << (r.trivial_center ? "yes" : "no") << "\n";
  for (const auto& e : r.central_generators) os << "  central generator: " << e.to_string() << "\n";
  os << "corollary: " << r.corollary << "\n";
  for (const auto& a : r.assumptions) os << "assumption: " << a << "\n";
  if (r.verdict)
    os << "verdict: " << *r.verdict << " (center trivial up to " << r.bound.to_string()
       << "; Z(A) = k under the family's hypothesis)\n";
  else
    os << "verdict: none\n";
  return os.str();
}

}  // namespace doext
