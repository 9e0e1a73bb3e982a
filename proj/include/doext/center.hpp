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

#ifndef DOEXT_CENTER_HPP_
#define DOEXT_CENTER_HPP_

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doext/algebra.hpp"
#include "doext/linalg.hpp"
#include "doext/registry.hpp"
#include "doext/rewrite.hpp"
#include "json.hpp"

namespace doext {

using Json = nlohmann::ordered_json;

class ClaimFalsified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "f treated as transcendental" for each unconstrained free parameter.
std::vector<std::string> generic_assumptions(const FamilyInstance& inst);

struct CentralityReport {
  AlgebraElement element;  // normal form of the input
  bool central = true;
  // [e, g] for each generator g with a nonzero commutator.
  std::vector<std::pair<Letter, AlgebraElement>> commutators;
};

CentralityReport is_central(const AlgebraElement& e, Reducer& red);
CentralityReport is_central(const AlgebraElement& e, const RewriteSystem& sys);

// Rows indexed by (generator, normal monomial), columns by the PBW monomials
// of the bidegree in enumerate_pbw order.
struct CentralityLinearSystem {
  Bidegree bidegree;
  std::vector<PBWMonomial> unknowns;
  std::vector<std::pair<Letter, Word>> row_labels;
  ScalarMatrix matrix;
};

CentralityLinearSystem centrality_system(Reducer& red, Bidegree bd);

struct BidegreeSolve {
  Bidegree bidegree;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::vector<AlgebraElement> basis;
  // Filled by center_scan.
  std::size_t from_products = 0;  // rank of products of lower central elements
  std::vector<AlgebraElement> new_generators;
  std::size_t dimension() const { return basis.size(); }
};

BidegreeSolve center_bidegree(Reducer& red, Bidegree bd);
BidegreeSolve center_bidegree(const FamilyInstance& inst, Bidegree bd);

struct NormalityWitness {
  AlgebraElement element;
  std::array<ParamScalar, 4> lambda;  // indexed by Letter
};

std::optional<NormalityWitness> check_normality(const AlgebraElement& w, Reducer& red);

struct ScanOptions {
  Bidegree bound{4, 4};
  unsigned threads = 1;
  std::vector<AlgebraElement> normal_candidates;  // checked with check_normality
};

struct CenterReport {
  std::string family;
  std::string parameters;
  std::vector<std::string> assumptions;
  Bidegree bound;
  std::vector<BidegreeSolve> degrees;  // all (i, j) <= bound, x-degree major
  std::vector<NormalityWitness> witnesses;
  std::optional<std::string> cancellation;

  const BidegreeSolve* at(Bidegree bd) const;
  bool only_constants() const;
  std::vector<AlgebraElement> generators() const;  // all new_generators in order
};

CenterReport center_scan(const FamilyInstance& inst, const ScanOptions& opt = {});

// Greedy: the elements of candidates (homogeneous of bidegree bd) that are not
// in the span of base and of the earlier picks.
std::vector<AlgebraElement> extend_span(const std::vector<AlgebraElement>& base,
                                        const std::vector<AlgebraElement>& candidates,
                                        Bidegree bd, std::size_t* base_rank = nullptr);

struct PowerCentralReport {
  AlgebraElement element;
  unsigned n = 1;
  CentralityReport direct;            // is_central(w^n)
  std::optional<NormalityWitness> witness;
  std::array<ParamScalar, 4> lambda_power;  // lambda_g^n when a witness exists
  bool lambda_central = false;        // all lambda_g^n == 1
  bool agree() const { return !witness || direct.central == lambda_central; }
  bool central() const { return direct.central; }
};

PowerCentralReport verify_power_central(const AlgebraElement& w, unsigned n, Reducer& red);

struct TableOptions {
  Bidegree bound{4, 4};
  unsigned threads = 1;
};

struct TableEntryReport {
  std::string family;
  std::string claim;
  ClaimSpec::Kind kind = ClaimSpec::Kind::kCenter;
  std::string parameters;
  std::vector<std::string> assumptions;
  Bidegree bound;
  std::optional<ConsistencyReport> consistency;  // set when it fails
  struct GeneratorCheck {
    std::string text;
    CentralityReport centrality;
  };
  std::vector<GeneratorCheck> generators;
  struct RelationCheck {
    std::string text;
    AlgebraElement normal_form;
    bool holds() const { return normal_form.is_zero(); }
  };
  std::vector<RelationCheck> relations;
  struct DegreeCheck {
    Bidegree bidegree;
    std::size_t kernel = 0;
    std::size_t claimed = 0;
    std::vector<AlgebraElement> extra;  // central, outside the claimed span
    bool ok() const { return kernel == claimed && extra.empty(); }
  };
  std::vector<DegreeCheck> degrees;
  std::vector<std::string> falsifications;

  bool confirmed() const { return falsifications.empty(); }
  std::string verdict() const;
};

// Instantiates fs with the claim's parameters and constraints merged into
// base. Falsification details are collected in the report.
TableEntryReport verify_table_entry(const FamilySpec& fs, const ClaimSpec& claim,
                                    const Specialization& base = {},
                                    const TableOptions& opt = {});
// Throws ClaimFalsified naming the first offending item.
void require_confirmed(const TableEntryReport& rep);

struct CancellationReport {
  std::string family;
  std::string parameters;
  Bidegree bound;
  bool trivial_center = false;
  std::vector<AlgebraElement> central_generators;
  std::string corollary;
  std::optional<bool> hypothesis;  // nullopt: family not covered
  std::vector<std::string> assumptions;
  std::optional<std::string> verdict;
};

CancellationReport cancellation_report(const FamilyInstance& inst, Bidegree bound = {3, 3},
                                       unsigned threads = 1);

// x^n == 1 for some n in {1, 2, 3, 4, 6}; these are the only orders of roots
// of unity in Q and its quadratic extensions.
bool is_low_degree_root_of_unity(const ParamScalar& x);

struct OracleSample {
  std::string assignment;
  std::size_t dimension = 0;
};

struct OracleReport {
  Bidegree bidegree;
  std::size_t symbolic = 0;
  std::vector<OracleSample> samples;
  bool passed() const;
};

// Kernel dimension at random rational values of the free parameters of inst.
OracleReport specialization_oracle(const FamilyInstance& inst, Bidegree bd,
                                   std::size_t symbolic_dimension, std::mt19937_64& rng,
                                   unsigned samples = 3);

Json to_json(const CentralityReport& r);
Json to_json(const BidegreeSolve& s);
Json to_json(const NormalityWitness& w);
Json to_json(const CenterReport& r);
Json to_json(const PowerCentralReport& r);
Json to_json(const TableEntryReport& r);
Json to_json(const CancellationReport& r);

std::string to_text(const CentralityReport& r);
std::string to_text(const NormalityWitness& w);
std::string to_text(const CenterReport& r);
std::string to_text(const PowerCentralReport& r);
std::string to_text(const TableEntryReport& r);
std::string to_text(const CancellationReport& r);

}  // namespace doext

#endif  // DOEXT_CENTER_HPP_
