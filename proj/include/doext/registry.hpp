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

#ifndef DOEXT_REGISTRY_HPP_
#define DOEXT_REGISTRY_HPP_

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "doext/algebra.hpp"
#include "doext/expr.hpp"
#include "doext/rewrite.hpp"

namespace doext {

class MalformedRegistry : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: unknown family, unbound choice, excluded parameter value.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChoiceSpec {
  Param param;
  std::vector<std::string> values;
};

struct ClaimSpec {
  enum class Kind { kCenter, kSubalgebra };
  std::string id;
  Kind kind = Kind::kCenter;
  std::vector<std::pair<Param, std::string>> params;
  std::vector<std::string> constraints;
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  std::string hypothesis;
  std::string note;
};

struct FamilySpec {
  std::string label;
  std::string variant;  // empty for the primary record
  std::array<std::string, 2> q;  // q12, q11
  std::array<std::string, 2> p;  // p12, p11
  // sigma[r][c]: row r = (i,s) in order y1x1, y1x2, y2x1, y2x2; column
  // c = (j,t) in order x1y1, x2y1, x1y2, x2y2. Entry is a_{ijst}.
  std::array<std::array<std::string, 4>, 4> sigma;
  std::vector<std::string> relations;
  std::vector<std::string> constraints;
  std::vector<ChoiceSpec> choices;
  std::vector<std::string> nonzero;
  std::string conditions;
  std::string corollary;  // "no", "unconditional" or "hypothesis: ..."
  std::string note;
  std::vector<ClaimSpec> claims;
  std::size_t line = 0;

  std::string name() const;  // "Z" or "Z[misprint]"
  std::vector<Param> parameters() const;
  const ClaimSpec* find_claim(const std::string& id) const;
};

struct Registry {
  std::string source;
  std::vector<FamilySpec> families;
  // Throws UsageError when absent.
  const FamilySpec& find(const std::string& label, const std::string& variant = "") const;
  std::vector<const FamilySpec*> primary() const;
};

Registry load_families(std::istream& in, const std::string& source = "<stream>");
Registry load_registry_file(const std::string& path);
// $DOEXT_REGISTRY if set, else the path configured at build time.
std::string default_registry_path();

struct Specialization {
  std::map<Param, std::string> values;  // expressions in the scalar grammar
  std::vector<std::string> extra_constraints;
  bool drop_constraints = false;  // ignore the family's constraint lines
  bool require_choices = true;
};

struct FamilyInstance {
  FamilySpec spec;
  Specialization specialization;
  ParamScalar::Context context;
  Assignment values;
  ParamScalar q12, q11, p12, p11;
  std::array<std::array<ParamScalar, 4>, 4> sigma;
  RewriteSystem system;

  // a_{ijst}, indices in {1, 2}.
  const ParamScalar& a(int i, int j, int s, int t) const {
    return sigma[(i - 1) * 2 + (s - 1)][(j - 1) * 2 + (t - 1)];
  }
  std::vector<Param> free_parameters() const;
  Environment environment() const { return {context, values}; }
  // "p = 1; f generic" style summary.
  std::string parameter_summary() const;
};

FamilyInstance instantiate(const FamilySpec& spec, const Specialization& sp = {});

RewriteSystem build_rewrite_system(const FamilyInstance& inst);

// Relation strings in TeX notation, e.g. "y_1x_2=x_2y_1+x_1y_2".
std::vector<std::string> render_relations(const FamilySpec& spec);
// Drops whitespace and TeX grouping braces.
std::string normalize_relation_text(const std::string& s);

struct ConsistencyReport {
  struct Check {
    std::string identity;
    std::string point;
    bool passed = true;
    std::string residual;
  };
  std::vector<Check> checks;
  ParamScalar determinant;
  bool determinant_nonzero = false;
  bool passed() const;
  std::vector<const Check*> failures() const;
};

class ConsistencyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ConsistencyReport check_consistency(const FamilyInstance& inst);
void require_consistent(const FamilyInstance& inst);  // throws ConsistencyFailure

ParamScalar determinant(std::vector<std::vector<ParamScalar>> m);

}  // namespace doext

#endif  // DOEXT_REGISTRY_HPP_
