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

#ifndef DOEXT_FORMULAS_HPP_
#define DOEXT_FORMULAS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "doext/algebra.hpp"
#include "doext/registry.hpp"
#include "doext/rewrite.hpp"
#include "json.hpp"

namespace doext {

// Q = (q12, q11), P = (p12, p11) symbolic, sigma the identity.
RewriteSystem generic_system();

// For b*a -> c12*a*b + c11*a^2 (default a = x1, b = x2):
// b*a^n = c11*[n]_{c12} a^(n+1) + c12^n a^n b.
AlgebraElement closed_form_x2_x1n(unsigned n, const ParamScalar& c12, const ParamScalar& c11,
                                  Letter a = Letter::x1, Letter b = Letter::x2);
// c_{n,k} = c11^k c12^(n-k) [n]!/[n-k]!, computed without division
ParamScalar c_coefficient(unsigned n, unsigned k, const ParamScalar& c12, const ParamScalar& c11);
// b^n*a = sum_k c_{n,k} a^(k+1) b^(n-k)
AlgebraElement closed_form_x2n_x1(unsigned n, const ParamScalar& c12, const ParamScalar& c11,
                                  Letter a = Letter::x1, Letter b = Letter::x2);

struct CRecursionCheck {
  unsigned n = 0;  // checks c_{n+1,k} for 1 <= k <= n
  bool printed = true;    // c_{n+1,k} = c12 c_{n,k} + c11 [n] c_{n,k-1}
  bool corrected = true;  // c_{n+1,k} = c12^(k+1) c_{n,k} + c11 [k] c_{n,k-1}
  bool boundary = true;   // c_{n+1,0} = c12^(n+1), c_{n+1,n+1} = c11^(n+1) [n+1]!
  std::optional<unsigned> first_printed_failure;  // k
};
std::vector<CRecursionCheck> check_c_recursion(unsigned nmax, const ParamScalar& c12,
                                               const ParamScalar& c11);

enum class RecursionForm {
  kPrinted,     // coefficients exactly as printed
  kExpansion,   // y_s x_t^n: collected from the one-step expansion with a_{1jtu}, a_{2jtu}
  kGeneralS,    // y_s^n x_t: the one-step recursion with a_{s...} in place of a_{1...}
  kNormalForm,  // read off the normal form
};
std::string_view recursion_form_name(RecursionForm f);

// alpha[m][k], beta[m][k] for 1 <= m <= n, 0 <= k <= m.
struct AlphaBetaTable {
  int s = 1;
  int t = 1;
  unsigned n = 0;
  RecursionForm form = RecursionForm::kPrinted;
  std::vector<std::vector<ParamScalar>> alpha;
  std::vector<std::vector<ParamScalar>> beta;
};

// y_s x_t^n = sum_k x1^(n-k) x2^k (alpha_{n,k} y1 + beta_{n,k} y2)
AlphaBetaTable table_ys_xtn(const FamilyInstance& inst, int s, int t, unsigned n,
                            RecursionForm form, Reducer* red = nullptr);
AlgebraElement assemble_ys_xtn(const AlphaBetaTable& tab, unsigned n);

// y_s^n x_t = sum_i (alpha_{n,i} x1 + beta_{n,i} x2) y1^(n-i) y2^i
AlphaBetaTable table_ysn_xt(const FamilyInstance& inst, int s, int t, unsigned n,
                            RecursionForm form, Reducer* red = nullptr);
AlgebraElement assemble_ysn_xt(const AlphaBetaTable& tab, unsigned n);

struct Comparison {
  bool match = true;
  std::string divergence;  // first differing coefficient, empty on match
};
Comparison compare_elements(const AlgebraElement& formula, const AlgebraElement& nf);

struct MatrixRow {
  std::string family;
  std::string identity;  // e.g. "y_s*x_t^n"
  std::string form;      // "closed", "printed", ...
  unsigned n = 0;
  int s = 0;
  int t = 0;
  Comparison result;
};

struct FormulaOptions {
  unsigned closed_nmax = 8;     // x2*x1^n, x2^n*x1 and the y-analogue
  unsigned recursion_nmax = 5;  // y_s*x_t^n and y_s^n*x_t
  unsigned c_recursion_nmax = 6;
  std::vector<std::string> families;  // empty: all primary records
};

struct VerificationMatrix {
  std::vector<MatrixRow> rows;
  // True when every row with this identity and form matches.
  bool all_match(const std::string& identity, const std::string& form) const;
  std::size_t count(const std::string& identity, const std::string& form) const;
};

// Every family instance: one per combination of choice values.
std::vector<FamilyInstance> formula_instances(const Registry& reg,
                                              const std::vector<std::string>& labels = {});

VerificationMatrix verify_formulas(const Registry& reg, const FormulaOptions& opt = {});

nlohmann::ordered_json to_json(const VerificationMatrix& m);
std::string to_text(const VerificationMatrix& m, bool only_divergent = false);

}  // namespace doext

#endif  // DOEXT_FORMULAS_HPP_
