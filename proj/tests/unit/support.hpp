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

#ifndef DOEXT_TESTS_SUPPORT_HPP_
#define DOEXT_TESTS_SUPPORT_HPP_

#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "doext/expr.hpp"
#include "doext/registry.hpp"

namespace doext {

// Readable doctest failure messages.
inline std::ostream& operator<<(std::ostream& os, const ParamScalar& s) { return os << s.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const AlgebraElement& e) { return os << e.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Bidegree& b) { return os << b.to_string(); }

}  // namespace doext

namespace doext::testing {

inline const Registry& registry() {
  static const Registry reg = load_registry_file(DOEXT_TEST_REGISTRY);
  return reg;
}

inline FamilyInstance family(const std::string& label,
                             const std::map<Param, std::string>& values = {},
                             const std::string& variant = "") {
  Specialization sp;
  sp.values = values;
  return instantiate(registry().find(label, variant), sp);
}

// Every primary family with its choices bound to the first listed value.
inline std::vector<FamilyInstance> all_families() {
  std::vector<FamilyInstance> out;
  for (const FamilySpec* fs : registry().primary()) {
    Specialization sp;
    for (const auto& ch : fs->choices) sp.values[ch.param] = ch.values.front();
    out.push_back(instantiate(*fs, sp));
  }
  return out;
}

inline AlgebraElement el(const std::string& text, const FamilyInstance& inst) {
  return parse_element(text, inst.environment());
}

inline AlgebraElement el(const std::string& text) { return parse_element(text); }

// Random element of the free algebra: words of length <= max_degree with
// small integer coefficients, optionally times a free parameter.
inline AlgebraElement random_element(std::mt19937_64& rng, const FamilyInstance& inst,
                                     unsigned max_degree = 6, unsigned terms = 4) {
  std::uniform_int_distribution<int> len(0, static_cast<int>(max_degree));
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto params = inst.free_parameters();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(params.size()));
  AlgebraElement out;
  for (unsigned t = 0; t < terms; ++t) {
    std::string w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(static_cast<char>(letter(rng)));
    int c = coeff(rng);
    if (c == 0) c = 1;
    ParamScalar s(mpq_class(c), inst.context);
    int k = pick(rng);
    if (k < static_cast<int>(params.size())) s *= ParamScalar::parameter(params[k], inst.context);
    out += AlgebraElement::term(Word(w), s);
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string golden_path(const std::string& name) {
  return std::string(DOEXT_TEST_GOLDEN_DIR) + "/" + name;
}

// Compares text with a golden file; DOEXT_UPDATE_GOLDEN=1 rewrites it.
inline bool matches_golden(const std::string& name, const std::string& text) {
  if (const char* u = std::getenv("DOEXT_UPDATE_GOLDEN"); u && std::string(u) == "1") {
    std::ofstream(golden_path(name)) << text;
    return true;
  }
  return read_file(golden_path(name)) == text;
}

}  // namespace doext::testing

#endif  // DOEXT_TESTS_SUPPORT_HPP_
