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

#ifndef DOEXT_EXPR_HPP_
#define DOEXT_EXPR_HPP_

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "doext/algebra.hpp"

namespace doext {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& found);
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

// Raised when a well-formed expression cannot be lowered (e.g. division by
// an expression containing generators).
class LoweringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind { kNumber, kParam, kGenerator, kNeg, kAdd, kSub, kMul, kDiv, kPow, kGroup };
  Kind kind;
  mpz_class number;  // kNumber
  Param param{};     // kParam
  Letter letter{};   // kGenerator
  unsigned exponent = 0;  // kPow
  ExprPtr lhs, rhs;  // operands (kNeg/kGroup/kPow use lhs)
  std::size_t position = 0;
};

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | NAME | '(' expr ')'
// NAME is a generator (x1 x2 y1 y2) or a registry parameter.
ExprPtr parse_expression(std::string_view input);

std::string dump(const Expr& e);  // fully parenthesized, for tests

struct Environment {
  ParamScalar::Context context;
  Assignment values;  // bound parameters
};

AlgebraElement lower(const Expr& e, const Environment& env);
ParamScalar lower_scalar(const Expr& e, const Environment& env);

AlgebraElement parse_element(std::string_view input, const Environment& env = {});
ParamScalar parse_scalar(std::string_view input, const Environment& env = {});
// Polynomial over Q in the parameters, with no constraints applied.
Polynomial parse_polynomial(std::string_view input);

}  // namespace doext

#endif  // DOEXT_EXPR_HPP_
