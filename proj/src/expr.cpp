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

#include "doext/expr.hpp"

#include <cctype>

namespace doext {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i];
  }
  return out;
}

enum class Tok { kInt, kName, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd, kBad };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ == s_.size()) return {Tok::kEnd, "end of input", start};
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {Tok::kInt, std::string(s_.substr(start, pos_ - start)), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return {Tok::kName, std::string(s_.substr(start, pos_ - start)), start};
    }
    ++pos_;
    switch (c) {
      case '+': return {Tok::kPlus, "+", start};
      case '-': return {Tok::kMinus, "-", start};
      case '*': return {Tok::kStar, "*", start};
      case '/': return {Tok::kSlash, "/", start};
      case '^': return {Tok::kCaret, "^", start};
      case '(': return {Tok::kLParen, "(", start};
      case ')': return {Tok::kRParen, ")", start};
      default: return {Tok::kBad, std::string(1, c), start};
    }
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { advance(); }

  ExprPtr parse() {
    ExprPtr e = expr();
    if (cur_.kind != Tok::kEnd) fail({"operator", "end of input"});
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw ParseError(cur_.pos, std::move(expected),
                     cur_.kind == Tok::kEnd ? cur_.text : "'" + cur_.text + "'");
  }

  static ExprPtr node(Expr::Kind k, std::size_t pos, ExprPtr l = nullptr, ExprPtr r = nullptr) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->position = pos;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  ExprPtr expr() {
    ExprPtr l = term();
    while (cur_.kind == Tok::kPlus || cur_.kind == Tok::kMinus) {
      auto k = cur_.kind == Tok::kPlus ? Expr::Kind::kAdd : Expr::Kind::kSub;
      std::size_t pos = cur_.pos;
      advance();
      l = node(k, pos, std::move(l), term());
    }
    return l;
  }

  ExprPtr term() {
    ExprPtr l = unary();
    while (cur_.kind == Tok::kStar || cur_.kind == Tok::kSlash) {
      auto k = cur_.kind == Tok::kStar ? Expr::Kind::kMul : Expr::Kind::kDiv;
      std::size_t pos = cur_.pos;
      advance();
      l = node(k, pos, std::move(l), unary());
    }
    return l;
  }

  ExprPtr unary() {
    if (cur_.kind == Tok::kMinus) {
      std::size_t pos = cur_.pos;
      advance();
      return node(Expr::Kind::kNeg, pos, unary());
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (cur_.kind != Tok::kCaret) return base;
    std::size_t pos = cur_.pos;
    advance();
    if (cur_.kind != Tok::kInt) fail({"nonnegative integer exponent"});
    if (cur_.text.size() > 6) fail({"exponent below 1000000"});
    ExprPtr e = node(Expr::Kind::kPow, pos, std::move(base));
    e->exponent = static_cast<unsigned>(std::stoul(cur_.text));
    advance();
    return e;
  }

  ExprPtr primary() {
    std::size_t pos = cur_.pos;
    switch (cur_.kind) {
      case Tok::kInt: {
        ExprPtr e = node(Expr::Kind::kNumber, pos);
        e->number = mpz_class(cur_.text);
        advance();
        return e;
      }
      case Tok::kName: {
        ExprPtr e;
        if (auto a = letter_from_name(cur_.text)) {
          e = node(Expr::Kind::kGenerator, pos);
          e->letter = *a;
        } else if (auto v = param_from_name(cur_.text)) {
          e = node(Expr::Kind::kParam, pos);
          e->param = *v;
        } else {
          fail({"generator (x1, x2, y1, y2)", "parameter (q12, q11, p12, p11, f, g, p, q)"});
        }
        advance();
        return e;
      }
      case Tok::kLParen: {
        advance();
        ExprPtr inner = expr();
        if (cur_.kind != Tok::kRParen) fail({"')'", "operator"});
        advance();
        return node(Expr::Kind::kGroup, pos, std::move(inner));
      }
      default:
        fail({"integer", "name", "'('", "'-'"});
    }
  }

  Lexer lex_;
  Token cur_{Tok::kEnd, "", 0};
};

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& found)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": found " +
                         found + ", expected one of: " + join(expected)),
      position_(position),
      expected_(std::move(expected)) {}

ExprPtr parse_expression(std::string_view input) { return Parser(input).parse(); }

std::string dump(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kNumber: return e.number.get_str();
    case Expr::Kind::kParam: return std::string(param_name(e.param));
    case Expr::Kind::kGenerator: return std::string(letter_name(e.letter));
    case Expr::Kind::kNeg: return "(neg " + dump(*e.lhs) + ")";
    case Expr::Kind::kAdd: return "(+ " + dump(*e.lhs) + " " + dump(*e.rhs) + ")";
    case Expr::Kind::kSub: return "(- " + dump(*e.lhs) + " " + dump(*e.rhs) + ")";
    case Expr::Kind::kMul: return "(* " + dump(*e.lhs) + " " + dump(*e.rhs) + ")";
    case Expr::Kind::kDiv: return "(/ " + dump(*e.lhs) + " " + dump(*e.rhs) + ")";
    case Expr::Kind::kPow: return "(^ " + dump(*e.lhs) + " " + std::to_string(e.exponent) + ")";
    case Expr::Kind::kGroup: return dump(*e.lhs);
  }
  return "?";
}

AlgebraElement lower(const Expr& e, const Environment& env) {
  switch (e.kind) {
    case Expr::Kind::kNumber:
      return AlgebraElement(ParamScalar(mpq_class(e.number), env.context));
    case Expr::Kind::kParam: {
      auto it = env.values.find(e.param);
      if (it != env.values.end()) return AlgebraElement(it->second.with_context(env.context));
      return AlgebraElement(ParamScalar::parameter(e.param, env.context));
    }
    case Expr::Kind::kGenerator: return AlgebraElement::generator(e.letter);
    case Expr::Kind::kNeg: return -lower(*e.lhs, env);
    case Expr::Kind::kGroup: return lower(*e.lhs, env);
    case Expr::Kind::kAdd: return lower(*e.lhs, env) + lower(*e.rhs, env);
    case Expr::Kind::kSub: return lower(*e.lhs, env) - lower(*e.rhs, env);
    case Expr::Kind::kMul: return lower(*e.lhs, env) * lower(*e.rhs, env);
    case Expr::Kind::kDiv: {
      AlgebraElement d = lower(*e.rhs, env);
      if (!d.is_scalar())
        throw LoweringError("divisor at position " + std::to_string(e.rhs->position) +
                            " contains generators");
      if (d.is_zero()) throw DivisionByZero("division by zero in expression");
      return lower(*e.lhs, env) * d.scalar_value().inverse();
    }
    case Expr::Kind::kPow: return lower(*e.lhs, env).pow(e.exponent);
  }
  throw LoweringError("unknown expression node");
}

ParamScalar lower_scalar(const Expr& e, const Environment& env) {
  AlgebraElement a = lower(e, env);
  if (!a.is_scalar()) throw LoweringError("expected a scalar expression, found " + a.to_string());
  return a.is_zero() ? ParamScalar(0, env.context) : a.scalar_value();
}

AlgebraElement parse_element(std::string_view input, const Environment& env) {
  return lower(*parse_expression(input), env);
}

ParamScalar parse_scalar(std::string_view input, const Environment& env) {
  return lower_scalar(*parse_expression(input), env);
}

Polynomial parse_polynomial(std::string_view input) {
  ParamScalar s = parse_scalar(input);
  if (!s.denominator().is_constant())
    throw LoweringError("expected a polynomial, found " + s.to_string());
  return s.numerator() * (1 / s.denominator().constant_value());
}

}  // namespace doext
