// Copyright 2026 The ql1sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ql1sim/coeff_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <vector>

namespace ql1sim {

CoeffExpr::Ptr CoeffExpr::number(double value) {
  auto node = std::shared_ptr<CoeffExpr>(new CoeffExpr());
  node->kind_ = ExprKind::Number;
  node->value_ = (value == 0.0) ? 0.0 : value;  // normalize -0 so printing round-trips
  return node;
}

CoeffExpr::Ptr CoeffExpr::tau() {
  auto node = std::shared_ptr<CoeffExpr>(new CoeffExpr());
  node->kind_ = ExprKind::Tau;
  return node;
}

CoeffExpr::Ptr CoeffExpr::pi() {
  auto node = std::shared_ptr<CoeffExpr>(new CoeffExpr());
  node->kind_ = ExprKind::Pi;
  return node;
}

CoeffExpr::Ptr CoeffExpr::unary(UnaryOp op, Ptr child) {
  auto node = std::shared_ptr<CoeffExpr>(new CoeffExpr());
  node->kind_ = ExprKind::Unary;
  node->unary_op_ = op;
  node->lhs_ = std::move(child);
  return node;
}

CoeffExpr::Ptr CoeffExpr::binary(BinaryOp op, Ptr lhs, Ptr rhs) {
  auto node = std::shared_ptr<CoeffExpr>(new CoeffExpr());
  node->kind_ = ExprKind::Binary;
  node->binary_op_ = op;
  node->lhs_ = std::move(lhs);
  node->rhs_ = std::move(rhs);
  return node;
}

double CoeffExpr::eval(double tau) const {
  switch (kind_) {
    case ExprKind::Number:
      return value_;
    case ExprKind::Tau:
      return tau;
    case ExprKind::Pi:
      return std::numbers::pi;
    case ExprKind::Unary: {
      const double c = lhs_->eval(tau);
      switch (unary_op_) {
        case UnaryOp::Neg:
          return -c;
        case UnaryOp::Sin:
          return std::sin(c);
        case UnaryOp::Cos:
          return std::cos(c);
        case UnaryOp::Exp:
          return std::exp(c);
        case UnaryOp::Sqrt:
          return std::sqrt(c);
        case UnaryOp::Abs:
          return std::abs(c);
      }
      break;
    }
    case ExprKind::Binary: {
      const double l = lhs_->eval(tau);
      const double r = rhs_->eval(tau);
      switch (binary_op_) {
        case BinaryOp::Add:
          return l + r;
        case BinaryOp::Sub:
          return l - r;
        case BinaryOp::Mul:
          return l * r;
        case BinaryOp::Div:
          return l / r;
        case BinaryOp::Pow:
          return std::pow(l, r);
      }
      break;
    }
  }
  return 0.0;  // unreachable
}

namespace {

// Precedence levels used both for parsing structure and for printing with
// minimal parentheses: atoms 5, ^ 4, unary- 3, * / 2, + - 1.
int precedence(const CoeffExpr& e) {
  switch (e.kind()) {
    case ExprKind::Number:
    case ExprKind::Tau:
    case ExprKind::Pi:
      return 5;
    case ExprKind::Unary:
      return e.unary_op() == UnaryOp::Neg ? 3 : 5;  // named functions print as atoms
    case ExprKind::Binary:
      switch (e.binary_op()) {
        case BinaryOp::Pow:
          return 4;
        case BinaryOp::Mul:
        case BinaryOp::Div:
          return 2;
        case BinaryOp::Add:
        case BinaryOp::Sub:
          return 1;
      }
  }
  return 5;
}

const char* function_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Sin:
      return "sin";
    case UnaryOp::Cos:
      return "cos";
    case UnaryOp::Exp:
      return "exp";
    case UnaryOp::Sqrt:
      return "sqrt";
    case UnaryOp::Abs:
      return "abs";
    case UnaryOp::Neg:
      break;
  }
  return "";
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void print_expr(const CoeffExpr& e, std::string& out) {
  auto child = [&out](const CoeffExpr& c, bool parens) {
    if (parens) out.push_back('(');
    print_expr(c, out);
    if (parens) out.push_back(')');
  };
  switch (e.kind()) {
    case ExprKind::Number:
      out += format_number(e.value());
      return;
    case ExprKind::Tau:
      out += "tau";
      return;
    case ExprKind::Pi:
      out += "pi";
      return;
    case ExprKind::Unary:
      if (e.unary_op() == UnaryOp::Neg) {
        out.push_back('-');
        child(*e.child(), precedence(*e.child()) < 3);
      } else {
        out += function_name(e.unary_op());
        out.push_back('(');
        print_expr(*e.child(), out);
        out.push_back(')');
      }
      return;
    case ExprKind::Binary: {
      const int prec = precedence(e);
      const char* op = nullptr;
      switch (e.binary_op()) {
        case BinaryOp::Add:
          op = "+";
          break;
        case BinaryOp::Sub:
          op = "-";
          break;
        case BinaryOp::Mul:
          op = "*";
          break;
        case BinaryOp::Div:
          op = "/";
          break;
        case BinaryOp::Pow:
          op = "^";
          break;
      }
      if (e.binary_op() == BinaryOp::Pow) {
        // The grammar restricts a power's base to an atom and its exponent to
        // a unary-level expression.
        child(*e.lhs(), precedence(*e.lhs()) < 5);
        out += op;
        child(*e.rhs(), precedence(*e.rhs()) < 3);
      } else {
        // Left-associative: an equal-precedence right child needs parentheses
        // to reproduce the same tree on re-parse.
        child(*e.lhs(), precedence(*e.lhs()) < prec);
        out += op;
        child(*e.rhs(), precedence(*e.rhs()) <= prec);
      }
      return;
    }
  }
}

enum class TokKind { Number, Tau, Pi, Func, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::size_t offset;
  double number = 0.0;
  UnaryOp func = UnaryOp::Neg;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        tokens.push_back(lex_number(i));
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        tokens.push_back(lex_ident(i));
        continue;
      }
      TokKind k;
      switch (c) {
        case '+':
          k = TokKind::Plus;
          break;
        case '-':
          k = TokKind::Minus;
          break;
        case '*':
          k = TokKind::Star;
          break;
        case '/':
          k = TokKind::Slash;
          break;
        case '^':
          k = TokKind::Caret;
          break;
        case '(':
          k = TokKind::LParen;
          break;
        case ')':
          k = TokKind::RParen;
          break;
        default:
          throw ParseError("unexpected character in expression", i,
                           {"number", "tau", "pi", "function", "operator", "'('", "')'"});
      }
      tokens.push_back({k, i});
      ++i;
    }
    tokens.push_back({TokKind::End, text_.size()});
    return tokens;
  }

 private:
  Token lex_number(std::size_t& i) {
    const std::size_t start = i;
    bool saw_digit = false;
    while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) {
      ++i;
      saw_digit = true;
    }
    if (i < text_.size() && text_[i] == '.') {
      ++i;
      while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) {
        ++i;
        saw_digit = true;
      }
    }
    if (!saw_digit) {
      throw ParseError("malformed number literal", start, {"number"});
    }
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      if (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
        ++j;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        i = j;
      }
    }
    const std::string lit(text_.substr(start, i - start));
    Token t{TokKind::Number, start};
    t.number = std::strtod(lit.c_str(), nullptr);
    return t;
  }

  Token lex_ident(std::size_t& i) {
    const std::size_t start = i;
    while (i < text_.size() && std::isalpha(static_cast<unsigned char>(text_[i]))) ++i;
    const std::string_view name = text_.substr(start, i - start);
    Token t{TokKind::Tau, start};
    if (name == "tau") {
      t.kind = TokKind::Tau;
    } else if (name == "pi") {
      t.kind = TokKind::Pi;
    } else {
      t.kind = TokKind::Func;
      if (name == "sin") {
        t.func = UnaryOp::Sin;
      } else if (name == "cos") {
        t.func = UnaryOp::Cos;
      } else if (name == "exp") {
        t.func = UnaryOp::Exp;
      } else if (name == "sqrt") {
        t.func = UnaryOp::Sqrt;
      } else if (name == "abs") {
        t.func = UnaryOp::Abs;
      } else {
        throw ParseError("unknown identifier in expression", start,
                         {"tau", "pi", "sin", "cos", "exp", "sqrt", "abs"});
      }
    }
    return t;
  }

  std::string_view text_;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  CoeffExpr::Ptr run() {
    CoeffExpr::Ptr e = parse_expr();
    if (peek().kind != TokKind::End) {
      throw ParseError("trailing input after expression", peek().offset, {"operator", "end"});
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool match(TokKind k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }

  CoeffExpr::Ptr parse_expr() {
    CoeffExpr::Ptr lhs = parse_term();
    for (;;) {
      if (match(TokKind::Plus)) {
        lhs = CoeffExpr::binary(BinaryOp::Add, lhs, parse_term());
      } else if (match(TokKind::Minus)) {
        lhs = CoeffExpr::binary(BinaryOp::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  CoeffExpr::Ptr parse_term() {
    CoeffExpr::Ptr lhs = parse_unary();
    for (;;) {
      if (match(TokKind::Star)) {
        lhs = CoeffExpr::binary(BinaryOp::Mul, lhs, parse_unary());
      } else if (match(TokKind::Slash)) {
        lhs = CoeffExpr::binary(BinaryOp::Div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  CoeffExpr::Ptr parse_unary() {
    if (match(TokKind::Minus)) {
      return CoeffExpr::unary(UnaryOp::Neg, parse_unary());
    }
    return parse_power();
  }

  CoeffExpr::Ptr parse_power() {
    CoeffExpr::Ptr base = parse_atom();
    if (match(TokKind::Caret)) {
      // Right-associative; the exponent may itself carry a unary minus.
      return CoeffExpr::binary(BinaryOp::Pow, base, parse_unary());
    }
    return base;
  }

  CoeffExpr::Ptr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Number:
        advance();
        return CoeffExpr::number(t.number);
      case TokKind::Tau:
        advance();
        return CoeffExpr::tau();
      case TokKind::Pi:
        advance();
        return CoeffExpr::pi();
      case TokKind::Func: {
        advance();
        expect(TokKind::LParen, "'('");
        CoeffExpr::Ptr arg = parse_expr();
        expect(TokKind::RParen, "')'");
        return CoeffExpr::unary(t.func, arg);
      }
      case TokKind::LParen: {
        advance();
        CoeffExpr::Ptr e = parse_expr();
        expect(TokKind::RParen, "')'");
        return e;
      }
      default:
        throw ParseError("expected an operand", t.offset,
                         {"number", "tau", "pi", "function", "'('", "'-'"});
    }
  }

  void expect(TokKind k, const char* name) {
    if (!match(k)) {
      throw ParseError(std::string("expected ") + name, peek().offset, {name});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string CoeffExpr::str() const {
  std::string out;
  print_expr(*this, out);
  return out;
}

bool CoeffExpr::equals(const CoeffExpr& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case ExprKind::Number:
      return value_ == other.value_;
    case ExprKind::Tau:
    case ExprKind::Pi:
      return true;
    case ExprKind::Unary:
      return unary_op_ == other.unary_op_ && lhs_->equals(*other.lhs_);
    case ExprKind::Binary:
      return binary_op_ == other.binary_op_ && lhs_->equals(*other.lhs_) &&
             rhs_->equals(*other.rhs_);
  }
  return false;
}

CoeffExpr::Ptr parse_coeff_expr(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty expression", 0, {"number", "tau", "pi", "function", "'('", "'-'"});
  }
  return Parser(Lexer(text).run()).run();
}

}  // namespace ql1sim
