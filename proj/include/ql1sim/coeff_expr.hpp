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

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ql1sim/errors.hpp"

namespace ql1sim {

enum class ExprKind { Number, Tau, Pi, Unary, Binary };
enum class UnaryOp { Neg, Sin, Cos, Exp, Sqrt, Abs };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

// Immutable AST for instance-config coefficient functions of tau.
// Grammar: number | tau | pi | unary {neg,sin,cos,exp,sqrt,abs} | binary {+,-,*,/,^}
// with precedence ^ > unary- > *,/ > +,- (left-associative except ^).
class CoeffExpr {
 public:
  using Ptr = std::shared_ptr<const CoeffExpr>;

  static Ptr number(double value);
  static Ptr tau();
  static Ptr pi();
  static Ptr unary(UnaryOp op, Ptr child);
  static Ptr binary(BinaryOp op, Ptr lhs, Ptr rhs);

  ExprKind kind() const { return kind_; }
  double value() const { return value_; }
  UnaryOp unary_op() const { return unary_op_; }
  BinaryOp binary_op() const { return binary_op_; }
  const Ptr& child() const { return lhs_; }
  const Ptr& lhs() const { return lhs_; }
  const Ptr& rhs() const { return rhs_; }

  double eval(double tau) const;

  // Printed form re-parses to a structurally identical AST: parse(str()) == *this.
  std::string str() const;

  bool equals(const CoeffExpr& other) const;

 private:
  CoeffExpr() = default;

  ExprKind kind_ = ExprKind::Number;
  double value_ = 0.0;
  UnaryOp unary_op_ = UnaryOp::Neg;
  BinaryOp binary_op_ = BinaryOp::Add;
  Ptr lhs_;
  Ptr rhs_;
};

// Throws ParseError carrying the byte offset of the offending token and the
// token classes that would have been accepted there.
CoeffExpr::Ptr parse_coeff_expr(std::string_view text);

}  // namespace ql1sim
