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

#include "doctest.h"

#include <cmath>
#include <string>

#include "ql1sim/coeff_expr.hpp"
#include "ql1sim/errors.hpp"
#include "ql1sim/rng.hpp"

using namespace ql1sim;

TEST_CASE("parsing builds the expected tree shapes") {
  const auto e = parse_coeff_expr("1+tau");
  REQUIRE(e->kind() == ExprKind::Binary);
  CHECK(e->binary_op() == BinaryOp::Add);
  CHECK(e->lhs()->kind() == ExprKind::Number);
  CHECK(e->lhs()->value() == 1.0);
  CHECK(e->rhs()->kind() == ExprKind::Tau);
  CHECK(e->eval(2.0) == doctest::Approx(3.0));

  const auto f = parse_coeff_expr("sin(pi*tau)^2");
  REQUIRE(f->kind() == ExprKind::Binary);
  CHECK(f->binary_op() == BinaryOp::Pow);
  REQUIRE(f->lhs()->kind() == ExprKind::Unary);
  CHECK(f->lhs()->unary_op() == UnaryOp::Sin);
  CHECK(f->rhs()->kind() == ExprKind::Number);
  CHECK(f->eval(0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f->eval(1.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("regularized reciprocal peaks where the denominator bottoms out") {
  const auto e = parse_coeff_expr("1/(1e-9+abs(tau-1))");
  CHECK(e->eval(1.0) == doctest::Approx(1e9).epsilon(1e-12));
  CHECK(e->eval(0.0) == doctest::Approx(1.0 / (1.0 + 1e-9)).epsilon(1e-12));
}

TEST_CASE("operator precedence and associativity") {
  CHECK(parse_coeff_expr("2+3*4")->eval(0.0) == doctest::Approx(14.0));
  CHECK(parse_coeff_expr("2*3^2")->eval(0.0) == doctest::Approx(18.0));
  // Unary minus binds looser than ^.
  CHECK(parse_coeff_expr("-2^2")->eval(0.0) == doctest::Approx(-4.0));
  // ^ is right-associative.
  CHECK(parse_coeff_expr("2^3^2")->eval(0.0) == doctest::Approx(512.0));
  CHECK(parse_coeff_expr("10-4-3")->eval(0.0) == doctest::Approx(3.0));
  CHECK(parse_coeff_expr("  1 +  tau\t* 2 ")->eval(3.0) == doctest::Approx(7.0));
}

TEST_CASE("parse errors carry an offset and expectations") {
  try {
    parse_coeff_expr("1+");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.offset == 2);
    CHECK_FALSE(err.expected.empty());
  }
  try {
    parse_coeff_expr(")");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.offset == 0);
    CHECK_FALSE(err.expected.empty());
  }
  CHECK_THROWS_AS(parse_coeff_expr(""), ParseError);
  CHECK_THROWS_AS(parse_coeff_expr("bogus(tau)"), ParseError);
}

namespace {

// Random expression tree of bounded depth. Number literals stay nonnegative:
// the grammar has no signed literals, so a negative value could never parse
// back to a Number node and would break the structural round-trip on purpose.
CoeffExpr::Ptr random_expr(SplitMix64& rng, int depth) {
  const std::uint64_t pick = rng.next_u64() % (depth <= 0 ? 3 : 10);
  switch (pick) {
    case 0:
      return CoeffExpr::number(10.0 * rng.next_double());
    case 1:
      return CoeffExpr::tau();
    case 2:
      return CoeffExpr::pi();
    case 3:
    case 4: {
      static const UnaryOp ops[] = {UnaryOp::Neg, UnaryOp::Sin, UnaryOp::Cos,
                                    UnaryOp::Exp, UnaryOp::Sqrt, UnaryOp::Abs};
      return CoeffExpr::unary(ops[rng.next_u64() % 6], random_expr(rng, depth - 1));
    }
    default: {
      static const BinaryOp ops[] = {BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul,
                                     BinaryOp::Div, BinaryOp::Pow};
      return CoeffExpr::binary(ops[rng.next_u64() % 5], random_expr(rng, depth - 1),
                               random_expr(rng, depth - 1));
    }
  }
}

}  // namespace

TEST_CASE("printing round-trips structurally for random trees") {
  SplitMix64 rng(424242);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto e = random_expr(rng, 1 + static_cast<int>(rng.next_u64() % 8));
    const std::string text = e->str();
    const auto back = parse_coeff_expr(text);
    if (!e->equals(*back)) {
      CAPTURE(text);
      FAIL_CHECK("round trip changed the tree");
    }
  }
}
