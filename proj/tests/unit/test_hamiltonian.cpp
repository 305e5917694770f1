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

#include "ql1sim/errors.hpp"
#include "ql1sim/hamiltonian.hpp"
#include "ql1sim/linalg.hpp"

using namespace ql1sim;

TEST_CASE("eval rejects a non-Hermitian dense model") {
  const auto h = TimeDepHamiltonian::dense(2, 1.0, [](double) {
    Matrix m(2, 2);
    m << Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0);
    return m;
  });
  CHECK_THROWS_AS(h.eval(0.5), ConfigError);
}

TEST_CASE("domain checks") {
  const auto h = TimeDepHamiltonian::dense(2, 1.5, [](double tau) { return tau * pauli_z(); });
  CHECK_NOTHROW(h.eval(0.0));
  CHECK_NOTHROW(h.eval(1.5));
  CHECK_THROWS_AS(h.eval(-1e-9), TimeOutOfDomain);
  CHECK_THROWS_AS(h.eval(1.5 + 1e-9), TimeOutOfDomain);
  CHECK_THROWS_AS(h.check_domain(2.0), TimeOutOfDomain);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(TimeDepHamiltonian::dense(0, 1.0, [](double) { return pauli_z(); }),
                  ConfigError);
  CHECK_THROWS_AS(TimeDepHamiltonian::dense(2, 0.0, [](double) { return pauli_z(); }),
                  ConfigError);
  CHECK_THROWS_AS(TimeDepHamiltonian::dense(2, 1.0, nullptr), ConfigError);
  CHECK_THROWS_AS(TimeDepHamiltonian::linear_combination(2, 1.0, {}), ConfigError);
  // Coefficient and unitary lists must align.
  CHECK_THROWS_AS(TimeDepHamiltonian::lcu(2, 1.0, {[](double) { return 1.0; }},
                                          {pauli_x(), pauli_z()}),
                  DimensionMismatch);
  // Unitary of the wrong dimension.
  CHECK_THROWS_AS(TimeDepHamiltonian::lcu(4, 1.0, {[](double) { return 1.0; }}, {pauli_x()}),
                  DimensionMismatch);
  // Not unitary.
  CHECK_THROWS_AS(TimeDepHamiltonian::lcu(2, 1.0, {[](double) { return 1.0; }},
                                          {0.5 * pauli_x()}),
                  ConfigError);
}

TEST_CASE("lcu rejects negative coefficients") {
  // The constructor spot-checks the coefficient sign on a uniform grid.
  CHECK_THROWS_AS(TimeDepHamiltonian::lcu(2, 1.0, {[](double tau) { return 0.5 - tau; }},
                                          {pauli_z()}),
                  NegativeInput);
  const auto ok =
      TimeDepHamiltonian::lcu(2, 1.0, {[](double tau) { return 0.5 + tau; }}, {pauli_z()});
  CHECK_NOTHROW(ok.eval(0.75));
}

TEST_CASE("term access on the linear-combination model") {
  const auto h = TimeDepHamiltonian::linear_combination(
      2, 1.0,
      {[](double tau) -> Matrix { return (1.0 + tau) * pauli_z(); },
       [](double tau) -> Matrix { return std::cos(tau) * pauli_x(); }});
  CHECK(h.term_count() == 2);
  CHECK(max_norm(h.term(0, 0.5) - 1.5 * pauli_z()) < 1e-15);
  CHECK(max_norm(h.term(1, 0.0) - pauli_x()) < 1e-15);
  CHECK(max_norm(h.eval(0.5) - (1.5 * pauli_z() + std::cos(0.5) * pauli_x())) < 1e-15);
  CHECK_THROWS_AS(h.term(2, 0.5), OutOfRange);
  CHECK_THROWS_AS(h.term(-1, 0.5), OutOfRange);
  // coeff/unitary are LCU-model accessors.
  CHECK_THROWS_AS(h.coeff(0, 0.5), ConfigError);
  CHECK_THROWS_AS(h.unitary(0), ConfigError);
}

TEST_CASE("lcu term access") {
  const auto h = TimeDepHamiltonian::lcu(
      2, 2.0, {[](double tau) { return 1.0 + tau; }, [](double) { return 0.5; }},
      {pauli_z(), pauli_x()});
  CHECK(h.term_count() == 2);
  CHECK(h.coeff(0, 1.0) == doctest::Approx(2.0));
  CHECK(max_norm(h.unitary(1) - pauli_x()) == 0.0);
  CHECK(max_norm(h.term(0, 1.0) - 2.0 * pauli_z()) < 1e-15);
}

TEST_CASE("scaling preserves the model for positive factors") {
  const auto h = TimeDepHamiltonian::lcu(2, 1.0, {[](double) { return 1.0; }}, {pauli_z()});
  const auto h2 = h.scaled(2.5);
  CHECK(h2.model() == HamModel::Lcu);
  CHECK(h2.t_end() == h.t_end());
  CHECK(max_norm(h2.eval(0.3) - 2.5 * pauli_z()) < 1e-15);
  // A sign flip would make LCU coefficients negative; the fallback wrapper
  // stays evaluable.
  const auto hneg = h.scaled(-1.0);
  CHECK(max_norm(hneg.eval(0.3) + pauli_z()) < 1e-15);
}

TEST_CASE("eval rejects a wrongly sized matrix from the callback") {
  const auto h = TimeDepHamiltonian::dense(2, 1.0, [](double) -> Matrix { return identity(3); });
  CHECK_THROWS_AS(h.eval(0.5), DimensionMismatch);
}

TEST_CASE("declared discontinuities are sorted, deduped, and clipped to the interior") {
  const auto h = TimeDepHamiltonian::dense(
      2, 2.0, [](double tau) { return (tau < 1.0 ? 1.0 : 2.0) * pauli_z(); },
      {1.5, 1.0, 1.0, 0.0, 2.0, 7.0});
  REQUIRE(h.discontinuities().size() == 2);
  CHECK(h.discontinuities()[0] == 1.0);
  CHECK(h.discontinuities()[1] == 1.5);
}
