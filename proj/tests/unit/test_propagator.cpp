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
#include "ql1sim/io.hpp"
#include "ql1sim/linalg.hpp"
#include "ql1sim/propagator.hpp"
#include "ql1sim/quadrature.hpp"
#include "ql1sim/rng.hpp"

using namespace ql1sim;

TEST_CASE("constant Z over a half period gives -I") {
  const auto h = builtin_instance("const-z", {{"t_end", M_PI}});
  const auto res = evolve(h, 0.0, M_PI, 1e-10);
  CHECK(max_norm(res.unitary + identity(2)) < 1e-9);
  CHECK(res.error_estimate <= 1e-10);
  CHECK(unitarity_defect(res.unitary) < 1e-12);
}

TEST_CASE("linear-z matches the commuting closed form") {
  // H = (1+tau) Z commutes with itself; E = exp(-i (t + t^2/2) Z), phase 1.5
  // at t = 1.
  const auto h = builtin_instance("linear-z", {});
  const auto res = evolve(h, 0.0, 1.0, 1e-10);
  CHECK(std::abs(res.unitary(0, 0) -
                 Complex(0.070737201667702809, -0.99749498660405445)) < 1e-9);
  CHECK(std::abs(res.unitary(1, 1) -
                 Complex(0.070737201667702809, 0.99749498660405445)) < 1e-9);
  CHECK(std::abs(res.unitary(0, 1)) < 1e-12);
}

TEST_CASE("piecewise generators compose in time order") {
  const auto h = builtin_instance("piecewise-xz", {});
  const auto res = evolve(h, 0.0, 2.0, 1e-10);
  const Matrix expect = expm_hermitian(pauli_z(), Complex(0.0, -1.0)) *
                        expm_hermitian(pauli_x(), Complex(0.0, -1.0));
  CHECK(max_norm(res.unitary - expect) < 1e-9);
}

TEST_CASE("propagators multiply across a split point") {
  const auto h = builtin_instance("rotating-field", {});
  SplitMix64 rng(99);
  const double tol = 1e-9;
  for (int trial = 0; trial < 5; ++trial) {
    const double s = 1.5 * rng.next_double();
    const Matrix whole = evolve(h, 0.0, 1.5, tol).unitary;
    const Matrix left = evolve(h, 0.0, s, tol).unitary;
    const Matrix right = evolve(h, s, 1.5, tol).unitary;
    CHECK(spectral_norm(whole - right * left) <= 3.0 * tol);
  }
}

TEST_CASE("propagator distance is bounded by the generator L1 distance") {
  const auto ha = builtin_instance("rotating-field", {});
  const auto hb = builtin_instance("three-tone", {});
  const double t = 1.0;
  const double tol = 1e-9;
  const Matrix ua = evolve(ha, 0.0, t, tol).unitary;
  const Matrix ub = evolve(hb, 0.0, t, tol).unitary;
  const double l1_gap = adaptive_simpson(
      [&](double tau) { return spectral_norm(ha.eval(tau) - hb.eval(tau)); }, 0.0, t, 1e-10);
  CHECK(spectral_norm(ua - ub) <= l1_gap + 3.0 * tol);
  CHECK(l1_gap > 0.1);  // the bound is not vacuous for this pair
}

TEST_CASE("evolve validates its window") {
  const auto h = builtin_instance("const-z", {});
  CHECK_THROWS_AS(evolve(h, 0.8, 0.2, 1e-10), InvalidBound);
  // Zero-width windows are the identity.
  CHECK(max_norm(evolve(h, 0.5, 0.5, 1e-10).unitary - identity(2)) < 1e-14);
}

TEST_CASE("scaling_derivative closed forms") {
  const auto h = builtin_instance("const-z", {});
  const Matrix minus_iz = Complex(0.0, -1.0) * pauli_z();
  // At scale 0 the propagator family sits at the identity: derivative -iZ t.
  CHECK(max_norm(scaling_derivative(h, 0.0, 1.0, 1e-8) - minus_iz) < 1e-7);
  // At scale 1: -iZ e^{-iZ}.
  const Matrix expect1 = minus_iz * expm_hermitian(pauli_z(), Complex(0.0, -1.0));
  CHECK(max_norm(scaling_derivative(h, 1.0, 1.0, 1e-8) - expect1) < 1e-7);
  // linear-z at scale 1: phase mass 1.5.
  const auto lin = builtin_instance("linear-z", {});
  const Matrix expect2 = Complex(0.0, -1.5) * pauli_z() *
                         expm_hermitian(pauli_z(), Complex(0.0, -1.5));
  CHECK(max_norm(scaling_derivative(lin, 1.0, 1.0, 1e-8) - expect2) < 1e-7);
}

TEST_CASE("scaling_derivative agrees with finite differences") {
  const auto h = builtin_instance("rotating-field", {});
  const double tol = 1e-8;
  const double s0 = 0.8;
  const double delta = 1e-4;
  const Matrix grad = scaling_derivative(h, s0, 1.5, tol);
  const Matrix up = evolve(h.scaled(s0 + delta), 0.0, 1.5, 1e-11).unitary;
  const Matrix dn = evolve(h.scaled(s0 - delta), 0.0, 1.5, 1e-11).unitary;
  const Matrix fd = (up - dn) / (2.0 * delta);
  CHECK(max_norm(grad - fd) < std::max(1e-6, 10.0 * tol));
}
