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

#include <cstdint>

#include "ql1sim/hamiltonian.hpp"

namespace ql1sim {

struct PropagatorResult {
  Matrix unitary;
  double error_estimate = 0.0;  // Richardson discrepancy between final and half-step runs
  std::int64_t steps_used = 0;
};

// Time-ordered evolution E(t, s) of H by midpoint-exponential steps (second
// order Magnus). Step counts double until two successive runs agree to tol in
// spectral norm; declared discontinuities are always step boundaries. The
// returned matrix is polar-projected to the nearest unitary.
// Throws NoConvergence after 24 doublings, InvalidBound if s > t.
PropagatorResult evolve(const TimeDepHamiltonian& h, double s, double t, double tol);

// d/ds E_s(t, 0) for the scaled family E_s generated by s_scale * H:
// the integral of E_s(t, tau) (-i H(tau)) E_s(tau, 0) over tau in [0, t],
// evaluated by adaptive quadrature with evolve as subroutine.
Matrix scaling_derivative(const TimeDepHamiltonian& h, double s_scale, double t, double tol);

}  // namespace ql1sim
