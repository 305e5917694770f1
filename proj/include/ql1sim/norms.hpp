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

#include "ql1sim/hamiltonian.hpp"

namespace ql1sim {

// Spectral: largest singular value (largest |eigenvalue| for Hermitian input).
// Max: largest |entry|.
// EllOneOfCoeffs / EllInfOfCoeffs: l1 / l-infinity of the LCU coefficient
// vector; only meaningful as profiles of an LCU-model Hamiltonian.
enum class NormKind { Spectral, Max, EllOneOfCoeffs, EllInfOfCoeffs };

// Norm of a single matrix; kind must be Spectral or Max.
double matrix_norm(const Matrix& a, NormKind kind);

// tau -> chosen norm of H(tau) (or of its coefficient vector).
double norm_profile(const TimeDepHamiltonian& h, NormKind kind, double tau);

// L1 norm of the profile over [a, b]: adaptive quadrature with absolute error
// <= tol, declared discontinuities as panel boundaries.
double time_l1_norm(const TimeDepHamiltonian& h, NormKind kind, double a, double b, double tol);

// L1 mass of a single LC/LCU term's spectral norm, and the sum over terms
// (the (infinity,1,1) norm of the decomposed Hamiltonian).
double term_l1_norm(const TimeDepHamiltonian& h, int l, double a, double b, double tol);
double terms_l1_norm(const TimeDepHamiltonian& h, double a, double b, double tol);

// Sup of the profile over a uniform grid of n+1 nodes (grid maximum; a lower
// estimate of the true L-infinity norm, adequate at desk scale).
double sup_norm_on_grid(const TimeDepHamiltonian& h, NormKind kind, int n);

// Finite-difference estimate of sup_tau ||H'(tau)||: central differences on a
// uniform grid, skipping panels that straddle declared discontinuities.
double derivative_sup_norm_fd(const TimeDepHamiltonian& h, NormKind kind, int n);

}  // namespace ql1sim
