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

#include <Eigen/Dense>
#include <complex>

#include "ql1sim/errors.hpp"

namespace ql1sim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

// Largest |entry|.
double max_norm(const Matrix& a);

// Largest singular value. Uses the eigendecomposition when the input is
// Hermitian to machine precision, an SVD otherwise.
double spectral_norm(const Matrix& a);

// Schatten-1 norm (sum of singular values).
double trace_norm(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol);

// Throws ConfigError naming `what` when `a` deviates from Hermitian by more
// than `tol` (absolute, in max-norm).
void require_hermitian(const Matrix& a, double tol, const char* what);

inline Matrix hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

// exp(factor * A) for Hermitian A via eigendecomposition.
Matrix expm_hermitian(const Matrix& a, Complex factor);

// Nearest unitary in Frobenius norm (polar factor via SVD).
Matrix polar_unitary(const Matrix& a);

// max-norm distance from unitarity, ||U^dag U - I||_max.
double unitarity_defect(const Matrix& u);

}  // namespace ql1sim
