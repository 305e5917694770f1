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

#include <functional>
#include <vector>

#include "ql1sim/linalg.hpp"

namespace ql1sim {

inline constexpr long kDefaultPanelBudget = 1L << 20;

// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
// Declared discontinuities in `split_points` become hard panel boundaries so
// the integrand only needs to be smooth between them. Throws
// QuadratureNonConvergent when the panel budget runs out.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        const std::vector<double>& split_points = {},
                        long max_panels = kDefaultPanelBudget);

// Same scheme for matrix-valued integrands; the error metric is the max-norm
// over entries, so every entry is resolved to tol simultaneously.
Matrix adaptive_simpson_matrix(const std::function<Matrix(double)>& f, double a, double b,
                               double tol, const std::vector<double>& split_points = {},
                               long max_panels = kDefaultPanelBudget);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, RealVector& nodes, RealVector& weights);

}  // namespace ql1sim
