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
#include <utility>
#include <vector>

#include "ql1sim/linalg.hpp"

namespace ql1sim {

// Hermitian matrix with at most one nonzero per row and per column, stored as
// explicit entries with both halves of each off-diagonal pair present.
struct OneSparseMatrix {
  struct Entry {
    int row = 0, col = 0;
    Complex value;
  };
  int dim = 0;
  std::vector<Entry> entries;

  Matrix dense() const;
  // Checks occupancy and Hermitian pairing; when reflection is set, also unit
  // modulus off the diagonal and +-1 on it.
  void validate(bool reflection = false) const;
};

// Splits a d-sparse Hermitian matrix into at most d^2 Hermitian 1-sparse
// terms that re-sum exactly: deterministic greedy edge coloring of the support
// pairs {j,k} (a self-loop for each diagonal), one term per color. Each term's
// max-norm never exceeds the input's.
// Throws SparsityViolation when a row or column has more than d nonzeros.
std::vector<OneSparseMatrix> one_sparse_decompose(const Matrix& h, int d);

// Rounds each term's entries to integer multiples of gamma, separately in the
// real and imaginary channels (round half to even), and emits the multiples as
// stacked unit-modulus layers. Reconstruction gamma * sum of layers is within
// sqrt(2)*gamma of the input in max-norm; second member is eta, the layer count.
std::pair<std::vector<OneSparseMatrix>, std::int64_t> reflection_round(
    const std::vector<OneSparseMatrix>& terms, double gamma);

}  // namespace ql1sim
