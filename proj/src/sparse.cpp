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

#include "ql1sim/sparse.hpp"

#include <algorithm>
#include <cmath>

#include "ql1sim/errors.hpp"

namespace ql1sim {

Matrix OneSparseMatrix::dense() const {
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& e : entries) m(e.row, e.col) += e.value;
  return m;
}

void OneSparseMatrix::validate(bool reflection) const {
  std::vector<int> row_count(dim, 0), col_count(dim, 0);
  for (const auto& e : entries) {
    if (e.row < 0 || e.row >= dim || e.col < 0 || e.col >= dim)
      throw OutOfRange("entry outside the matrix");
    ++row_count[e.row];
    ++col_count[e.col];
  }
  for (int i = 0; i < dim; ++i)
    if (row_count[i] > 1 || col_count[i] > 1)
      throw SparsityViolation("more than one entry in a row or column");
  Matrix m = dense();
  for (const auto& e : entries) {
    if (m(e.col, e.row) != std::conj(e.value))
      throw ConfigError("entries must come in Hermitian pairs");
    if (reflection) {
      if (e.row == e.col) {
        if (e.value != Complex(1.0) && e.value != Complex(-1.0))
          throw ConfigError("reflection diagonal must be +1 or -1");
      } else if (std::abs(std::abs(e.value) - 1.0) > 1e-12) {
        throw ConfigError("reflection off-diagonals must have unit modulus");
      }
    }
  }
}

std::vector<OneSparseMatrix> one_sparse_decompose(const Matrix& h, int d) {
  require_hermitian(h, 1e-12 * std::max(1.0, max_norm(h)), "one-sparse decomposition input");
  if (d < 1) throw OutOfRange("sparsity parameter must be at least 1");
  const int n = static_cast<int>(h.rows());
  const Matrix a = hermitize(h);

  std::vector<int> row_nnz(n, 0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (a(j, k) != Complex(0.0)) ++row_nnz[j];
  for (int j = 0; j < n; ++j)
    if (row_nnz[j] > d) throw SparsityViolation("a row exceeds the declared sparsity");

  // Support pairs {j,k}, j <= k, in deterministic order. Greedy proper edge
  // coloring: a pair may not share a color with any pair touching either
  // endpoint, so every color class is 1-sparse. A vertex sees at most d
  // incident pairs, hence at most 2d-1 <= d^2 colors are ever needed.
  std::vector<std::vector<bool>> used;  // [vertex][color]
  used.assign(n, {});
  std::vector<std::vector<std::pair<int, int>>> buckets;
  auto color_free = [&](int v, int c) {
    return c >= static_cast<int>(used[v].size()) || !used[v][c];
  };
  auto mark = [&](int v, int c) {
    if (c >= static_cast<int>(used[v].size())) used[v].resize(c + 1, false);
    used[v][c] = true;
  };
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      if (a(j, k) == Complex(0.0)) continue;
      int c = 0;
      while (!(color_free(j, c) && color_free(k, c))) ++c;
      mark(j, c);
      mark(k, c);
      if (c >= static_cast<int>(buckets.size())) buckets.resize(c + 1);
      buckets[c].push_back({j, k});
    }

  std::vector<OneSparseMatrix> out;
  for (const auto& bucket : buckets) {
    OneSparseMatrix term;
    term.dim = n;
    for (auto [j, k] : bucket) {
      term.entries.push_back({j, k, a(j, k)});
      if (k != j) term.entries.push_back({k, j, std::conj(a(j, k))});
    }
    term.validate();
    out.push_back(std::move(term));
  }
  if (static_cast<int>(out.size()) > d * d)
    throw SparsityViolation("decomposition exceeded d^2 terms");
  return out;
}

namespace {

// Round half to even, matching the default floating-point rounding mode.
long long round_even(double x) { return std::llrint(x); }

}  // namespace

std::pair<std::vector<OneSparseMatrix>, std::int64_t> reflection_round(
    const std::vector<OneSparseMatrix>& terms, double gamma) {
  if (!(gamma > 0.0)) throw NegativeInput("rounding step gamma must be positive");
  std::vector<OneSparseMatrix> out;
  std::int64_t eta = 0;
  for (const auto& term : terms) {
    // One rounded integer per occupied position and channel.
    struct Pos {
      int row, col;
      long long n_re, n_im;
    };
    std::vector<Pos> positions;
    long long layers_re = 0, layers_im = 0;
    for (const auto& e : term.entries) {
      if (e.row > e.col) continue;  // pairs handled from their upper half
      Pos p{e.row, e.col, round_even(e.value.real() / gamma),
            round_even(e.value.imag() / gamma)};
      if (p.row == p.col) p.n_im = 0;  // Hermitian diagonal is real
      positions.push_back(p);
      layers_re = std::max(layers_re, std::llabs(p.n_re));
      layers_im = std::max(layers_im, std::llabs(p.n_im));
    }
    for (long long layer = 1; layer <= layers_re; ++layer) {
      OneSparseMatrix g;
      g.dim = term.dim;
      for (const auto& p : positions) {
        if (std::llabs(p.n_re) < layer) continue;
        const double sgn = p.n_re > 0 ? 1.0 : -1.0;
        g.entries.push_back({p.row, p.col, Complex(sgn, 0.0)});
        if (p.col != p.row) g.entries.push_back({p.col, p.row, Complex(sgn, 0.0)});
      }
      g.validate(true);
      out.push_back(std::move(g));
      ++eta;
    }
    for (long long layer = 1; layer <= layers_im; ++layer) {
      OneSparseMatrix g;
      g.dim = term.dim;
      for (const auto& p : positions) {
        if (std::llabs(p.n_im) < layer || p.row == p.col) continue;
        const double sgn = p.n_im > 0 ? 1.0 : -1.0;
        g.entries.push_back({p.row, p.col, Complex(0.0, sgn)});
        g.entries.push_back({p.col, p.row, Complex(0.0, -sgn)});
      }
      g.validate(true);
      out.push_back(std::move(g));
      ++eta;
    }
  }
  return {std::move(out), eta};
}

}  // namespace ql1sim
