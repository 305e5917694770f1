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
#include <utility>
#include <vector>

#include "ql1sim/errors.hpp"
#include "ql1sim/linalg.hpp"
#include "ql1sim/rng.hpp"
#include "ql1sim/sparse.hpp"

using namespace ql1sim;

namespace {

Matrix tridiagonal4() {
  Matrix m = Matrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) m(i, i) = Complex(1.0 + i, 0.0);
  for (int i = 0; i < 3; ++i) {
    m(i, i + 1) = Complex(0.5, 0.25 * (i + 1));
    m(i + 1, i) = std::conj(m(i, i + 1));
  }
  return m;
}

// Random d-sparse Hermitian: sum of d one-sparse Hermitian layers built from
// random involutions of the index set.
Matrix random_sparse(SplitMix64& rng, int dim, int d) {
  Matrix m = Matrix::Zero(dim, dim);
  for (int k = 0; k < d; ++k) {
    std::vector<int> idx(dim);
    for (int i = 0; i < dim; ++i) idx[i] = i;
    for (int i = dim - 1; i > 0; --i) std::swap(idx[i], idx[rng.next_u64() % (i + 1)]);
    for (int i = 0; i + 1 < dim; i += 2) {
      const int a = idx[i], b = idx[i + 1];
      if (rng.next_double() < 0.3) {
        m(a, a) += Complex(rng.next_normal(), 0.0);
        m(b, b) += Complex(rng.next_normal(), 0.0);
      } else {
        const Complex v = rng.next_cnormal();
        m(a, b) += v;
        m(b, a) += std::conj(v);
      }
    }
    if (dim % 2) m(idx[dim - 1], idx[dim - 1]) += Complex(rng.next_normal(), 0.0);
  }
  return m;
}

}  // namespace

TEST_CASE("decomposition closed forms") {
  // A diagonal matrix is itself one-sparse.
  const auto z_terms = one_sparse_decompose(pauli_z(), 1);
  REQUIRE(z_terms.size() == 1);
  CHECK(max_norm(z_terms[0].dense() - pauli_z()) == 0.0);
  CHECK_NOTHROW(z_terms[0].validate());

  // X + Z is 2-sparse; at most d^2 = 4 terms re-summing exactly.
  const Matrix xz = pauli_x() + pauli_z();
  const auto terms = one_sparse_decompose(xz, 2);
  CHECK(terms.size() <= 4);
  Matrix resum = Matrix::Zero(2, 2);
  for (const auto& t : terms) {
    t.validate();
    resum += t.dense();
  }
  CHECK(max_norm(resum - xz) < 1e-15);

  // Tridiagonal: 3-sparse, at most 9 terms.
  const Matrix tri = tridiagonal4();
  const auto tri_terms = one_sparse_decompose(tri, 3);
  CHECK(tri_terms.size() <= 9);
  Matrix tri_sum = Matrix::Zero(4, 4);
  for (const auto& t : tri_terms) {
    t.validate();
    tri_sum += t.dense();
  }
  CHECK(max_norm(tri_sum - tri) < 1e-14);
}

TEST_CASE("decomposition rejections") {
  CHECK_THROWS_AS(one_sparse_decompose(Matrix(Matrix::Ones(4, 4)), 2), SparsityViolation);
  CHECK_THROWS_AS(one_sparse_decompose(pauli_z(), 0), OutOfRange);
  Matrix nh(2, 2);
  nh << Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0);
  CHECK_THROWS_AS(one_sparse_decompose(nh, 2), ConfigError);
}

TEST_CASE("one-sparse validation") {
  OneSparseMatrix ok;
  ok.dim = 2;
  ok.entries = {{0, 1, Complex(0.5, 0.5)}, {1, 0, Complex(0.5, -0.5)}};
  CHECK_NOTHROW(ok.validate());
  // Same row twice.
  OneSparseMatrix busy;
  busy.dim = 2;
  busy.entries = {{0, 0, Complex(1.0, 0.0)}, {0, 1, Complex(1.0, 0.0)}};
  CHECK_THROWS_AS(busy.validate(), SparsityViolation);
  // Out-of-range entry.
  OneSparseMatrix oob;
  oob.dim = 2;
  oob.entries = {{0, 2, Complex(1.0, 0.0)}};
  CHECK_THROWS_AS(oob.validate(), OutOfRange);
  // Missing Hermitian partner.
  OneSparseMatrix lone;
  lone.dim = 2;
  lone.entries = {{0, 1, Complex(1.0, 0.0)}, {1, 0, Complex(0.5, 0.0)}};
  CHECK_THROWS_AS(lone.validate(), ConfigError);
  // Reflection mode insists on unit-modulus entries.
  CHECK_THROWS_AS(ok.validate(true), ConfigError);
  OneSparseMatrix refl;
  refl.dim = 2;
  refl.entries = {{0, 0, Complex(1.0, 0.0)}, {1, 1, Complex(-1.0, 0.0)}};
  CHECK_NOTHROW(refl.validate(true));
}

TEST_CASE("reflection rounding closed forms") {
  // Z at gamma = 1/4: four layers, each the reflection Z itself; zero error.
  const auto z_terms = one_sparse_decompose(pauli_z(), 1);
  const auto [z_layers, z_eta] = reflection_round(z_terms, 0.25);
  CHECK(z_eta == 4);
  REQUIRE(z_layers.size() == 4);
  Matrix acc = Matrix::Zero(2, 2);
  for (const auto& g : z_layers) {
    CHECK(max_norm(g.dense() - pauli_z()) == 0.0);
    acc += g.dense();
  }
  CHECK(max_norm(0.25 * acc - pauli_z()) < 1e-15);

  // 0.3 X: 0.3/0.25 rounds to one layer, residual 0.05.
  const auto x_terms = one_sparse_decompose(Matrix(0.3 * pauli_x()), 1);
  const auto [x_layers, x_eta] = reflection_round(x_terms, 0.25);
  CHECK(x_eta == 1);
  CHECK(spectral_norm(0.25 * x_layers[0].dense() - 0.3 * pauli_x()) ==
        doctest::Approx(0.05).epsilon(1e-12));

  // Both channels of (0.1 + 0.1i) round to zero: no layers, full residual.
  Matrix tiny = Matrix::Zero(2, 2);
  tiny(0, 1) = Complex(0.1, 0.1);
  tiny(1, 0) = Complex(0.1, -0.1);
  const auto t_terms = one_sparse_decompose(tiny, 1);
  const auto [t_layers, t_eta] = reflection_round(t_terms, 0.25);
  CHECK(t_eta == 0);
  CHECK(t_layers.empty());
  CHECK(spectral_norm(tiny) == doctest::Approx(0.1 * std::sqrt(2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(reflection_round(z_terms, 0.0), NegativeInput);
  CHECK_THROWS_AS(reflection_round(z_terms, -0.25), NegativeInput);
}

TEST_CASE("rounded layers fail reflection validation when tampered") {
  const auto terms = one_sparse_decompose(pauli_z(), 1);
  auto [layers, eta] = reflection_round(terms, 0.5);
  REQUIRE(!layers.empty());
  layers[0].entries[0].value *= 0.5;
  CHECK_THROWS_AS(layers[0].validate(true), ConfigError);
}

TEST_CASE("random sweep: exact re-sum, per-term rounding error, eta cap") {
  SplitMix64 rng(90210);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 2 + static_cast<int>(rng.next_u64() % 15);
    const int d = 1 + static_cast<int>(rng.next_u64() % 4);
    const Matrix h = random_sparse(rng, dim, d);
    const double hmax = max_norm(h);
    if (hmax == 0.0) continue;
    const auto terms = one_sparse_decompose(h, d);
    CHECK(terms.size() <= static_cast<std::size_t>(d) * d);
    Matrix resum = Matrix::Zero(dim, dim);
    for (const auto& t : terms) {
      t.validate();
      resum += t.dense();
    }
    CHECK(max_norm(resum - h) <= 1e-13 * hmax);

    for (int gi = 0; gi < 7; ++gi) {
      const double gamma = std::pow(10.0, -3.0 + 0.5 * gi);
      const auto [layers, eta] = reflection_round(terms, gamma);
      for (const auto& g : layers) g.validate(true);
      // Each term's rounding error stays below sqrt(2) gamma (per-channel
      // round-off is at most gamma/2).
      for (const auto& t : terms) {
        const auto [lt, et] = reflection_round({t}, gamma);
        Matrix at = Matrix::Zero(dim, dim);
        for (const auto& g : lt) at += g.dense();
        CHECK(spectral_norm(gamma * at - t.dense()) <= std::sqrt(2.0) * gamma);
      }
      CHECK(static_cast<double>(eta) <=
            2.0 * std::ceil(static_cast<double>(d) * d * hmax / gamma));
    }
  }
}

TEST_CASE("layer count scales like 1/gamma") {
  // 8x8 tridiagonal scaled by 5, decomposed at d = 3: eta across a log-spaced
  // gamma ladder fits slope -1 in log-log within [-1.2, -0.8].
  Matrix m = Matrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) m(i, i) = Complex(0.5 + 0.25 * i, 0.0);
  for (int i = 0; i < 7; ++i) {
    m(i, i + 1) = Complex(0.3, 0.1 * i);
    m(i + 1, i) = std::conj(m(i, i + 1));
  }
  m *= 5.0;
  const auto terms = one_sparse_decompose(m, 3);
  const double hmax = max_norm(m);
  std::vector<double> lx, ly;
  for (int k = 0; k < 7; ++k) {
    const double gamma = std::pow(10.0, -3.0 + 0.5 * k);
    const auto [layers, eta] = reflection_round(terms, gamma);
    REQUIRE(eta > 0);
    CHECK(static_cast<double>(eta) <= 2.0 * std::ceil(9.0 * hmax / gamma));
    lx.push_back(std::log10(gamma));
    ly.push_back(std::log10(static_cast<double>(eta)));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = lx.size();
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope >= -1.2);
  CHECK(slope <= -0.8);
}
