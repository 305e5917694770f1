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

#include "ql1sim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ql1sim/errors.hpp"
#include "ql1sim/rng.hpp"

namespace ql1sim {

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 1)
    throw DimensionMismatch("density matrix must be square");
  if (!is_hermitian(rho_, 1e-10)) throw ConfigError("density matrix must be Hermitian");
  if (std::abs(rho_.trace().real() - 1.0) > 1e-10 || std::abs(rho_.trace().imag()) > 1e-10)
    throw ConfigError("density matrix must have unit trace");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(rho_), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw ConfigError("density matrix must be positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double n2 = psi.squaredNorm();
  if (n2 <= 0.0) throw ConfigError("pure state must be nonzero");
  Vector v = psi / std::sqrt(n2);
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw DimensionMismatch("dimension must be positive");
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

MixedUnitaryChannel::MixedUnitaryChannel(std::vector<double> w, std::vector<Matrix> u)
    : weights(std::move(w)), unitaries(std::move(u)) {
  if (weights.empty() || weights.size() != unitaries.size())
    throw DimensionMismatch("channel needs matching, nonempty weight and unitary lists");
  const auto d = unitaries.front().rows();
  double total = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] < -1e-12) throw ConfigError("channel weights must be nonnegative");
    total += weights[k];
    if (unitaries[k].rows() != d || unitaries[k].cols() != d)
      throw DimensionMismatch("channel unitaries must share one dimension");
    if (unitarity_defect(unitaries[k]) > 1e-10)
      throw ConfigError("channel member is not unitary within 1e-10");
  }
  if (std::abs(total - 1.0) > 1e-10) throw ConfigError("channel weights must sum to 1");
}

MixedUnitaryChannel MixedUnitaryChannel::single(const Matrix& u) {
  return MixedUnitaryChannel({1.0}, {u});
}

DensityMatrix apply_channel(const MixedUnitaryChannel& c, const DensityMatrix& rho) {
  if (c.dim() != rho.dim()) throw DimensionMismatch("channel and state dimensions differ");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (std::size_t k = 0; k < c.weights.size(); ++k)
    out.noalias() += c.weights[k] * (c.unitaries[k] * rho.matrix() * c.unitaries[k].adjoint());
  return DensityMatrix(hermitize(out));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("state dimensions differ");
  return trace_norm(hermitize(rho.matrix() - sigma.matrix()));
}

Superoperator Superoperator::identity(int dim) {
  Superoperator s;
  s.dim = dim;
  s.s = Matrix::Identity(dim * dim, dim * dim);
  return s;
}

Superoperator Superoperator::from_channel(const MixedUnitaryChannel& c) {
  const int d = c.dim();
  Superoperator out;
  out.dim = d;
  out.s = Matrix::Zero(d * d, d * d);
  // vec(U rho U^dagger) = (conj(U) (x) U) vec(rho) for column-major vec.
  for (std::size_t k = 0; k < c.weights.size(); ++k) {
    const Matrix& u = c.unitaries[k];
    const Matrix uc = u.conjugate();
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q)
        out.s.block(p * d, q * d, d, d) += (c.weights[k] * uc(p, q)) * u;
  }
  return out;
}

Matrix Superoperator::apply(const Matrix& rho) const {
  if (rho.rows() != dim || rho.cols() != dim)
    throw DimensionMismatch("superoperator and state dimensions differ");
  Vector v = Eigen::Map<const Vector>(rho.data(), dim * dim);
  Vector w = s * v;
  return Eigen::Map<const Matrix>(w.data(), dim, dim);
}

Superoperator Superoperator::then(const Superoperator& next) const {
  if (next.dim != dim) throw DimensionMismatch("superoperator dimensions differ");
  Superoperator out;
  out.dim = dim;
  out.s = next.s * s;
  return out;
}

namespace {

// Applies a system-side superoperator to an operator X on system (x) reference
// (both of dimension d), composite index j*d + i with i the system index.
Matrix apply_lifted(const Matrix& s, int d, const Matrix& x) {
  Matrix out(d * d, d * d);
  for (int j = 0; j < d; ++j)
    for (int jp = 0; jp < d; ++jp) {
      const Matrix block = x.block(j * d, jp * d, d, d);
      Vector v = Eigen::Map<const Vector>(block.data(), d * d);
      Vector w = s * v;
      out.block(j * d, jp * d, d, d) = Eigen::Map<const Matrix>(w.data(), d, d);
    }
  return out;
}

struct AscentResult {
  double value = 0.0;
};

// Coordinate ascent on pure lifted inputs: alternate the sign operator of the
// output difference with the top eigenvector of the pulled-back objective.
AscentResult ascend(const Matrix& delta, int d, Vector psi, int iters) {
  AscentResult res;
  const Matrix delta_adj = delta.adjoint();
  for (int it = 0; it < iters; ++it) {
    Matrix rho = psi * psi.adjoint();
    Matrix y = hermitize(apply_lifted(delta, d, rho));
    Eigen::SelfAdjointEigenSolver<Matrix> es(y);
    double value = es.eigenvalues().cwiseAbs().sum();
    res.value = std::max(res.value, value);
    Matrix p = Matrix::Zero(d * d, d * d);
    for (int k = 0; k < d * d; ++k) {
      const double sgn = es.eigenvalues()(k) >= 0.0 ? 1.0 : -1.0;
      p += sgn * (es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint());
    }
    Matrix l = hermitize(apply_lifted(delta_adj, d, p));
    Eigen::SelfAdjointEigenSolver<Matrix> lv(l);
    Vector next = lv.eigenvectors().col(d * d - 1);
    if ((next - psi).norm() < 1e-14 && it > 0) break;
    psi = next;
  }
  // Score the final iterate too.
  Matrix rho = psi * psi.adjoint();
  Matrix y = hermitize(apply_lifted(delta, d, rho));
  res.value = std::max(res.value, trace_norm(y));
  return res;
}

constexpr int kAscentIters = 50;

}  // namespace

double diamond_lower_bound(const Superoperator& a, const Superoperator& b, int restarts,
                           std::uint64_t seed) {
  if (a.dim != b.dim) throw DimensionMismatch("superoperator dimensions differ");
  const int d = a.dim;
  const Matrix delta = a.s - b.s;
  double best = 0.0;
  // Maximally entangled start: Psi = I/sqrt(d), lifted component (j*d+i) = Psi(i,j).
  {
    Matrix ent = Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d));
    Vector psi = Eigen::Map<const Vector>(ent.data(), d * d);
    best = std::max(best, ascend(delta, d, psi, kAscentIters).value);
  }
  for (int r = 0; r < restarts; ++r) {
    auto rng = SplitMix64::keyed(seed, {0x9d1aull, static_cast<std::uint64_t>(r)});
    Vector psi = rng.next_state(d * d);
    best = std::max(best, ascend(delta, d, psi, kAscentIters).value);
  }
  return best;
}

double diamond_lower_bound(const MixedUnitaryChannel& a, const MixedUnitaryChannel& b,
                           int restarts, std::uint64_t seed) {
  return diamond_lower_bound(Superoperator::from_channel(a), Superoperator::from_channel(b),
                             restarts, seed);
}

}  // namespace ql1sim
