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

#include "ql1sim/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ql1sim/errors.hpp"
#include "ql1sim/quadrature.hpp"

namespace ql1sim {
namespace {

constexpr int kMaxDoublings = 24;

std::vector<double> panel_edges(const TimeDepHamiltonian& h, double s, double t) {
  std::vector<double> edges;
  edges.push_back(s);
  for (double c : h.discontinuities())
    if (c > s && c < t) edges.push_back(c);
  edges.push_back(t);
  return edges;
}

// One full traversal with 2^level midpoint-exponential steps per panel.
Matrix run_level(const TimeDepHamiltonian& h, const std::vector<double>& edges, int level,
                 std::int64_t* steps) {
  Matrix u = identity(h.dim());
  const std::int64_t per_panel = std::int64_t{1} << level;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    const double step = (b - a) / static_cast<double>(per_panel);
    for (std::int64_t j = 0; j < per_panel; ++j) {
      const double mid = a + (static_cast<double>(j) + 0.5) * step;
      u = expm_hermitian(h.eval(mid), Complex(0.0, -step)) * u;
      ++*steps;
    }
  }
  return u;
}

}  // namespace

PropagatorResult evolve(const TimeDepHamiltonian& h, double s, double t, double tol) {
  h.check_domain(s);
  h.check_domain(t);
  if (s > t) throw InvalidBound("evolve needs s <= t");
  PropagatorResult out;
  if (s == t) {
    out.unitary = identity(h.dim());
    return out;
  }
  const auto edges = panel_edges(h, s, t);
  std::int64_t dummy = 0;
  Matrix prev = run_level(h, edges, 0, &dummy);
  for (int level = 1; level <= kMaxDoublings; ++level) {
    std::int64_t steps = 0;
    Matrix cur = run_level(h, edges, level, &steps);
    const double disc = spectral_norm(cur - prev);
    if (disc <= tol) {
      out.unitary = polar_unitary(cur);
      out.error_estimate = disc;
      out.steps_used = steps;
      return out;
    }
    prev = std::move(cur);
  }
  throw NoConvergence("evolve: step doubling did not reach tolerance within 24 doublings");
}

Matrix scaling_derivative(const TimeDepHamiltonian& h, double s_scale, double t, double tol) {
  if (s_scale < 0.0 || s_scale > 2.0) throw OutOfRange("s_scale must lie in [0, 2]");
  h.check_domain(t);
  if (t == 0.0) return Matrix::Zero(h.dim(), h.dim());
  const auto scaled = h.scaled(s_scale);
  const double evolve_tol = std::max(tol * 1e-2, 1e-13);
  const Matrix w = evolve(scaled, 0.0, t, evolve_tol).unitary;  // E_s(t, 0)
  auto integrand = [&](double tau) -> Matrix {
    const Matrix p = evolve(scaled, 0.0, tau, evolve_tol).unitary;  // E_s(tau, 0)
    // E_s(t, tau) = E_s(t, 0) E_s(tau, 0)^dagger by multiplicativity.
    return w * p.adjoint() * (Complex(0.0, -1.0) * h.eval(tau)) * p;
  };
  return adaptive_simpson_matrix(integrand, 0.0, t, tol, h.discontinuities());
}

}  // namespace ql1sim
