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

#include "ql1sim/norms.hpp"

#include <algorithm>
#include <cmath>

#include "ql1sim/errors.hpp"
#include "ql1sim/quadrature.hpp"

namespace ql1sim {

double matrix_norm(const Matrix& a, NormKind kind) {
  switch (kind) {
    case NormKind::Spectral:
      return spectral_norm(a);
    case NormKind::Max:
      return max_norm(a);
    default:
      throw OutOfRange("coefficient norms are only defined for LCU-model Hamiltonians");
  }
}

double norm_profile(const TimeDepHamiltonian& h, NormKind kind, double tau) {
  switch (kind) {
    case NormKind::Spectral:
      return spectral_norm(h.eval(tau));
    case NormKind::Max:
      return max_norm(h.eval(tau));
    case NormKind::EllOneOfCoeffs: {
      if (h.model() != HamModel::Lcu)
        throw OutOfRange("coefficient norms are only defined for LCU-model Hamiltonians");
      double s = 0.0;
      for (int l = 0; l < h.term_count(); ++l) s += std::abs(h.coeff(l, tau));
      return s;
    }
    case NormKind::EllInfOfCoeffs: {
      if (h.model() != HamModel::Lcu)
        throw OutOfRange("coefficient norms are only defined for LCU-model Hamiltonians");
      double s = 0.0;
      for (int l = 0; l < h.term_count(); ++l) s = std::max(s, std::abs(h.coeff(l, tau)));
      return s;
    }
  }
  throw OutOfRange("unknown norm kind");
}

double time_l1_norm(const TimeDepHamiltonian& h, NormKind kind, double a, double b, double tol) {
  h.check_domain(a);
  h.check_domain(b);
  return adaptive_simpson([&](double tau) { return norm_profile(h, kind, tau); }, a, b, tol,
                          h.discontinuities());
}

double term_l1_norm(const TimeDepHamiltonian& h, int l, double a, double b, double tol) {
  h.check_domain(a);
  h.check_domain(b);
  return adaptive_simpson([&](double tau) { return spectral_norm(h.term(l, tau)); }, a, b, tol,
                          h.discontinuities());
}

double terms_l1_norm(const TimeDepHamiltonian& h, double a, double b, double tol) {
  if (h.model() == HamModel::Dense)
    throw OutOfRange("per-term L1 norms need a decomposed (lc or lcu) Hamiltonian");
  const int n = h.term_count();
  double s = 0.0;
  for (int l = 0; l < n; ++l) s += term_l1_norm(h, l, a, b, tol / n);
  return s;
}

double sup_norm_on_grid(const TimeDepHamiltonian& h, NormKind kind, int n) {
  if (n < 1) throw OutOfRange("grid needs at least one panel");
  double s = 0.0;
  for (int k = 0; k <= n; ++k) {
    double tau = h.t_end() * static_cast<double>(k) / n;
    s = std::max(s, norm_profile(h, kind, tau));
  }
  return s;
}

double derivative_sup_norm_fd(const TimeDepHamiltonian& h, NormKind kind, int n) {
  if (n < 1) throw OutOfRange("grid needs at least one panel");
  const double step = h.t_end() / n;
  const double delta = step / 4.0;
  const auto& cuts = h.discontinuities();
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    double tau = (k + 0.5) * step;
    double lo = tau - delta, hi = tau + delta;
    bool straddles = false;
    for (double c : cuts)
      if (c > lo && c < hi) straddles = true;
    if (straddles) continue;
    switch (kind) {
      case NormKind::Spectral:
      case NormKind::Max: {
        Matrix d = (h.eval(hi) - h.eval(lo)) / (2.0 * delta);
        s = std::max(s, matrix_norm(d, kind));
        break;
      }
      case NormKind::EllOneOfCoeffs:
      case NormKind::EllInfOfCoeffs: {
        if (h.model() != HamModel::Lcu)
          throw OutOfRange("coefficient norms are only defined for LCU-model Hamiltonians");
        double acc = 0.0;
        for (int l = 0; l < h.term_count(); ++l) {
          double d = std::abs((h.coeff(l, hi) - h.coeff(l, lo)) / (2.0 * delta));
          if (kind == NormKind::EllOneOfCoeffs)
            acc += d;
          else
            acc = std::max(acc, d);
        }
        s = std::max(s, acc);
        break;
      }
    }
  }
  return s;
}

}  // namespace ql1sim
