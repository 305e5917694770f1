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

#include "ql1sim/dyson.hpp"

#include <cstdint>
#include <vector>

#include "ql1sim/errors.hpp"

namespace ql1sim {

Matrix dyson_truncated(const TimeDepHamiltonian& h, double t0, double t1,
                       const DysonConfig& cfg) {
  h.check_domain(t0);
  h.check_domain(t1);
  if (t0 > t1) throw InvalidBound("dyson needs t0 <= t1");
  if (cfg.order_k < 0 || cfg.grid_m < 1 || cfg.order_k > cfg.grid_m)
    throw ConfigError("dyson needs 0 <= K <= M with M >= 1");
  const int d = h.dim();
  if (cfg.order_k == 0 || t0 == t1) return identity(d);
  const std::int64_t work =
      static_cast<std::int64_t>(cfg.order_k) * static_cast<std::int64_t>(cfg.grid_m);
  if (work > 10'000'000) throw BudgetExceeded("dyson term budget K*M exceeds 1e7");

  const double step = (t1 - t0) / static_cast<double>(cfg.grid_m);
  // prefix[k] accumulates the strictly-increasing k-fold ordered products over
  // the nodes processed so far; updating k downward keeps indices strict.
  std::vector<Matrix> prefix(cfg.order_k + 1, Matrix::Zero(d, d));
  prefix[0] = identity(d);
  for (int m = 0; m < cfg.grid_m; ++m) {
    const double tau = t0 + (static_cast<double>(m) + 0.5) * step;
    const Matrix a = Complex(0.0, -step) * h.eval(tau);
    const int kmax = std::min(cfg.order_k, m + 1);
    for (int k = kmax; k >= 1; --k) prefix[k].noalias() += a * prefix[k - 1];
  }
  Matrix out = Matrix::Zero(d, d);
  for (int k = 0; k <= cfg.order_k; ++k) out += prefix[k];
  return out;
}

Matrix rescaled_dyson(const TimeDepHamiltonian& h, const Clock& clock, const DysonConfig& cfg) {
  const auto rescaled = rescaled_hamiltonian(h, clock);
  return dyson_truncated(rescaled, 0.0, clock.s_end(), cfg);
}

}  // namespace ql1sim
