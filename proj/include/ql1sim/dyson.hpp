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
#include "ql1sim/rescaling.hpp"

namespace ql1sim {

struct DysonConfig {
  int order_k = 0;  // truncation order K >= 0
  int grid_m = 1;   // time-grid size M >= 1, with K <= M
};

// Truncated, discretized Dyson series on midpoint nodes tau_m = t0 + (m+1/2)h:
//   D = sum_{k=0}^{K} (-i h)^k sum_{0<=m_1<...<m_k<M} H(tau_{m_k})...H(tau_{m_1}),
// evaluated by dynamic programming over prefix products. Not exactly unitary;
// callers measure it against the reference propagator.
// Throws BudgetExceeded when K*M exceeds 10^7.
Matrix dyson_truncated(const TimeDepHamiltonian& h, double t0, double t1,
                       const DysonConfig& cfg);

// The same series run on the rescaled Hamiltonian over [0, s_end].
Matrix rescaled_dyson(const TimeDepHamiltonian& h, const Clock& clock, const DysonConfig& cfg);

}  // namespace ql1sim
