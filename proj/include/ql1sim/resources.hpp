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

#include <map>
#include <string>

#include "ql1sim/hamiltonian.hpp"

namespace ql1sim {

// Closed-form complexity expressions. Formulas with published constants
// (QdriftSegments, QdriftLCU) evaluate exactly; the rest are big-O shapes
// evaluated with constant 1 and flagged asymptotic. Logarithms are base 2
// with arguments clamped at >= 4 so log log stays positive.
enum class ResourceFormula {
  QdriftSegments,     // 4 ceil(l1^2 / eps)
  QdriftSM,           // (d^2 hmax_l1)^2 n / eps
  QdriftLCU,          // 4 ceil(alpha_l1_l1^2 / eps) g_e
  DysonSM,            // d hmax_l1 log(d hmax_l1/eps) / loglog(...)
  DysonLCU,           // alpha_inf_l1 L^2 g_c
  DysonM,             // (t/(alpha eps)) (deriv_l1/t + hinf_inf^2)
  FracQueryT,         // d^2 hmax_l1
  FracQueryDiscrete,  // T log(T/eps)/loglog(T/eps), T = d^2 hmax_l1
  FracR1,             // deriv_inf_inf t^2 / eps
  FracS,              // (d^2 hmax_inf t)^2 / eps
  RiemannQueryTotal,  // d^2 profile_sum t / r
  MonteCarloSM,       // (d^2 hmax_inf t)^2 n / eps
  MonteCarloLCU,      // (alpha_l1_inf t)^2 g_e / eps
};

const char* formula_name(ResourceFormula f);
ResourceFormula formula_from_name(const std::string& name);

struct ResourceEstimate {
  ResourceFormula formula_id;
  std::map<std::string, double> inputs;
  double value = 0.0;
  bool asymptotic = false;
};

// Evaluates one formula on named inputs. Throws MissingInput for an absent or
// non-finite input, NegativeInput for a negative one (or nonpositive where
// positivity is required, e.g. eps).
ResourceEstimate estimate(ResourceFormula formula, const std::map<std::string, double>& inputs);

// Left Riemann sum sum_{k=0}^{r-1} d^2 ||H(k t/r)||max t/r.
double riemann_query_total(const TimeDepHamiltonian& h, int d, double t, int r);

}  // namespace ql1sim
