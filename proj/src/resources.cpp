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

#include "ql1sim/resources.hpp"

#include <cmath>

#include "ql1sim/errors.hpp"

namespace ql1sim {
namespace {

struct NamedFormula {
  ResourceFormula id;
  const char* name;
};

constexpr NamedFormula kFormulas[] = {
    {ResourceFormula::QdriftSegments, "QdriftSegments"},
    {ResourceFormula::QdriftSM, "QdriftSM"},
    {ResourceFormula::QdriftLCU, "QdriftLCU"},
    {ResourceFormula::DysonSM, "DysonSM"},
    {ResourceFormula::DysonLCU, "DysonLCU"},
    {ResourceFormula::DysonM, "DysonM"},
    {ResourceFormula::FracQueryT, "FracQueryT"},
    {ResourceFormula::FracQueryDiscrete, "FracQueryDiscrete"},
    {ResourceFormula::FracR1, "FracR1"},
    {ResourceFormula::FracS, "FracS"},
    {ResourceFormula::RiemannQueryTotal, "RiemannQueryTotal"},
    {ResourceFormula::MonteCarloSM, "MonteCarloSM"},
    {ResourceFormula::MonteCarloLCU, "MonteCarloLCU"},
};

double get(const std::map<std::string, double>& inputs, const char* name) {
  auto it = inputs.find(name);
  if (it == inputs.end() || !std::isfinite(it->second))
    throw MissingInput(std::string("formula input missing or not finite: ") + name);
  if (it->second < 0.0)
    throw NegativeInput(std::string("formula input must be nonnegative: ") + name);
  return it->second;
}

double get_positive(const std::map<std::string, double>& inputs, const char* name) {
  const double v = get(inputs, name);
  if (v <= 0.0) throw NegativeInput(std::string("formula input must be positive: ") + name);
  return v;
}

// log base 2 with the argument clamped at >= 4, so log(..) >= 2 and
// log(log(..)) >= 1.
double clog2(double x) { return std::log2(std::max(x, 4.0)); }
double log_over_loglog(double x) { return clog2(x) / std::log2(clog2(x)); }

}  // namespace

const char* formula_name(ResourceFormula f) {
  for (const auto& nf : kFormulas)
    if (nf.id == f) return nf.name;
  throw OutOfRange("unknown formula id");
}

ResourceFormula formula_from_name(const std::string& name) {
  for (const auto& nf : kFormulas)
    if (name == nf.name) return nf.id;
  throw OutOfRange("unknown formula name: " + name);
}

ResourceEstimate estimate(ResourceFormula formula, const std::map<std::string, double>& inputs) {
  ResourceEstimate est;
  est.formula_id = formula;
  est.inputs = inputs;
  est.asymptotic = true;
  switch (formula) {
    case ResourceFormula::QdriftSegments: {
      const double l1 = get(inputs, "l1");
      const double eps = get_positive(inputs, "eps");
      est.value = 4.0 * std::ceil(l1 * l1 / eps);
      est.asymptotic = false;
      break;
    }
    case ResourceFormula::QdriftSM: {
      const double d = get(inputs, "d"), l1 = get(inputs, "hmax_l1");
      const double n = get(inputs, "n"), eps = get_positive(inputs, "eps");
      const double q = d * d * l1;
      est.value = q * q * n / eps;
      break;
    }
    case ResourceFormula::QdriftLCU: {
      const double a = get(inputs, "alpha_l1_l1"), ge = get(inputs, "g_e");
      const double eps = get_positive(inputs, "eps");
      est.value = 4.0 * std::ceil(a * a / eps) * ge;
      est.asymptotic = false;
      break;
    }
    case ResourceFormula::DysonSM: {
      const double d = get(inputs, "d"), l1 = get(inputs, "hmax_l1");
      const double eps = get_positive(inputs, "eps");
      est.value = d * l1 * log_over_loglog(d * l1 / eps);
      break;
    }
    case ResourceFormula::DysonLCU: {
      const double a = get(inputs, "alpha_inf_l1"), terms = get(inputs, "L");
      const double gc = get(inputs, "g_c");
      est.value = a * terms * terms * gc;
      break;
    }
    case ResourceFormula::DysonM: {
      const double t = get_positive(inputs, "t"), alpha = get_positive(inputs, "alpha");
      const double eps = get_positive(inputs, "eps");
      const double deriv = get(inputs, "deriv_l1"), hinf = get(inputs, "hinf_inf");
      est.value = t / (alpha * eps) * (deriv / t + hinf * hinf);
      break;
    }
    case ResourceFormula::FracQueryT: {
      const double d = get(inputs, "d"), l1 = get(inputs, "hmax_l1");
      est.value = d * d * l1;
      break;
    }
    case ResourceFormula::FracQueryDiscrete: {
      const double d = get(inputs, "d"), l1 = get(inputs, "hmax_l1");
      const double eps = get_positive(inputs, "eps");
      const double t_total = d * d * l1;
      est.value = t_total * log_over_loglog(t_total / eps);
      break;
    }
    case ResourceFormula::FracR1: {
      const double deriv = get(inputs, "deriv_inf_inf"), t = get(inputs, "t");
      const double eps = get_positive(inputs, "eps");
      est.value = deriv * t * t / eps;
      break;
    }
    case ResourceFormula::FracS: {
      const double d = get(inputs, "d"), hmax = get(inputs, "hmax_inf");
      const double t = get(inputs, "t"), eps = get_positive(inputs, "eps");
      const double q = d * d * hmax * t;
      est.value = q * q / eps;
      break;
    }
    case ResourceFormula::RiemannQueryTotal: {
      const double d = get(inputs, "d"), t = get(inputs, "t");
      const double r = get_positive(inputs, "r"), sum = get(inputs, "profile_sum");
      est.value = d * d * sum * t / r;
      est.asymptotic = false;
      break;
    }
    case ResourceFormula::MonteCarloSM: {
      const double d = get(inputs, "d"), hmax = get(inputs, "hmax_inf");
      const double t = get(inputs, "t"), n = get(inputs, "n");
      const double eps = get_positive(inputs, "eps");
      const double q = d * d * hmax * t;
      est.value = q * q * n / eps;
      break;
    }
    case ResourceFormula::MonteCarloLCU: {
      const double a = get(inputs, "alpha_l1_inf"), t = get(inputs, "t");
      const double ge = get(inputs, "g_e"), eps = get_positive(inputs, "eps");
      est.value = a * t * a * t * ge / eps;
      break;
    }
  }
  return est;
}

double riemann_query_total(const TimeDepHamiltonian& h, int d, double t, int r) {
  if (r < 1) throw OutOfRange("Riemann sum needs r >= 1");
  if (d < 1) throw OutOfRange("sparsity parameter must be at least 1");
  h.check_domain(t);
  double sum = 0.0;
  for (int k = 0; k < r; ++k)
    sum += max_norm(h.eval(t * static_cast<double>(k) / r));
  return estimate(ResourceFormula::RiemannQueryTotal,
                  {{"d", static_cast<double>(d)},
                   {"t", t},
                   {"r", static_cast<double>(r)},
                   {"profile_sum", sum}})
      .value;
}

}  // namespace ql1sim
