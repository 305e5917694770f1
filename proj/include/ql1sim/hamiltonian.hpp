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

#include <functional>
#include <vector>

#include "ql1sim/linalg.hpp"

namespace ql1sim {

enum class HamModel { Dense, LinearCombination, Lcu };

// Time-dependent Hermitian generator H(tau) on [0, t_end] (dimensionless,
// hbar = 1). Three interchangeable models:
//   Dense              tau -> H(tau) directly
//   LinearCombination  H(tau) = sum_l H_l(tau), each term Hermitian
//   Lcu                H(tau) = sum_l alpha_l(tau) U_l with alpha_l >= 0 and
//                      U_l Hermitian unitaries
// Known jump points are declared up front so quadrature and stepping never
// straddle them.
class TimeDepHamiltonian {
 public:
  using EvalFn = std::function<Matrix(double)>;
  using CoeffFn = std::function<double(double)>;

  static TimeDepHamiltonian dense(int dim, double t_end, EvalFn eval,
                                  std::vector<double> discontinuities = {});
  static TimeDepHamiltonian linear_combination(int dim, double t_end, std::vector<EvalFn> terms,
                                               std::vector<double> discontinuities = {});
  static TimeDepHamiltonian lcu(int dim, double t_end, std::vector<CoeffFn> coeffs,
                                std::vector<Matrix> unitaries,
                                std::vector<double> discontinuities = {});

  // H(tau); throws TimeOutOfDomain outside [0, t_end]. The result is checked
  // Hermitian to 1e-12 relative to its max-norm.
  Matrix eval(double tau) const;

  int dim() const { return dim_; }
  double t_end() const { return t_end_; }
  HamModel model() const { return model_; }
  const std::vector<double>& discontinuities() const { return discontinuities_; }

  // Term access for the LC / LCU models.
  int term_count() const;
  Matrix term(int l, double tau) const;
  double coeff(int l, double tau) const;            // LCU only
  const Matrix& unitary(int l) const;               // LCU only

  // factor * H as a new Hamiltonian on the same domain (factor > 0 preserves
  // the model; other factors fall back to a dense wrapper).
  TimeDepHamiltonian scaled(double factor) const;

  // Throws TimeOutOfDomain unless tau lies in [0, t_end].
  void check_domain(double tau) const;

 private:
  TimeDepHamiltonian() = default;

  int dim_ = 0;
  double t_end_ = 0.0;
  HamModel model_ = HamModel::Dense;
  std::vector<double> discontinuities_;
  EvalFn dense_eval_;
  std::vector<EvalFn> terms_;
  std::vector<CoeffFn> coeffs_;
  std::vector<Matrix> unitaries_;
};

}  // namespace ql1sim
