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

#include "ql1sim/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ql1sim {

namespace {

std::vector<double> sanitize_discontinuities(std::vector<double> disc, double t_end) {
  std::vector<double> out;
  for (double d : disc) {
    if (d > 0.0 && d < t_end) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_shape(int dim, double t_end) {
  if (dim < 1) throw ConfigError("Hamiltonian dimension must be >= 1");
  if (!(t_end > 0.0)) throw ConfigError("Hamiltonian domain must have t_end > 0");
}

}  // namespace

TimeDepHamiltonian TimeDepHamiltonian::dense(int dim, double t_end, EvalFn eval,
                                             std::vector<double> discontinuities) {
  check_shape(dim, t_end);
  if (!eval) throw ConfigError("dense model needs an evaluation function");
  TimeDepHamiltonian h;
  h.dim_ = dim;
  h.t_end_ = t_end;
  h.model_ = HamModel::Dense;
  h.dense_eval_ = std::move(eval);
  h.discontinuities_ = sanitize_discontinuities(std::move(discontinuities), t_end);
  return h;
}

TimeDepHamiltonian TimeDepHamiltonian::linear_combination(int dim, double t_end,
                                                          std::vector<EvalFn> terms,
                                                          std::vector<double> discontinuities) {
  check_shape(dim, t_end);
  if (terms.empty()) throw ConfigError("linear-combination model needs at least one term");
  TimeDepHamiltonian h;
  h.dim_ = dim;
  h.t_end_ = t_end;
  h.model_ = HamModel::LinearCombination;
  h.terms_ = std::move(terms);
  h.discontinuities_ = sanitize_discontinuities(std::move(discontinuities), t_end);
  return h;
}

TimeDepHamiltonian TimeDepHamiltonian::lcu(int dim, double t_end, std::vector<CoeffFn> coeffs,
                                           std::vector<Matrix> unitaries,
                                           std::vector<double> discontinuities) {
  check_shape(dim, t_end);
  if (coeffs.empty() || coeffs.size() != unitaries.size()) {
    throw DimensionMismatch("lcu model needs matching, nonempty coefficient and unitary lists");
  }
  for (const Matrix& u : unitaries) {
    if (u.rows() != dim || u.cols() != dim) {
      throw DimensionMismatch("lcu unitary has wrong dimension");
    }
    require_hermitian(u, 1e-12 * std::max(1.0, max_norm(u)), "lcu unitary");
    if (unitarity_defect(u) > 1e-12) {
      throw ConfigError("lcu term is not unitary within 1e-12");
    }
  }
  TimeDepHamiltonian h;
  h.dim_ = dim;
  h.t_end_ = t_end;
  h.model_ = HamModel::Lcu;
  h.coeffs_ = std::move(coeffs);
  h.unitaries_ = std::move(unitaries);
  h.discontinuities_ = sanitize_discontinuities(std::move(discontinuities), t_end);
  // Coefficients must be nonnegative; spot-check on a uniform grid.
  for (int g = 0; g <= 256; ++g) {
    const double tau = t_end * g / 256.0;
    for (std::size_t l = 0; l < h.coeffs_.size(); ++l) {
      if (h.coeffs_[l](tau) < -1e-12) {
        throw NegativeInput("lcu coefficient is negative at sampled tau");
      }
    }
  }
  return h;
}

void TimeDepHamiltonian::check_domain(double tau) const {
  // Tiny slack absorbs roundoff from quadrature node arithmetic.
  const double slack = 1e-12 * std::max(1.0, t_end_);
  if (tau < -slack || tau > t_end_ + slack) {
    throw TimeOutOfDomain("tau=" + std::to_string(tau) + " outside [0, " +
                          std::to_string(t_end_) + "]");
  }
}

Matrix TimeDepHamiltonian::eval(double tau) const {
  check_domain(tau);
  tau = std::clamp(tau, 0.0, t_end_);
  Matrix out;
  switch (model_) {
    case HamModel::Dense:
      out = dense_eval_(tau);
      break;
    case HamModel::LinearCombination: {
      out = Matrix::Zero(dim_, dim_);
      for (const auto& t : terms_) out += t(tau);
      break;
    }
    case HamModel::Lcu: {
      out = Matrix::Zero(dim_, dim_);
      for (std::size_t l = 0; l < coeffs_.size(); ++l) {
        out += coeffs_[l](tau) * unitaries_[l];
      }
      break;
    }
  }
  if (out.rows() != dim_ || out.cols() != dim_) {
    throw DimensionMismatch("Hamiltonian evaluation returned wrong dimensions");
  }
  require_hermitian(out, 1e-12 * std::max(1.0, max_norm(out)), "H(tau)");
  return out;
}

int TimeDepHamiltonian::term_count() const {
  switch (model_) {
    case HamModel::Dense:
      return 1;
    case HamModel::LinearCombination:
      return static_cast<int>(terms_.size());
    case HamModel::Lcu:
      return static_cast<int>(coeffs_.size());
  }
  return 1;
}

Matrix TimeDepHamiltonian::term(int l, double tau) const {
  check_domain(tau);
  tau = std::clamp(tau, 0.0, t_end_);
  switch (model_) {
    case HamModel::Dense:
      if (l != 0) throw OutOfRange("dense model has a single term");
      return eval(tau);
    case HamModel::LinearCombination:
      if (l < 0 || l >= static_cast<int>(terms_.size())) throw OutOfRange("term index");
      return terms_[l](tau);
    case HamModel::Lcu:
      if (l < 0 || l >= static_cast<int>(coeffs_.size())) throw OutOfRange("term index");
      return coeffs_[l](tau) * unitaries_[l];
  }
  throw OutOfRange("term index");
}

double TimeDepHamiltonian::coeff(int l, double tau) const {
  if (model_ != HamModel::Lcu) throw ConfigError("coefficients exist only for the lcu model");
  if (l < 0 || l >= static_cast<int>(coeffs_.size())) throw OutOfRange("coefficient index");
  check_domain(tau);
  return coeffs_[l](std::clamp(tau, 0.0, t_end_));
}

const Matrix& TimeDepHamiltonian::unitary(int l) const {
  if (model_ != HamModel::Lcu) throw ConfigError("unitaries exist only for the lcu model");
  if (l < 0 || l >= static_cast<int>(unitaries_.size())) throw OutOfRange("unitary index");
  return unitaries_[l];
}

TimeDepHamiltonian TimeDepHamiltonian::scaled(double factor) const {
  TimeDepHamiltonian h = *this;
  switch (model_) {
    case HamModel::Dense: {
      auto base = dense_eval_;
      h.dense_eval_ = [base, factor](double tau) { return Matrix(factor * base(tau)); };
      break;
    }
    case HamModel::LinearCombination: {
      for (auto& t : h.terms_) {
        auto base = t;
        t = [base, factor](double tau) { return Matrix(factor * base(tau)); };
      }
      break;
    }
    case HamModel::Lcu: {
      if (factor >= 0.0) {
        for (auto& c : h.coeffs_) {
          auto base = c;
          c = [base, factor](double tau) { return factor * base(tau); };
        }
      } else {
        // Negative factors would break the nonnegative-coefficient contract;
        // degrade to a dense wrapper.
        auto self = *this;
        return dense(dim_, t_end_,
                     [self, factor](double tau) { return Matrix(factor * self.eval(tau)); },
                     discontinuities_);
      }
      break;
    }
  }
  return h;
}

}  // namespace ql1sim
