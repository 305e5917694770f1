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

#include <cstdint>
#include <vector>

#include "ql1sim/linalg.hpp"

namespace ql1sim {

class DensityMatrix {
 public:
  // Validates Hermiticity, unit trace (1e-10) and eigenvalues >= -1e-10.
  explicit DensityMatrix(Matrix rho);
  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix maximally_mixed(int dim);

  const Matrix& matrix() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }

 private:
  Matrix rho_;
};

// Finite mixture of unitary conjugations: rho -> sum_k w_k U_k rho U_k^dagger.
struct MixedUnitaryChannel {
  std::vector<double> weights;
  std::vector<Matrix> unitaries;

  // Validates: nonempty, equal dims, weights nonnegative and summing to 1
  // within 1e-10, each unitary with ||U^dagger U - I||max <= 1e-10.
  MixedUnitaryChannel(std::vector<double> w, std::vector<Matrix> u);
  int dim() const { return static_cast<int>(unitaries.front().rows()); }
  static MixedUnitaryChannel single(const Matrix& u);
};

DensityMatrix apply_channel(const MixedUnitaryChannel& c, const DensityMatrix& rho);

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Column-major-vec matrix representation of a channel: vec(rho') = s * vec(rho).
// Lets compositions of mixed-unitary channels stay d^2 x d^2 instead of
// multiplying out their Kraus ensembles.
struct Superoperator {
  int dim = 0;
  Matrix s;  // d^2 x d^2

  static Superoperator identity(int dim);
  static Superoperator from_channel(const MixedUnitaryChannel& c);
  Matrix apply(const Matrix& rho) const;
  Superoperator then(const Superoperator& next) const;  // this first, then next
};

// Lower bound on the diamond distance ||A - B||_diamond: the best value of
// ||((A-B) (x) Id)(|psi><psi|)||_1 over the maximally entangled input and
// `restarts` random pure inputs, each refined by coordinate ascent.
// A guaranteed lower bound; deterministic given seed; monotone in restarts.
double diamond_lower_bound(const Superoperator& a, const Superoperator& b, int restarts,
                           std::uint64_t seed);
double diamond_lower_bound(const MixedUnitaryChannel& a, const MixedUnitaryChannel& b,
                           int restarts, std::uint64_t seed);

inline constexpr int kDefaultDiamondRestarts = 16;

}  // namespace ql1sim
