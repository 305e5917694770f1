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

#include "ql1sim/hamiltonian.hpp"
#include "ql1sim/norms.hpp"

namespace ql1sim {

// The cumulative-norm clock s = f(t): a tabulated, strictly increasing map
// from physical time to integrated norm, with a monotone within-panel
// quadratic interpolant (linear density between nodes).
class Clock {
 public:
  Clock(std::vector<double> nodes, std::vector<double> node_values,
        std::vector<double> node_density, std::function<double(double)> profile);

  double t_end() const { return nodes_.back(); }
  double s_end() const { return values_.back(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }

  double value(double t) const;            // f(t)
  double profile_at(double t) const;       // the norm curve the clock integrates
  double invert(double varsigma) const;    // f^{-1}, bisection to 1e-10 * s_end

 private:
  std::vector<double> nodes_, values_, density_;
  std::function<double(double)> profile_;
};

inline constexpr int kDefaultClockGrid = 4096;

// Tabulates f(t) = integral of the norm profile (or a caller-supplied upper
// bound of it) on a uniform grid refined once where the profile changes fast.
// Throws NonPositiveNorm where the profile is not strictly positive.
Clock build_clock(const TimeDepHamiltonian& h, NormKind kind,
                  const std::function<double(double)>& bound, int grid_size = kDefaultClockGrid);

double invert_clock(const Clock& clock, double varsigma);

// H~(s) = H(f^{-1}(s)) / profile(f^{-1}(s)) on [0, s_end]: unit norm when the
// clock integrates the exact norm, norm <= 1 when built from an upper bound.
TimeDepHamiltonian rescaled_hamiltonian(const TimeDepHamiltonian& h, const Clock& clock);

}  // namespace ql1sim
