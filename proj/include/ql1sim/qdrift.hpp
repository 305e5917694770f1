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
#include <functional>
#include <utility>
#include <vector>

#include "ql1sim/hamiltonian.hpp"
#include "ql1sim/metrics.hpp"

namespace ql1sim {

// Importance-sampling plan for the continuous-time channel: tabulated density
// p = profile/total_l1 with its CDF on a refined grid, plus the exact profile
// for pointwise evaluation. The profile is the spectral-norm curve of H, or a
// caller-supplied upper bound of it.
struct SamplingPlan {
  double a = 0.0, b = 0.0;
  std::vector<double> grid;          // sorted nodes, grid.front()=a, grid.back()=b
  std::vector<double> density;       // p at nodes (nonnegative)
  std::vector<double> cdf;           // per node; cdf.front()=0, cdf.back()=1
  std::vector<bool> exceptional;     // per panel: profile below 1e-14 * peak
  double total_l1 = 0.0;             // integral of the profile over [a, b]
  double peak = 0.0;                 // largest profile value seen on the grid
  std::function<double(double)> profile;  // unnormalized profile, exact

  double density_at(double tau) const;  // profile(tau)/total_l1
  bool is_exceptional(double tau) const;
};

// Equal-L1-mass breakpoints t_0 = a < t_1 < ... < t_r = b.
struct Segmentation {
  std::vector<double> breakpoints;
  int segments() const { return static_cast<int>(breakpoints.size()) - 1; }
};

// The piecewise single-term Hamiltonian of the universality reduction:
// piece l occupies an interval of length p_l * t and evaluates to
// H_l((tau - offset)/p_l) / p_l.
class PiecewiseHamiltonian {
 public:
  struct Piece {
    double lo = 0.0, hi = 0.0;
    int term = 0;
    double dilation = 0.0;  // marginal p_l
  };

  PiecewiseHamiltonian(TimeDepHamiltonian source, std::vector<Piece> pieces, double t);
  const std::vector<Piece>& pieces() const { return pieces_; }
  double t() const { return t_; }
  Matrix eval(double tau) const;
  // Dense-model view on [0, t] with piece boundaries as discontinuities.
  TimeDepHamiltonian hamiltonian() const;

 private:
  TimeDepHamiltonian source_;
  std::vector<Piece> pieces_;
  double t_;
};

inline constexpr int kDefaultPlanGrid = 4096;

// Tabulates the density profile/total on a refined grid (grid_size panels plus
// declared discontinuities), with composite-Simpson CDF. Panels whose profile
// stays below 1e-14 * peak are marked exceptional. `bound`, when non-null, is
// validated against the computed spectral norm on the grid and then used as
// the profile.
SamplingPlan build_plan(const TimeDepHamiltonian& h, const std::function<double(double)>& bound,
                        double a, double b, int grid_size = kDefaultPlanGrid);

// Inverse CDF by monotone piecewise-linear interpolation; u in [0, 1].
double sample_time(const SamplingPlan& plan, double u);

// exp(-i H(tau) / p(tau)), or the identity on the exceptional set.
Matrix qdrift_unitary(const TimeDepHamiltonian& h, const SamplingPlan& plan, double tau);

// Gauss-Legendre discretization of the continuous channel
// rho -> integral p(tau) e^{-iH(tau)/p(tau)} rho e^{+iH(tau)/p(tau)} dtau,
// quad_points nodes per smooth piece, doubled until stable below 1e-8.
MixedUnitaryChannel exact_channel(const TimeDepHamiltonian& h, const SamplingPlan& plan,
                                  int quad_points);

// Breakpoints at inverse-CDF(j/r): per-segment L1 masses equal by construction.
Segmentation segment_equal_l1(const SamplingPlan& plan, int r);

// Monte Carlo evolution: per trial and segment, one tau drawn from the
// segment-restricted density and one unitary exp(-i H(tau)/p_seg(tau));
// returns each trial's time-ordered product. Deterministic in (seed, trial,
// segment) via counter-based streams.
std::vector<Matrix> run_qdrift(const TimeDepHamiltonian& h, const SamplingPlan& plan, int r,
                               std::uint64_t seed, int trials);

// Per-term plans for the joint (l, tau) density of an LC/LCU Hamiltonian.
struct JointPlan {
  std::vector<SamplingPlan> term_plans;
  std::vector<double> masses;  // per-term L1 masses
  double total = 0.0;          // sum of masses
};

JointPlan build_joint_plan(const TimeDepHamiltonian& h, double a, double b,
                           int grid_size = kDefaultPlanGrid);

// (term index, time) drawn from the joint density via two uniforms.
std::pair<int, double> sample_joint(const JointPlan& plan, double u_term, double u_time);

// Quadrature channel of the joint density: weights w_i Lambda_l(tau_i)/total,
// unitaries exp(-i H_l(tau_i) total / Lambda_l(tau_i)).
MixedUnitaryChannel exact_channel_joint(const TimeDepHamiltonian& h, const JointPlan& plan,
                                        int quad_points);

// Equal-L1 segment channels composed into one superoperator.
Superoperator segmented_superoperator(const TimeDepHamiltonian& h,
                                      const std::function<double(double)>& bound,
                                      const Segmentation& seg, int quad_points,
                                      int grid_size = kDefaultPlanGrid);

// The universality reduction H_1..H_L -> G with marginals p_l proportional to
// per-term L1 masses; validates the norm and integral identities at build time.
PiecewiseHamiltonian universal_reduction(const TimeDepHamiltonian& h, double t);

// (1/t) * integral of H over [0, t].
Matrix average_hamiltonian(const TimeDepHamiltonian& h, double t, double tol);

// 2 t^2 (sum_l n_l^2 / p_l + (sum_l n_l)^2) for term norms n and sampling
// probabilities p; +infinity when some p_l = 0 with n_l > 0.
double discrete_qdrift_bound(const std::vector<double>& term_norms,
                             const std::vector<double>& probs, double t);

}  // namespace ql1sim
