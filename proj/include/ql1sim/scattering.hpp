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

#include <vector>

#include "ql1sim/hamiltonian.hpp"

namespace ql1sim {

inline constexpr double kBoltzmann = 1.380649e-23;      // J/K
inline constexpr double kHeliumMass = 6.6464731e-27;    // kg

// Head-on two-atom Lennard-Jones collision, reduced to a one-body problem.
struct LJParams {
  double epsilon = 10.22 * kBoltzmann;  // well depth, joules
  double r_m = 2.869e-10;               // well minimum, meters
  double mass = kHeliumMass;            // single-atom mass, kg
  double r0 = 2e-9;                     // initial separation, meters
  double v0 = 1350.0;                   // initial closing speed, m/s
};

struct Trajectory {
  std::vector<double> times;        // seconds
  std::vector<double> separations;  // meters
  std::vector<double> potentials;   // joules

  double closest_approach() const;
  double closest_approach_time() const;
  // Largest relative total-energy deviation from the initial energy.
  double energy_drift = 0.0;
  // dr/dt at the final sample; feeding it back as v0 replays the path in reverse.
  double final_velocity = 0.0;
};

// V(r) = epsilon (r_m^12/r^12 - 2 r_m^6/r^6) and its analytic radial force.
double lj_potential(double r, const LJParams& params);
double lj_force(double r, const LJParams& params);

// Velocity-Verlet integration with reduced mass m/2. Throws StepTooLarge when
// the relative energy drift exceeds 1e-6; the default step keeps the default
// collision's drift near 4.8e-7 (1e-16 lands above the bound).
Trajectory integrate_trajectory(const LJParams& params, double t_end, double dt = 5e-17);

// Toy two-level Hamiltonian driven by the trajectory: delta * Z plus
// (coupling_scale / r(tau)) * X, with the trajectory's seconds mapped onto
// [0, time_unit * t_end/1ps] internal time units (picoseconds by default).
TimeDepHamiltonian induced_hamiltonian(const Trajectory& traj, double delta,
                                       double coupling_scale, int base_dim = 2);

// ||H||inf,1 / (t * ||H||inf,inf) for the induced Hamiltonian: strictly below
// 1 for any nonconstant norm profile, far below for a collision spike.
double l1_over_linf_ratio(const TimeDepHamiltonian& h, int grid = 4096);

}  // namespace ql1sim
