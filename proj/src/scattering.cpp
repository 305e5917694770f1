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

#include "ql1sim/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "ql1sim/errors.hpp"
#include "ql1sim/norms.hpp"

namespace ql1sim {
namespace {

constexpr double kSecondsPerUnit = 1e-12;  // internal Hamiltonian time in picoseconds
constexpr double kDriftBound = 1e-6;

void validate_params(const LJParams& p) {
  if (!(p.epsilon > 0.0) || !(p.r_m > 0.0) || !(p.mass > 0.0) || !(p.r0 > 0.0))
    throw NegativeInput("Lennard-Jones parameters must be positive");
}

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  long i = std::clamp<long>((it - xs.begin()) - 1, 0, static_cast<long>(xs.size()) - 2);
  const double frac = (x - xs[i]) / (xs[i + 1] - xs[i]);
  return ys[i] + std::clamp(frac, 0.0, 1.0) * (ys[i + 1] - ys[i]);
}

}  // namespace

double Trajectory::closest_approach() const {
  return *std::min_element(separations.begin(), separations.end());
}

double Trajectory::closest_approach_time() const {
  auto it = std::min_element(separations.begin(), separations.end());
  return times[it - separations.begin()];
}

double lj_potential(double r, const LJParams& params) {
  validate_params(params);
  if (!(r > 0.0)) throw NonPositiveSeparation("separation must be positive");
  const double s6 = std::pow(params.r_m / r, 6);
  return params.epsilon * (s6 * s6 - 2.0 * s6);
}

double lj_force(double r, const LJParams& params) {
  validate_params(params);
  if (!(r > 0.0)) throw NonPositiveSeparation("separation must be positive");
  // -dV/dr = 12 eps (r_m^12/r^13 - r_m^6/r^7)
  const double s6 = std::pow(params.r_m / r, 6);
  return 12.0 * params.epsilon / r * (s6 * s6 - s6);
}

Trajectory integrate_trajectory(const LJParams& params, double t_end, double dt) {
  validate_params(params);
  if (!(params.v0 >= 0.0)) throw NegativeInput("closing speed must be nonnegative");
  if (!(dt > 0.0) || !(t_end > 0.0)) throw NegativeInput("time step and horizon must be positive");
  const double mu = params.mass / 2.0;
  const long steps = static_cast<long>(std::ceil(t_end / dt - 1e-9));
  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.separations.reserve(steps + 1);
  traj.potentials.reserve(steps + 1);

  double r = params.r0;
  double v = -params.v0;  // approaching
  double a = lj_force(r, params) / mu;
  const double e0 = 0.5 * mu * v * v + lj_potential(r, params);
  double drift = 0.0;
  traj.times.push_back(0.0);
  traj.separations.push_back(r);
  traj.potentials.push_back(lj_potential(r, params));
  for (long n = 1; n <= steps; ++n) {
    const double h = std::min(dt, t_end - (n - 1) * dt);
    r += v * h + 0.5 * a * h * h;
    if (!(r > 0.0)) throw StepTooLarge("separation collapsed; reduce the time step");
    const double a_next = lj_force(r, params) / mu;
    v += 0.5 * (a + a_next) * h;
    a = a_next;
    const double e = 0.5 * mu * v * v + lj_potential(r, params);
    drift = std::max(drift, std::abs(e - e0) / std::abs(e0));
    if (drift > kDriftBound)
      throw StepTooLarge("energy drift exceeded 1e-6; reduce the time step");
    traj.times.push_back(std::min(n * dt, t_end));
    traj.separations.push_back(r);
    traj.potentials.push_back(lj_potential(r, params));
  }
  traj.energy_drift = drift;
  traj.final_velocity = v;
  return traj;
}

TimeDepHamiltonian induced_hamiltonian(const Trajectory& traj, double delta,
                                       double coupling_scale, int base_dim) {
  if (base_dim != 2) throw DimensionMismatch("induced model is two-level");
  if (traj.times.size() < 2 || traj.times.size() != traj.separations.size())
    throw ConfigError("trajectory needs matching time and separation tables");
  for (std::size_t i = 0; i + 1 < traj.times.size(); ++i)
    if (!(traj.times[i + 1] > traj.times[i]))
      throw ConfigError("trajectory times must increase strictly");
  for (double r : traj.separations)
    if (!(r > 0.0)) throw NonPositiveSeparation("trajectory separation must stay positive");

  std::vector<double> times_units(traj.times.size());
  for (std::size_t i = 0; i < traj.times.size(); ++i)
    times_units[i] = traj.times[i] / kSecondsPerUnit;
  std::vector<double> seps = traj.separations;
  const double t_end = times_units.back();
  const Matrix z = pauli_z(), x = pauli_x();
  return TimeDepHamiltonian::dense(2, t_end, [times_units, seps, delta, coupling_scale, z,
                                              x](double tau) {
    const double r = interp(times_units, seps, tau);
    return Matrix(delta * z + (coupling_scale / r) * x);
  });
}

double l1_over_linf_ratio(const TimeDepHamiltonian& h, int grid) {
  const double l1 = time_l1_norm(h, NormKind::Spectral, 0.0, h.t_end(), 1e-9);
  const double linf = sup_norm_on_grid(h, NormKind::Spectral, grid);
  if (linf <= 0.0) throw ZeroHamiltonian("norm profile vanishes identically");
  return l1 / (h.t_end() * linf);
}

}  // namespace ql1sim
