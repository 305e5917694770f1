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

#include "ql1sim/rescaling.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ql1sim/errors.hpp"

namespace ql1sim {

Clock::Clock(std::vector<double> nodes, std::vector<double> node_values,
             std::vector<double> node_density, std::function<double(double)> profile)
    : nodes_(std::move(nodes)),
      values_(std::move(node_values)),
      density_(std::move(node_density)),
      profile_(std::move(profile)) {
  if (nodes_.size() < 2 || nodes_.size() != values_.size() || nodes_.size() != density_.size())
    throw DimensionMismatch("clock tables must pair up with at least two nodes");
  if (values_.front() != 0.0) throw ConfigError("clock must start at f(0) = 0");
  for (std::size_t i = 0; i + 1 < values_.size(); ++i)
    if (!(values_[i + 1] > values_[i]))
      throw NonPositiveNorm("clock values must increase strictly");
}

double Clock::value(double t) const {
  const double slack = 1e-12 * std::max(1.0, t_end());
  if (t < -slack || t > t_end() + slack) throw OutOfRange("time outside the clock domain");
  t = std::clamp(t, nodes_.front(), nodes_.back());
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
  long i = std::clamp<long>((it - nodes_.begin()) - 1, 0, static_cast<long>(nodes_.size()) - 2);
  const double h = nodes_[i + 1] - nodes_[i];
  const double x = t - nodes_[i];
  // Integral of the linear density interpolant: monotone because density >= 0.
  const double slope = (density_[i + 1] - density_[i]) / h;
  return values_[i] + density_[i] * x + 0.5 * slope * x * x;
}

double Clock::profile_at(double t) const { return profile_(t); }

double Clock::invert(double varsigma) const {
  const double slack = 1e-12 * std::max(1.0, s_end());
  if (varsigma < -slack || varsigma > s_end() + slack)
    throw OutOfRange("varsigma outside [0, s_end]");
  varsigma = std::clamp(varsigma, 0.0, s_end());
  if (varsigma <= 0.0) return nodes_.front();
  if (varsigma >= s_end()) return nodes_.back();
  auto it = std::upper_bound(values_.begin(), values_.end(), varsigma);
  long i = std::clamp<long>((it - values_.begin()) - 1, 0, static_cast<long>(nodes_.size()) - 2);
  double lo = nodes_[i], hi = nodes_[i + 1];
  const double target = 1e-10 * s_end();
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double v = value(mid);
    if (std::abs(v - varsigma) <= target) return mid;
    if (v < varsigma)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Clock build_clock(const TimeDepHamiltonian& h, NormKind kind,
                  const std::function<double(double)>& bound, int grid_size) {
  if (grid_size < 16) throw OutOfRange("clock grid needs at least 16 panels");
  std::function<double(double)> profile;
  if (bound) {
    TimeDepHamiltonian copy = h;
    auto b = bound;
    profile = [copy, kind, b](double t) {
      const double v = b(t);
      const double actual = norm_profile(copy, kind, t);
      if (v < actual - 1e-12 * std::max(1.0, actual))
        throw InvalidBound("clock bound falls below the Hamiltonian norm");
      return v;
    };
  } else {
    TimeDepHamiltonian copy = h;
    profile = [copy, kind](double t) { return norm_profile(copy, kind, t); };
  }

  // Base grid: uniform plus declared discontinuities.
  std::vector<double> nodes;
  for (int i = 0; i <= grid_size; ++i)
    nodes.push_back(h.t_end() * static_cast<double>(i) / grid_size);
  for (double c : h.discontinuities())
    if (c > 0.0 && c < h.t_end()) nodes.push_back(c);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  // One refinement pass: split panels where the profile moves much more than
  // average (fast-varying norm, e.g. a close-approach spike).
  std::vector<double> vals(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) vals[i] = profile(nodes[i]);
  double total_move = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) total_move += std::abs(vals[i + 1] - vals[i]);
  const double threshold = 4.0 * total_move / static_cast<double>(nodes.size() - 1);
  std::vector<double> refined;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    refined.push_back(nodes[i]);
    if (total_move > 0.0 && std::abs(vals[i + 1] - vals[i]) > threshold) {
      for (int k = 1; k < 8; ++k)
        refined.push_back(nodes[i] + (nodes[i + 1] - nodes[i]) * static_cast<double>(k) / 8);
    }
  }
  refined.push_back(nodes.back());
  nodes = std::move(refined);

  std::vector<double> density(nodes.size()), values(nodes.size(), 0.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    density[i] = profile(nodes[i]);
    if (density[i] <= 0.0) throw NonPositiveNorm("norm profile must be strictly positive");
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double lo = nodes[i], hi = nodes[i + 1];
    const double mid = profile(0.5 * (lo + hi));
    if (mid <= 0.0) throw NonPositiveNorm("norm profile must be strictly positive");
    values[i + 1] = values[i] + (hi - lo) / 6.0 * (density[i] + 4.0 * mid + density[i + 1]);
  }
  return Clock(std::move(nodes), std::move(values), std::move(density), std::move(profile));
}

double invert_clock(const Clock& clock, double varsigma) { return clock.invert(varsigma); }

TimeDepHamiltonian rescaled_hamiltonian(const TimeDepHamiltonian& h, const Clock& clock) {
  if (std::abs(clock.t_end() - h.t_end()) > 1e-12 * std::max(1.0, h.t_end()))
    throw DimensionMismatch("clock was built for a different time window");
  TimeDepHamiltonian copy = h;
  Clock clk = clock;
  std::vector<double> cuts;
  for (double c : h.discontinuities())
    if (c > 0.0 && c < h.t_end()) cuts.push_back(clock.value(c));
  return TimeDepHamiltonian::dense(
      h.dim(), clock.s_end(),
      // Explicit return type: the quotient must be materialized before the
      // temporary from eval() dies, not later inside std::function.
      [copy, clk](double varsigma) -> Matrix {
        const double t = clk.invert(varsigma);
        return copy.eval(t) / clk.profile_at(t);
      },
      cuts);
}

}  // namespace ql1sim
