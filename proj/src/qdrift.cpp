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

#include "ql1sim/qdrift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "ql1sim/errors.hpp"
#include "ql1sim/norms.hpp"
#include "ql1sim/quadrature.hpp"
#include "ql1sim/rng.hpp"

namespace ql1sim {
namespace {

constexpr double kExceptionalBand = 1e-14;
constexpr double kChannelTol = 1e-8;
constexpr int kMaxQuadPoints = 8192;

std::vector<double> smooth_pieces(const std::vector<double>& cuts, double a, double b) {
  std::vector<double> edges;
  edges.push_back(a);
  for (double c : cuts)
    if (c > a && c < b) edges.push_back(c);
  edges.push_back(b);
  return edges;
}

// Tabulates any nonnegative profile into a SamplingPlan.
SamplingPlan plan_from_profile(std::function<double(double)> profile,
                               const std::vector<double>& cuts, double a, double b,
                               int grid_size) {
  if (grid_size < 16) throw OutOfRange("plan grid needs at least 16 panels");
  if (!(b > a)) throw InvalidBound("plan needs a < b");
  SamplingPlan plan;
  plan.a = a;
  plan.b = b;
  plan.grid.reserve(grid_size + 8);
  for (int i = 0; i <= grid_size; ++i)
    plan.grid.push_back(a + (b - a) * static_cast<double>(i) / grid_size);
  for (double c : cuts)
    if (c > a && c < b) plan.grid.push_back(c);
  std::sort(plan.grid.begin(), plan.grid.end());
  plan.grid.erase(std::unique(plan.grid.begin(), plan.grid.end()), plan.grid.end());
  plan.grid.front() = a;
  plan.grid.back() = b;

  const int panels = static_cast<int>(plan.grid.size()) - 1;
  std::vector<double> node_vals(plan.grid.size());
  for (std::size_t i = 0; i < plan.grid.size(); ++i) node_vals[i] = profile(plan.grid[i]);
  std::vector<double> panel_peak(panels);
  plan.cdf.assign(plan.grid.size(), 0.0);
  double peak = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = plan.grid[i], hi = plan.grid[i + 1];
    // One-sided endpoint evaluations: at a declared cut the profile may jump,
    // and each panel must integrate its own side's limit.
    const double nudge = 1e-12 * (hi - lo);
    const double f_lo = profile(lo + nudge), f_hi = profile(hi - nudge);
    const double mid = profile(0.5 * (lo + hi));
    const double mass = (hi - lo) / 6.0 * (f_lo + 4.0 * mid + f_hi);
    plan.cdf[i + 1] = plan.cdf[i] + mass;
    panel_peak[i] = std::max({f_lo, mid, f_hi, node_vals[i], node_vals[i + 1]});
    peak = std::max(peak, panel_peak[i]);
  }
  plan.total_l1 = plan.cdf.back();
  plan.peak = peak;
  if (plan.total_l1 <= 0.0)
    throw ZeroHamiltonian("profile has zero L1 mass; nothing to sample");
  plan.density.resize(plan.grid.size());
  for (std::size_t i = 0; i < plan.grid.size(); ++i)
    plan.density[i] = node_vals[i] / plan.total_l1;
  for (auto& c : plan.cdf) c /= plan.total_l1;
  plan.cdf.front() = 0.0;
  plan.cdf.back() = 1.0;
  plan.exceptional.resize(panels);
  for (int i = 0; i < panels; ++i)
    plan.exceptional[i] = panel_peak[i] < kExceptionalBand * peak;
  plan.profile = std::move(profile);
  return plan;
}

int panel_index(const std::vector<double>& grid, double tau) {
  auto it = std::upper_bound(grid.begin(), grid.end(), tau);
  long i = (it - grid.begin()) - 1;
  i = std::clamp<long>(i, 0, static_cast<long>(grid.size()) - 2);
  return static_cast<int>(i);
}

// Doubles quad_points until the channel's superoperator stabilizes.
template <class Builder>
MixedUnitaryChannel converge_channel(Builder&& build, int quad_points) {
  if (quad_points < 8) throw OutOfRange("channel quadrature needs at least 8 points");
  MixedUnitaryChannel coarse = build(quad_points);
  Matrix coarse_s = Superoperator::from_channel(coarse).s;
  for (int q = quad_points * 2; q <= kMaxQuadPoints; q *= 2) {
    MixedUnitaryChannel fine = build(q);
    Matrix fine_s = Superoperator::from_channel(fine).s;
    if (spectral_norm(fine_s - coarse_s) < kChannelTol) return fine;
    coarse = std::move(fine);
    coarse_s = std::move(fine_s);
  }
  throw NoConvergence("channel quadrature did not stabilize below 1e-8");
}

}  // namespace

double SamplingPlan::density_at(double tau) const { return profile(tau) / total_l1; }

bool SamplingPlan::is_exceptional(double tau) const {
  if (tau < a || tau > b) throw OutOfRange("time outside the plan window");
  return exceptional[panel_index(grid, tau)];
}

SamplingPlan build_plan(const TimeDepHamiltonian& h, const std::function<double(double)>& bound,
                        double a, double b, int grid_size) {
  h.check_domain(a);
  h.check_domain(b);
  std::function<double(double)> profile;
  if (bound) {
    // The bound must dominate the actual norm curve wherever we can see.
    const int probes = std::max(grid_size, 16);
    double scale = 0.0;
    for (int i = 0; i <= 2 * probes; ++i) {
      const double tau = a + (b - a) * static_cast<double>(i) / (2 * probes);
      const double norm = spectral_norm(h.eval(tau));
      scale = std::max(scale, norm);
      if (bound(tau) < norm - 1e-12 * std::max(1.0, scale))
        throw InvalidBound("supplied bound falls below the Hamiltonian norm");
    }
    profile = bound;
  } else {
    TimeDepHamiltonian copy = h;
    profile = [copy](double tau) { return spectral_norm(copy.eval(tau)); };
  }
  return plan_from_profile(std::move(profile), h.discontinuities(), a, b, grid_size);
}

double sample_time(const SamplingPlan& plan, double u) {
  if (u < 0.0 || u > 1.0) throw OutOfRange("inverse-CDF argument must lie in [0, 1]");
  if (u >= 1.0) return plan.b;
  auto it = std::upper_bound(plan.cdf.begin(), plan.cdf.end(), u);
  long i = (it - plan.cdf.begin()) - 1;
  i = std::clamp<long>(i, 0, static_cast<long>(plan.cdf.size()) - 2);
  const double c0 = plan.cdf[i], c1 = plan.cdf[i + 1];
  if (c1 <= c0) return plan.grid[i];
  const double frac = (u - c0) / (c1 - c0);
  return plan.grid[i] + frac * (plan.grid[i + 1] - plan.grid[i]);
}

Matrix qdrift_unitary(const TimeDepHamiltonian& h, const SamplingPlan& plan, double tau) {
  const double lam = plan.profile(tau);
  if (plan.is_exceptional(tau) || lam <= kExceptionalBand * plan.peak)
    return identity(h.dim());
  return expm_hermitian(h.eval(tau), Complex(0.0, -plan.total_l1 / lam));
}

MixedUnitaryChannel exact_channel(const TimeDepHamiltonian& h, const SamplingPlan& plan,
                                  int quad_points) {
  const auto edges = smooth_pieces(h.discontinuities(), plan.a, plan.b);
  auto build = [&](int q) {
    RealVector nodes, weights;
    gauss_legendre(q, nodes, weights);
    std::vector<double> w;
    std::vector<Matrix> u;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
      const double mid = 0.5 * (edges[p] + edges[p + 1]);
      const double half = 0.5 * (edges[p + 1] - edges[p]);
      for (int i = 0; i < q; ++i) {
        const double tau = mid + half * nodes[i];
        w.push_back(weights[i] * half * plan.density_at(tau));
        u.push_back(qdrift_unitary(h, plan, tau));
      }
    }
    double total = 0.0;
    for (double x : w) total += x;
    if (total <= 0.0) throw ZeroHamiltonian("channel quadrature has zero weight");
    for (double& x : w) x /= total;
    return MixedUnitaryChannel(std::move(w), std::move(u));
  };
  return converge_channel(build, quad_points);
}

Segmentation segment_equal_l1(const SamplingPlan& plan, int r) {
  if (r < 1) throw OutOfRange("segmentation needs r >= 1");
  Segmentation seg;
  seg.breakpoints.resize(r + 1);
  seg.breakpoints[0] = plan.a;
  seg.breakpoints[r] = plan.b;
  for (int j = 1; j < r; ++j)
    seg.breakpoints[j] = sample_time(plan, static_cast<double>(j) / r);
  for (int j = 0; j < r; ++j)
    if (!(seg.breakpoints[j + 1] > seg.breakpoints[j]))
      throw NumericError("equal-mass breakpoints failed to increase strictly");
  return seg;
}

std::vector<Matrix> run_qdrift(const TimeDepHamiltonian& h, const SamplingPlan& plan, int r,
                               std::uint64_t seed, int trials) {
  if (r < 1) throw OutOfRange("run needs r >= 1");
  if (trials < 1) throw OutOfRange("run needs trials >= 1");
  std::vector<Matrix> out;
  out.reserve(trials);
  for (int trial = 0; trial < trials; ++trial) {
    Matrix u = identity(h.dim());
    for (int j = 0; j < r; ++j) {
      auto rng = SplitMix64::keyed(seed, {static_cast<std::uint64_t>(trial),
                                          static_cast<std::uint64_t>(j)});
      const double ulocal = rng.next_double();
      const double tau = sample_time(plan, (static_cast<double>(j) + ulocal) / r);
      const double lam = plan.profile(tau);
      if (!plan.is_exceptional(tau) && lam > kExceptionalBand * plan.peak) {
        // Segment-restricted density is r times the global one.
        u = expm_hermitian(h.eval(tau), Complex(0.0, -plan.total_l1 / (lam * r))) * u;
      }
    }
    out.push_back(std::move(u));
  }
  return out;
}

JointPlan build_joint_plan(const TimeDepHamiltonian& h, double a, double b, int grid_size) {
  if (h.model() == HamModel::Dense)
    throw OutOfRange("joint plan needs a decomposed (lc or lcu) Hamiltonian");
  h.check_domain(a);
  h.check_domain(b);
  JointPlan jp;
  const int terms = h.term_count();
  for (int l = 0; l < terms; ++l) {
    TimeDepHamiltonian copy = h;
    auto profile = [copy, l](double tau) { return spectral_norm(copy.term(l, tau)); };
    SamplingPlan plan;
    try {
      plan = plan_from_profile(profile, h.discontinuities(), a, b, grid_size);
    } catch (const ZeroHamiltonian&) {
      throw ZeroTerm("joint plan term has zero L1 mass");
    }
    jp.masses.push_back(plan.total_l1);
    jp.total += plan.total_l1;
    jp.term_plans.push_back(std::move(plan));
  }
  if (jp.total <= 0.0) throw ZeroHamiltonian("all terms have zero L1 mass");
  return jp;
}

std::pair<int, double> sample_joint(const JointPlan& plan, double u_term, double u_time) {
  if (u_term < 0.0 || u_term > 1.0) throw OutOfRange("term draw must lie in [0, 1]");
  const double target = u_term * plan.total;
  double cum = 0.0;
  int l = 0;
  for (; l + 1 < static_cast<int>(plan.masses.size()); ++l) {
    cum += plan.masses[l];
    if (cum > target) break;
  }
  return {l, sample_time(plan.term_plans[l], u_time)};
}

MixedUnitaryChannel exact_channel_joint(const TimeDepHamiltonian& h, const JointPlan& plan,
                                        int quad_points) {
  const int terms = h.term_count();
  auto build = [&](int q) {
    RealVector nodes, weights;
    gauss_legendre(q, nodes, weights);
    std::vector<double> w;
    std::vector<Matrix> u;
    for (int l = 0; l < terms; ++l) {
      const SamplingPlan& tp = plan.term_plans[l];
      const auto edges = smooth_pieces(h.discontinuities(), tp.a, tp.b);
      for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double mid = 0.5 * (edges[p] + edges[p + 1]);
        const double half = 0.5 * (edges[p + 1] - edges[p]);
        for (int i = 0; i < q; ++i) {
          const double tau = mid + half * nodes[i];
          const double lam = tp.profile(tau);
          w.push_back(weights[i] * half * lam / plan.total);
          if (lam <= kExceptionalBand * tp.peak)
            u.push_back(identity(h.dim()));
          else
            u.push_back(expm_hermitian(h.term(l, tau), Complex(0.0, -plan.total / lam)));
        }
      }
    }
    double total = 0.0;
    for (double x : w) total += x;
    if (total <= 0.0) throw ZeroHamiltonian("channel quadrature has zero weight");
    for (double& x : w) x /= total;
    return MixedUnitaryChannel(std::move(w), std::move(u));
  };
  return converge_channel(build, quad_points);
}

Superoperator segmented_superoperator(const TimeDepHamiltonian& h,
                                      const std::function<double(double)>& bound,
                                      const Segmentation& seg, int quad_points, int grid_size) {
  Superoperator s = Superoperator::identity(h.dim());
  for (int j = 0; j < seg.segments(); ++j) {
    SamplingPlan plan =
        build_plan(h, bound, seg.breakpoints[j], seg.breakpoints[j + 1], grid_size);
    s = s.then(Superoperator::from_channel(exact_channel(h, plan, quad_points)));
  }
  return s;
}

PiecewiseHamiltonian::PiecewiseHamiltonian(TimeDepHamiltonian source, std::vector<Piece> pieces,
                                           double t)
    : source_(std::move(source)), pieces_(std::move(pieces)), t_(t) {
  if (pieces_.empty() || t_ <= 0.0) throw ConfigError("piecewise Hamiltonian needs pieces");
  const double slack = 1e-12 * std::max(1.0, t_);
  if (std::abs(pieces_.front().lo) > slack || std::abs(pieces_.back().hi - t_) > slack)
    throw ConfigError("pieces must cover [0, t]");
  for (std::size_t k = 0; k + 1 < pieces_.size(); ++k)
    if (std::abs(pieces_[k].hi - pieces_[k + 1].lo) > slack)
      throw ConfigError("pieces must be contiguous");
  for (const auto& p : pieces_)
    if (!(p.dilation > 0.0) || p.term < 0 || p.term >= source_.term_count())
      throw ConfigError("piece has invalid term or dilation");
}

Matrix PiecewiseHamiltonian::eval(double tau) const {
  if (tau < -1e-12 * t_ || tau > t_ * (1.0 + 1e-12))
    throw TimeOutOfDomain("piecewise Hamiltonian evaluated outside [0, t]");
  std::size_t k = 0;
  for (; k + 1 < pieces_.size(); ++k)
    if (tau < pieces_[k].hi) break;
  const Piece& p = pieces_[k];
  double sigma = (tau - p.lo) / p.dilation;
  sigma = std::clamp(sigma, 0.0, source_.t_end());
  return source_.term(p.term, sigma) / p.dilation;
}

TimeDepHamiltonian PiecewiseHamiltonian::hamiltonian() const {
  std::vector<double> cuts;
  for (std::size_t k = 0; k + 1 < pieces_.size(); ++k) cuts.push_back(pieces_[k].hi);
  PiecewiseHamiltonian copy = *this;
  return TimeDepHamiltonian::dense(
      source_.dim(), t_, [copy](double tau) { return copy.eval(tau); }, cuts);
}

PiecewiseHamiltonian universal_reduction(const TimeDepHamiltonian& h, double t) {
  if (h.model() == HamModel::Dense)
    throw OutOfRange("universality reduction needs a decomposed Hamiltonian");
  h.check_domain(t);
  if (!(t > 0.0)) throw OutOfRange("reduction horizon must be positive");
  const int terms = h.term_count();
  std::vector<double> masses(terms);
  double total = 0.0;
  for (int l = 0; l < terms; ++l) {
    // Guard the nonvanishing precondition before integrating. An isolated zero
    // is tolerated; a whole panel below the exceptional band is not.
    constexpr int kPanels = 512;
    std::vector<double> samples(2 * kPanels + 1);
    double term_peak = 0.0;
    for (int i = 0; i <= 2 * kPanels; ++i) {
      samples[i] = spectral_norm(h.term(l, t * static_cast<double>(i) / (2 * kPanels)));
      term_peak = std::max(term_peak, samples[i]);
    }
    if (term_peak <= 0.0) throw ZeroTerm("reduction term is identically zero");
    for (int i = 0; i < kPanels; ++i) {
      const double panel_max =
          std::max({samples[2 * i], samples[2 * i + 1], samples[2 * i + 2]});
      if (panel_max < kExceptionalBand * term_peak)
        throw ZeroTerm("reduction term vanishes on a panel");
    }
    masses[l] = adaptive_simpson(
        [&](double tau) { return spectral_norm(h.term(l, tau)); }, 0.0, t, 1e-12,
        h.discontinuities());
    total += masses[l];
  }
  std::vector<PiecewiseHamiltonian::Piece> pieces(terms);
  double offset = 0.0;
  for (int l = 0; l < terms; ++l) {
    pieces[l].lo = offset;
    pieces[l].term = l;
    pieces[l].dilation = masses[l] / total;
    offset += pieces[l].dilation * t;
    pieces[l].hi = offset;
  }
  pieces.back().hi = t;
  PiecewiseHamiltonian g(h, std::move(pieces), t);

  // Build-time checks of the reduction identities.
  const auto gh = g.hamiltonian();
  const double g_l1 = time_l1_norm(gh, NormKind::Spectral, 0.0, t, 1e-10);
  if (std::abs(g_l1 - total) > 1e-8 * std::max(1.0, total))
    throw NumericError("reduction norm identity violated");
  Matrix lhs = average_hamiltonian(gh, t, 1e-10) * t;
  Matrix rhs = Matrix::Zero(h.dim(), h.dim());
  for (int l = 0; l < terms; ++l)
    rhs += adaptive_simpson_matrix([&](double tau) { return h.term(l, tau); }, 0.0, t, 1e-10,
                                   h.discontinuities());
  if (max_norm(lhs - rhs) > 1e-8 * std::max(1.0, max_norm(rhs)))
    throw NumericError("reduction integral identity violated");
  return g;
}

Matrix average_hamiltonian(const TimeDepHamiltonian& h, double t, double tol) {
  if (!(t > 0.0)) throw OutOfRange("averaging window must be positive");
  h.check_domain(t);
  Matrix m = adaptive_simpson_matrix([&](double tau) { return h.eval(tau); }, 0.0, t, tol,
                                     h.discontinuities());
  return hermitize(m / t);
}

double discrete_qdrift_bound(const std::vector<double>& term_norms,
                             const std::vector<double>& probs, double t) {
  if (term_norms.size() != probs.size() || term_norms.empty())
    throw DimensionMismatch("norms and probabilities must pair up");
  double psum = 0.0, nsum = 0.0, frac = 0.0;
  for (std::size_t l = 0; l < probs.size(); ++l) {
    if (probs[l] < -1e-12) throw ConfigError("probabilities must be nonnegative");
    if (term_norms[l] < 0.0) throw NegativeInput("term norms must be nonnegative");
    psum += probs[l];
    nsum += term_norms[l];
    if (term_norms[l] > 0.0) {
      if (probs[l] <= 0.0) return std::numeric_limits<double>::infinity();
      frac += term_norms[l] * term_norms[l] / probs[l];
    }
  }
  if (std::abs(psum - 1.0) > 1e-10) throw ConfigError("probabilities must sum to 1");
  return 2.0 * t * t * (frac + nsum * nsum);
}

}  // namespace ql1sim
