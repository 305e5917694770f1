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

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ql1sim/dyson.hpp"
#include "ql1sim/errors.hpp"
#include "ql1sim/io.hpp"
#include "ql1sim/metrics.hpp"
#include "ql1sim/norms.hpp"
#include "ql1sim/propagator.hpp"
#include "ql1sim/qdrift.hpp"
#include "ql1sim/rescaling.hpp"
#include "ql1sim/resources.hpp"
#include "ql1sim/scattering.hpp"
#include "ql1sim/sparse.hpp"

namespace {

using namespace ql1sim;

int thread_cap() {
  if (const char* env = std::getenv("QL1SIM_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Index-ordered fan-out capped by QL1SIM_THREADS; results land in
// caller-indexed slots so emission order never depends on scheduling.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  const int workers = std::min(thread_cap(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex err_mu;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct InstanceChoice {
  std::string path;
  std::string builtin;
};

struct NamedInstance {
  std::string name;
  TimeDepHamiltonian h;
};

NamedInstance resolve_instance(const InstanceChoice& c) {
  if (!c.path.empty() && !c.builtin.empty())
    throw ConfigError("--instance and --builtin are mutually exclusive");
  if (!c.path.empty())
    return {std::filesystem::path(c.path).stem().string(), load_instance(c.path)};
  if (!c.builtin.empty()) return {c.builtin, builtin_instance(c.builtin)};
  throw ConfigError("pass --instance PATH or --builtin NAME");
}

void add_instance_flags(CLI::App* cmd, InstanceChoice& c) {
  cmd->add_option("--instance", c.path, "instance config file (JSON)");
  cmd->add_option("--builtin", c.builtin, "builtin instance name");
}

std::string out_file(const std::string& dir, const std::string& leaf) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / leaf).string();
}

std::string fd(double v) { return format_double(v); }

// ---------------------------------------------------------------- simulate

int cmd_simulate(const InstanceChoice& choice, double tol, const std::string& out) {
  const NamedInstance inst = resolve_instance(choice);
  const PropagatorResult res = evolve(inst.h, 0.0, inst.h.t_end(), tol);

  std::ostringstream json;
  json << "{\n"
       << "  \"instance\": \"" << inst.name << "\",\n"
       << "  \"dim\": " << inst.h.dim() << ",\n"
       << "  \"t_end\": " << fd(inst.h.t_end()) << ",\n"
       << "  \"tol\": " << fd(tol) << ",\n"
       << "  \"error_estimate\": " << fd(res.error_estimate) << ",\n"
       << "  \"steps_used\": " << res.steps_used << ",\n"
       << "  \"unitary\": " << matrix_json(res.unitary) << "\n"
       << "}\n";
  write_text_file(out_file(out, "propagator.json"), json.str());

  std::ostringstream report;
  report << "instance: " << inst.name << "\n"
         << "dim: " << inst.h.dim() << "\n"
         << "t_end: " << fd(inst.h.t_end()) << "\n"
         << "tol: " << fd(tol) << "\n"
         << "error_estimate: " << fd(res.error_estimate) << "\n"
         << "steps_used: " << res.steps_used << "\n"
         << "unitarity_defect: " << fd(unitarity_defect(res.unitary)) << "\n";
  write_text_file(out_file(out, "simulate_report.txt"), report.str());
  std::cout << "wrote " << out_file(out, "propagator.json") << " (error estimate "
            << fd(res.error_estimate) << ", " << res.steps_used << " steps)\n";
  return 0;
}

// ------------------------------------------------------------ qdrift-bench

int cmd_qdrift_bench(const InstanceChoice& choice, std::vector<int> r_list, std::uint64_t seed,
                     int trials, const std::string& out) {
  const NamedInstance inst = resolve_instance(choice);
  const TimeDepHamiltonian& h = inst.h;
  if (r_list.empty()) throw ConfigError("--r needs at least one segment count");
  for (int r : r_list)
    if (r < 1) throw ConfigError("segment counts must be positive");
  if (trials < 0) throw ConfigError("--trials must be nonnegative");

  const double t = h.t_end();
  const double l1 = time_l1_norm(h, NormKind::Spectral, 0.0, t, 1e-10);
  const Superoperator ideal =
      Superoperator::from_channel(MixedUnitaryChannel::single(evolve(h, 0.0, t, 1e-10).unitary));
  const SamplingPlan plan = build_plan(h, nullptr, 0.0, t);

  std::vector<double> dlb(r_list.size());
  parallel_for(static_cast<int>(r_list.size()), [&](int i) {
    const int r = r_list[i];
    const Segmentation seg = segment_equal_l1(plan, r);
    Superoperator channel = Superoperator::identity(h.dim());
    if (trials == 0) {
      channel = segmented_superoperator(h, nullptr, seg, 64);
    } else {
      // Monte Carlo estimate of the segmented channel from sampled products.
      const std::vector<Matrix> samples = run_qdrift(h, plan, r, seed, trials);
      channel = Superoperator::from_channel(
          MixedUnitaryChannel(std::vector<double>(samples.size(), 1.0 / samples.size()), samples));
    }
    dlb[i] = diamond_lower_bound(channel, ideal, kDefaultDiamondRestarts,
                                 seed + static_cast<std::uint64_t>(r));
  });

  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < r_list.size(); ++i) {
    rows.push_back({inst.name, std::to_string(r_list[i]), fd(l1), fd(4.0 * l1 * l1 / r_list[i]),
                    fd(dlb[i]), std::to_string(trials), std::to_string(seed)});
  }
  const std::string csv = out_file(out, "qdrift_bench.csv");
  write_csv(csv, {"instance", "r", "l1_norm", "bound", "diamond_lb", "trials", "seed"}, rows);

  write_text_file(out_file(out, "qdrift_bench.gp"),
                  "set datafile separator ','\n"
                  "set logscale xy\n"
                  "set xlabel 'segments r'\n"
                  "set ylabel 'diamond-norm distance'\n"
                  "plot 'qdrift_bench.csv' every ::1 using 2:5 with linespoints"
                  " title 'measured lower bound', \\\n"
                  "     '' every ::1 using 2:4 with lines title 'bound 4 L^2 / r'\n");
  std::cout << "wrote " << csv << "\n";
  return 0;
}

// ----------------------------------------------------------- rescale-check

int cmd_rescale_check(const InstanceChoice& choice, std::vector<int> k_list,
                      std::vector<int> m_list, const std::string& out) {
  const NamedInstance inst = resolve_instance(choice);
  const TimeDepHamiltonian& h = inst.h;
  if (k_list.empty() || m_list.empty()) throw ConfigError("--K and --M need at least one value");

  const double t = h.t_end();
  const Matrix ref = evolve(h, 0.0, t, 1e-10).unitary;
  const Clock clock = build_clock(h, NormKind::Spectral, nullptr);
  const TimeDepHamiltonian ht = rescaled_hamiltonian(h, clock);

  struct Job {
    int k, m, rescaled;
  };
  std::vector<Job> jobs;
  for (int k : k_list)
    for (int m : m_list)
      for (int rescaled : {0, 1}) jobs.push_back({k, m, rescaled});

  std::vector<double> err(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), [&](int i) {
    const DysonConfig cfg{jobs[i].k, jobs[i].m};
    const Matrix d = jobs[i].rescaled ? dyson_truncated(ht, 0.0, clock.s_end(), cfg)
                                      : dyson_truncated(h, 0.0, t, cfg);
    err[i] = spectral_norm(d - ref);
  });

  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    rows.push_back({inst.name, std::to_string(jobs[i].rescaled), std::to_string(jobs[i].k),
                    std::to_string(jobs[i].m), fd(err[i])});
  }
  const std::string csv = out_file(out, "rescale_check.csv");
  write_csv(csv, {"instance", "rescaled", "K", "M", "spectral_error"}, rows);

  write_text_file(out_file(out, "rescale_check.gp"),
                  "set datafile separator ','\n"
                  "set logscale xy\n"
                  "set xlabel 'grid size M'\n"
                  "set ylabel 'spectral error'\n"
                  "plot 'rescale_check.csv' every ::1 using 4:($2==0?$5:1/0) with points"
                  " title 'plain', \\\n"
                  "     '' every ::1 using 4:($2==1?$5:1/0) with points title 'rescaled'\n");
  std::cout << "wrote " << csv << "\n";
  return 0;
}

// --------------------------------------------------------------- decompose

int cmd_decompose(const InstanceChoice& choice, std::vector<double> gammas,
                  const std::string& out) {
  const NamedInstance inst = resolve_instance(choice);
  if (gammas.empty()) throw ConfigError("--gamma needs at least one value");
  // Decompose the generic-point snapshot H(t_end / 2).
  const Matrix a = inst.h.eval(inst.h.t_end() / 2.0);
  const int dim = static_cast<int>(a.rows());
  int sparsity = 1;
  for (int r = 0; r < dim; ++r) {
    int nnz = 0;
    for (int c = 0; c < dim; ++c)
      if (std::abs(a(r, c)) > 0.0) ++nnz;
    sparsity = std::max(sparsity, nnz);
  }
  const std::vector<OneSparseMatrix> terms = one_sparse_decompose(a, sparsity);
  Matrix resum = Matrix::Zero(dim, dim);
  for (const auto& term : terms) resum += term.dense();
  const double resum_error = max_norm(a - resum);

  std::vector<std::vector<std::string>> rows;
  for (double gamma : gammas) {
    const auto [layers, eta] = reflection_round(terms, gamma);
    Matrix rec = Matrix::Zero(dim, dim);
    for (const auto& layer : layers) rec += layer.dense();
    const double rounding_error = max_norm(a - gamma * rec);
    rows.push_back({inst.name, std::to_string(dim), std::to_string(sparsity), fd(gamma),
                    std::to_string(terms.size()), std::to_string(layers.size()),
                    std::to_string(eta), fd(resum_error), fd(rounding_error),
                    fd(std::sqrt(2.0) * gamma)});
  }
  const std::string csv = out_file(out, "decompose.csv");
  write_csv(csv,
            {"instance", "dim", "sparsity", "gamma", "terms", "layers", "eta", "resum_error",
             "rounding_error", "rounding_bound"},
            rows);
  write_text_file(out_file(out, "decompose.gp"),
                  "set datafile separator ','\n"
                  "set logscale xy\n"
                  "set xlabel 'gamma'\n"
                  "set ylabel 'max-norm error'\n"
                  "plot 'decompose.csv' every ::1 using 4:9 with linespoints"
                  " title 'rounding error', \\\n"
                  "     '' every ::1 using 4:10 with lines title 'bound sqrt(2) gamma'\n");
  std::cout << "wrote " << csv << "\n";
  return 0;
}

// --------------------------------------------------------------- resources

// L1 norm of the finite-difference derivative of the norm-rescaled generator,
// by midpoint Riemann sum away from declared jumps.
double derivative_l1_fd(const TimeDepHamiltonian& h, int n) {
  const double t = h.t_end();
  const double step = t / n;
  const double delta = step / 4.0;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lo = i * step, hi = lo + step;
    bool straddles = false;
    for (double c : h.discontinuities()) straddles = straddles || (c > lo && c < hi);
    if (straddles) continue;
    const double mid = lo + step / 2.0;
    if (mid - delta < 0.0 || mid + delta > t) continue;
    sum += spectral_norm(h.eval(mid + delta) - h.eval(mid - delta)) / (2.0 * delta) * step;
  }
  return sum;
}

int cmd_resources(const InstanceChoice& choice, double eps, std::vector<int> r_list,
                  const std::string& out) {
  const NamedInstance inst = resolve_instance(choice);
  const TimeDepHamiltonian& h = inst.h;
  if (eps <= 0.0) throw ConfigError("--eps must be positive");
  const int r = r_list.empty() ? 64 : r_list.front();
  if (r < 1) throw ConfigError("--r must be positive");

  const double t = h.t_end();
  const double tol = 1e-9;
  const double d = h.dim();
  const double n_qubits = std::max(1.0, std::ceil(std::log2(d)));
  const double l1 = time_l1_norm(h, NormKind::Spectral, 0.0, t, tol);
  const double hmax_l1 = time_l1_norm(h, NormKind::Max, 0.0, t, tol);
  const double hinf_inf = sup_norm_on_grid(h, NormKind::Spectral, 4096);
  const double hmax_inf = sup_norm_on_grid(h, NormKind::Max, 4096);
  const double deriv_inf_inf = derivative_sup_norm_fd(h, NormKind::Spectral, 4096);
  const double terms = h.model() == HamModel::Dense ? 1.0 : h.term_count();

  // Coefficient-vector norms; non-LCU instances use the single-term surrogate
  // alpha(tau) = ||H(tau)||_inf.
  double alpha_l1_l1 = l1, alpha_inf_l1 = l1, alpha_l1_inf = hinf_inf;
  if (h.model() == HamModel::Lcu) {
    alpha_l1_l1 = time_l1_norm(h, NormKind::EllOneOfCoeffs, 0.0, t, tol);
    alpha_inf_l1 = time_l1_norm(h, NormKind::EllInfOfCoeffs, 0.0, t, tol);
    alpha_l1_inf = sup_norm_on_grid(h, NormKind::EllOneOfCoeffs, 4096);
  }

  // Rescaled-generator quantities for the Dyson grid-size formula.
  const Clock clock = build_clock(h, NormKind::Spectral, nullptr);
  const TimeDepHamiltonian ht = rescaled_hamiltonian(h, clock);
  const double alpha_resc = d * sup_norm_on_grid(ht, NormKind::Max, 2048);
  const double deriv_l1 = derivative_l1_fd(ht, 2048);
  const double ht_inf = sup_norm_on_grid(ht, NormKind::Spectral, 2048);

  std::vector<ResourceEstimate> ests;
  ests.push_back(estimate(ResourceFormula::QdriftSegments, {{"l1", l1}, {"eps", eps}}));
  ests.push_back(estimate(ResourceFormula::QdriftSM,
                          {{"d", d}, {"hmax_l1", hmax_l1}, {"n", n_qubits}, {"eps", eps}}));
  ests.push_back(estimate(ResourceFormula::QdriftLCU,
                          {{"alpha_l1_l1", alpha_l1_l1}, {"g_e", 1.0}, {"eps", eps}}));
  ests.push_back(
      estimate(ResourceFormula::DysonSM, {{"d", d}, {"hmax_l1", hmax_l1}, {"eps", eps}}));
  ests.push_back(estimate(ResourceFormula::DysonLCU,
                          {{"alpha_inf_l1", alpha_inf_l1}, {"L", terms}, {"g_c", 1.0}}));
  ests.push_back(estimate(ResourceFormula::DysonM, {{"t", clock.s_end()},
                                                    {"alpha", alpha_resc},
                                                    {"eps", eps},
                                                    {"deriv_l1", deriv_l1},
                                                    {"hinf_inf", ht_inf}}));
  ests.push_back(estimate(ResourceFormula::FracQueryT, {{"d", d}, {"hmax_l1", hmax_l1}}));
  ests.push_back(estimate(ResourceFormula::FracQueryDiscrete,
                          {{"d", d}, {"hmax_l1", hmax_l1}, {"eps", eps}}));
  ests.push_back(estimate(ResourceFormula::FracR1,
                          {{"deriv_inf_inf", deriv_inf_inf}, {"t", t}, {"eps", eps}}));
  ests.push_back(estimate(ResourceFormula::FracS,
                          {{"d", d}, {"hmax_inf", hmax_inf}, {"t", t}, {"eps", eps}}));
  double profile_sum = 0.0;
  for (int k = 0; k < r; ++k) profile_sum += matrix_norm(h.eval(t * k / r), NormKind::Max);
  ests.push_back(estimate(
      ResourceFormula::RiemannQueryTotal,
      {{"d", d}, {"t", t}, {"r", static_cast<double>(r)}, {"profile_sum", profile_sum}}));
  ests.push_back(estimate(
      ResourceFormula::MonteCarloSM,
      {{"d", d}, {"hmax_inf", hmax_inf}, {"t", t}, {"n", n_qubits}, {"eps", eps}}));
  ests.push_back(estimate(ResourceFormula::MonteCarloLCU, {{"alpha_l1_inf", alpha_l1_inf},
                                                           {"t", t},
                                                           {"g_e", 1.0},
                                                           {"eps", eps}}));

  std::vector<std::vector<std::string>> rows;
  for (const auto& est : ests) {
    std::string inputs;
    for (const auto& [key, value] : est.inputs) {
      if (!inputs.empty()) inputs += ';';
      inputs += key + "=" + fd(value);
    }
    rows.push_back({inst.name, formula_name(est.formula_id), inputs, fd(est.value),
                    est.asymptotic ? "1" : "0"});
  }
  const std::string csv = out_file(out, "resources.csv");
  write_csv(csv, {"instance", "formula_id", "inputs", "value", "asymptotic"}, rows);
  write_text_file(out_file(out, "resources.gp"),
                  "set datafile separator ','\n"
                  "set logscale y\n"
                  "set xtics rotate by -45\n"
                  "set ylabel 'estimate'\n"
                  "plot 'resources.csv' every ::1 using 0:4:xtic(2) with points"
                  " title 'resource estimates'\n");
  std::cout << "wrote " << csv << "\n";
  return 0;
}

// ----------------------------------------------------------------- scatter

int cmd_scatter(double eps_kelvin, double r_m, double mass, double r0, double v0, double t_end,
                double dt, double delta, double coupling, const std::string& out) {
  LJParams params;
  params.epsilon = eps_kelvin * kBoltzmann;
  params.r_m = r_m;
  params.mass = mass;
  params.r0 = r0;
  params.v0 = v0;
  const Trajectory traj = integrate_trajectory(params, t_end, dt);

  std::vector<std::vector<std::string>> rows;
  rows.reserve(traj.times.size());
  for (std::size_t i = 0; i < traj.times.size(); ++i)
    rows.push_back({fd(traj.times[i]), fd(traj.separations[i]), fd(traj.potentials[i])});
  const std::string csv = out_file(out, "scatter.csv");
  write_csv(csv, {"t", "r", "V"}, rows);

  const double coupling_used = std::isfinite(coupling) ? coupling : traj.closest_approach();
  const TimeDepHamiltonian induced = induced_hamiltonian(traj, delta, coupling_used, 2);
  const double ratio = l1_over_linf_ratio(induced);
  write_text_file(out_file(out, "scattering_instance.json"),
                  scattering_instance_json(params, t_end, dt, delta, coupling_used));

  std::ostringstream report;
  report << "closest_approach_m: " << fd(traj.closest_approach()) << "\n"
         << "closest_approach_time_s: " << fd(traj.closest_approach_time()) << "\n"
         << "energy_drift: " << fd(traj.energy_drift) << "\n"
         << "l1_over_linf_ratio: " << fd(ratio) << "\n";
  write_text_file(out_file(out, "scatter_report.txt"), report.str());

  write_text_file(out_file(out, "scatter.gp"),
                  "set datafile separator ','\n"
                  "set multiplot layout 2,1\n"
                  "set xlabel 't (s)'\n"
                  "set ylabel 'r (m)'\n"
                  "plot 'scatter.csv' every ::1 using 1:2 with lines title 'separation'\n"
                  "set ylabel 'V (J)'\n"
                  "plot 'scatter.csv' every ::1 using 1:3 with lines title 'potential'\n"
                  "unset multiplot\n");
  std::cout << "wrote " << csv << " (closest approach " << fd(traj.closest_approach()) << " m at "
            << fd(traj.closest_approach_time()) << " s, ratio " << fd(ratio) << ")\n";
  return 0;
}

// --------------------------------------------------------------- avg-check

int cmd_avg_check(const InstanceChoice& choice, std::uint64_t seed, const std::string& out) {
  const NamedInstance inst = resolve_instance(choice);
  const TimeDepHamiltonian& h = inst.h;
  const double t = h.t_end();
  const double l1 = time_l1_norm(h, NormKind::Spectral, 0.0, t, 1e-10);

  const Matrix h_av = average_hamiltonian(h, t, 1e-12);
  const Matrix u_av = expm_hermitian(h_av, Complex(0.0, -t));
  const Matrix e = evolve(h, 0.0, t, 1e-10).unitary;
  const double spectral_error = spectral_norm(e - u_av);

  const SamplingPlan plan = build_plan(h, nullptr, 0.0, t);
  const MixedUnitaryChannel chan = exact_channel(h, plan, 64);
  const double dlb = diamond_lower_bound(chan, MixedUnitaryChannel::single(u_av),
                                         kDefaultDiamondRestarts, seed);

  const std::string csv = out_file(out, "avg_check.csv");
  write_csv(csv,
            {"instance", "l1_norm", "spectral_error", "spectral_bound", "diamond_lb",
             "diamond_bound"},
            {{inst.name, fd(l1), fd(spectral_error), fd(2.0 * l1 * l1), fd(dlb),
              fd(4.0 * l1 * l1)}});
  write_text_file(out_file(out, "avg_check.gp"),
                  "set datafile separator ','\n"
                  "set ylabel 'distance'\n"
                  "plot 'avg_check.csv' every ::1 using 0:3 with points title 'spectral error',"
                  " \\\n     '' every ::1 using 0:4 with points title '2 L^2', \\\n"
                  "     '' every ::1 using 0:5 with points title 'diamond lower bound', \\\n"
                  "     '' every ::1 using 0:6 with points title '4 L^2'\n");
  std::cout << "wrote " << csv << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for L1-norm-scaled time-dependent Hamiltonian simulation"};
  app.require_subcommand(1);

  InstanceChoice sim_inst, qd_inst, rc_inst, dec_inst, res_inst, avg_inst;
  std::string sim_out = ".", qd_out = ".", rc_out = ".", dec_out = ".", res_out = ".",
              sc_out = ".", avg_out = ".";
  double sim_tol = 1e-10;
  std::vector<int> qd_r = {1, 2, 4, 8};
  std::uint64_t qd_seed = 1234, avg_seed = 1234;
  int qd_trials = 0;
  std::vector<int> rc_k = {2, 4}, rc_m = {16, 32, 64, 128};
  std::vector<double> dec_gamma = {1e-3, 1e-2, 1e-1, 1.0};
  double res_eps = 1e-3;
  std::vector<int> res_r = {64};
  double sc_eps_kelvin = 10.22, sc_rm = 2.869e-10, sc_mass = kHeliumMass, sc_r0 = 2e-9,
         sc_v0 = 1350.0, sc_tend = 2e-12, sc_dt = 5e-17, sc_delta = 0.0,
         sc_coupling = std::numeric_limits<double>::quiet_NaN();

  CLI::App* sim = app.add_subcommand("simulate", "brute-force propagator to JSON");
  add_instance_flags(sim, sim_inst);
  sim->add_option("--tol", sim_tol, "propagator tolerance");
  sim->add_option("--out", sim_out, "output directory");

  CLI::App* qd = app.add_subcommand("qdrift-bench", "segmented-channel error vs segment count");
  add_instance_flags(qd, qd_inst);
  qd->add_option("--r", qd_r, "segment counts")->delimiter(',');
  qd->add_option("--seed", qd_seed, "random seed");
  qd->add_option("--trials", qd_trials,
                 "Monte Carlo trials per channel (0 = exact quadrature channel)");
  qd->add_option("--out", qd_out, "output directory");

  CLI::App* rc = app.add_subcommand("rescale-check", "plain vs rescaled Dyson error sweep");
  add_instance_flags(rc, rc_inst);
  rc->add_option("--K", rc_k, "Dyson truncation orders")->delimiter(',');
  rc->add_option("--M", rc_m, "Dyson grid sizes")->delimiter(',');
  rc->add_option("--out", rc_out, "output directory");

  CLI::App* dec = app.add_subcommand("decompose", "1-sparse decomposition and rounding sweep");
  add_instance_flags(dec, dec_inst);
  dec->add_option("--gamma", dec_gamma, "rounding resolutions")->delimiter(',');
  dec->add_option("--out", dec_out, "output directory");

  CLI::App* res = app.add_subcommand("resources", "closed-form resource estimates");
  add_instance_flags(res, res_inst);
  res->add_option("--eps", res_eps, "target accuracy");
  res->add_option("--r", res_r, "Riemann grid size (first value used)")->delimiter(',');
  res->add_option("--out", res_out, "output directory");

  CLI::App* sc = app.add_subcommand("scatter", "Lennard-Jones collision benchmark");
  sc->add_option("--lj-epsilon-kelvin", sc_eps_kelvin, "well depth in Kelvin");
  sc->add_option("--lj-rm", sc_rm, "well minimum position (m)");
  sc->add_option("--lj-mass", sc_mass, "atom mass (kg)");
  sc->add_option("--lj-r0", sc_r0, "initial separation (m)");
  sc->add_option("--lj-v0", sc_v0, "initial closing speed (m/s)");
  sc->add_option("--lj-t-end", sc_tend, "integration horizon (s)");
  sc->add_option("--lj-dt", sc_dt, "time step (s)");
  sc->add_option("--delta", sc_delta, "two-level splitting of the induced model");
  sc->add_option("--coupling", sc_coupling,
                 "coupling length of the induced model (default: closest approach)");
  sc->add_option("--out", sc_out, "output directory");

  CLI::App* avg = app.add_subcommand("avg-check", "averaged-generator error bounds");
  add_instance_flags(avg, avg_inst);
  avg->add_option("--seed", avg_seed, "random seed");
  avg->add_option("--out", avg_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sim->parsed()) return cmd_simulate(sim_inst, sim_tol, sim_out);
    if (qd->parsed()) return cmd_qdrift_bench(qd_inst, qd_r, qd_seed, qd_trials, qd_out);
    if (rc->parsed()) return cmd_rescale_check(rc_inst, rc_k, rc_m, rc_out);
    if (dec->parsed()) return cmd_decompose(dec_inst, dec_gamma, dec_out);
    if (res->parsed()) return cmd_resources(res_inst, res_eps, res_r, res_out);
    if (sc->parsed())
      return cmd_scatter(sc_eps_kelvin, sc_rm, sc_mass, sc_r0, sc_v0, sc_tend, sc_dt, sc_delta,
                         sc_coupling, sc_out);
    if (avg->parsed()) return cmd_avg_check(avg_inst, avg_seed, avg_out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
