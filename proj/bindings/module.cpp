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

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace ql1sim;

PYBIND11_MODULE(_core, m) {
  m.doc() = "L1-norm-scaled time-dependent Hamiltonian simulation";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);

  py::enum_<NormKind>(m, "NormKind")
      .value("Spectral", NormKind::Spectral)
      .value("Max", NormKind::Max)
      .value("EllOneOfCoeffs", NormKind::EllOneOfCoeffs)
      .value("EllInfOfCoeffs", NormKind::EllInfOfCoeffs);

  py::class_<TimeDepHamiltonian>(m, "TimeDepHamiltonian")
      .def_property_readonly("dim", &TimeDepHamiltonian::dim)
      .def_property_readonly("t_end", &TimeDepHamiltonian::t_end)
      .def_property_readonly("discontinuities", &TimeDepHamiltonian::discontinuities)
      .def("eval", &TimeDepHamiltonian::eval, py::arg("tau"))
      .def("term_count", &TimeDepHamiltonian::term_count)
      .def("term", &TimeDepHamiltonian::term, py::arg("l"), py::arg("tau"))
      .def("scaled", &TimeDepHamiltonian::scaled, py::arg("factor"));

  m.def("builtin_names", [] { return builtin_names(); });
  m.def("builtin_instance", &builtin_instance, py::arg("name"), py::arg("params") = ParamMap{});
  m.def("instance_from_json", &instance_from_json, py::arg("text"));
  m.def("load_instance", &load_instance, py::arg("path"));

  m.def("matrix_norm", &matrix_norm, py::arg("a"), py::arg("kind"));
  m.def("time_l1_norm", &time_l1_norm, py::arg("h"), py::arg("kind"), py::arg("a"), py::arg("b"),
        py::arg("tol") = 1e-10);
  m.def("sup_norm_on_grid", &sup_norm_on_grid, py::arg("h"), py::arg("kind"),
        py::arg("n") = 4096);
  m.def("derivative_sup_norm_fd", &derivative_sup_norm_fd, py::arg("h"), py::arg("kind"),
        py::arg("n") = 4096);

  py::class_<PropagatorResult>(m, "PropagatorResult")
      .def_readonly("unitary", &PropagatorResult::unitary)
      .def_readonly("error_estimate", &PropagatorResult::error_estimate)
      .def_readonly("steps_used", &PropagatorResult::steps_used);
  m.def("evolve", &evolve, py::arg("h"), py::arg("s"), py::arg("t"), py::arg("tol") = 1e-10);
  m.def("scaling_derivative", &scaling_derivative, py::arg("h"), py::arg("s_scale"),
        py::arg("t"), py::arg("tol") = 1e-8);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<Matrix>())
      .def_static("pure", &DensityMatrix::pure)
      .def_static("maximally_mixed", &DensityMatrix::maximally_mixed)
      .def_property_readonly("matrix", &DensityMatrix::matrix);
  py::class_<MixedUnitaryChannel>(m, "MixedUnitaryChannel")
      .def(py::init<std::vector<double>, std::vector<Matrix>>())
      .def_static("single", &MixedUnitaryChannel::single)
      .def_readonly("weights", &MixedUnitaryChannel::weights)
      .def_readonly("unitaries", &MixedUnitaryChannel::unitaries);
  m.def("apply_channel", &apply_channel, py::arg("channel"), py::arg("rho"));
  m.def("trace_distance", &trace_distance, py::arg("rho"), py::arg("sigma"));
  py::class_<Superoperator>(m, "Superoperator")
      .def_static("identity", &Superoperator::identity)
      .def_static("from_channel", &Superoperator::from_channel)
      .def_readonly("dim", &Superoperator::dim)
      .def_readonly("matrix", &Superoperator::s)
      .def("apply", &Superoperator::apply, py::arg("rho"))
      .def("then", &Superoperator::then, py::arg("next"));
  m.def("diamond_lower_bound",
        py::overload_cast<const Superoperator&, const Superoperator&, int, std::uint64_t>(
            &diamond_lower_bound),
        py::arg("a"), py::arg("b"), py::arg("restarts") = kDefaultDiamondRestarts,
        py::arg("seed") = 1234);
  m.def("diamond_lower_bound",
        py::overload_cast<const MixedUnitaryChannel&, const MixedUnitaryChannel&, int,
                          std::uint64_t>(&diamond_lower_bound),
        py::arg("a"), py::arg("b"), py::arg("restarts") = kDefaultDiamondRestarts,
        py::arg("seed") = 1234);

  py::class_<SamplingPlan>(m, "SamplingPlan")
      .def_readonly("a", &SamplingPlan::a)
      .def_readonly("b", &SamplingPlan::b)
      .def_readonly("total_l1", &SamplingPlan::total_l1)
      .def_readonly("peak", &SamplingPlan::peak)
      .def("density_at", &SamplingPlan::density_at, py::arg("tau"))
      .def("is_exceptional", &SamplingPlan::is_exceptional, py::arg("tau"));
  py::class_<Segmentation>(m, "Segmentation")
      .def_readonly("breakpoints", &Segmentation::breakpoints)
      .def("segments", &Segmentation::segments);
  m.def(
      "build_plan",
      [](const TimeDepHamiltonian& h, double a, double b, int grid_size) {
        return build_plan(h, nullptr, a, b, grid_size);
      },
      py::arg("h"), py::arg("a"), py::arg("b"), py::arg("grid_size") = kDefaultPlanGrid);
  m.def("sample_time", &sample_time, py::arg("plan"), py::arg("u"));
  m.def("qdrift_unitary", &qdrift_unitary, py::arg("h"), py::arg("plan"), py::arg("tau"));
  m.def("exact_channel", &exact_channel, py::arg("h"), py::arg("plan"),
        py::arg("quad_points") = 64);
  m.def("segment_equal_l1", &segment_equal_l1, py::arg("plan"), py::arg("r"));
  m.def("run_qdrift", &run_qdrift, py::arg("h"), py::arg("plan"), py::arg("r"), py::arg("seed"),
        py::arg("trials"));
  m.def(
      "segmented_superoperator",
      [](const TimeDepHamiltonian& h, const Segmentation& seg, int quad_points, int grid_size) {
        return segmented_superoperator(h, nullptr, seg, quad_points, grid_size);
      },
      py::arg("h"), py::arg("seg"), py::arg("quad_points") = 64,
      py::arg("grid_size") = kDefaultPlanGrid);

  py::class_<JointPlan>(m, "JointPlan")
      .def_readonly("masses", &JointPlan::masses)
      .def_readonly("total", &JointPlan::total);
  m.def("build_joint_plan", &build_joint_plan, py::arg("h"), py::arg("a"), py::arg("b"),
        py::arg("grid_size") = kDefaultPlanGrid);
  m.def("sample_joint", &sample_joint, py::arg("plan"), py::arg("u_term"), py::arg("u_time"));
  m.def("exact_channel_joint", &exact_channel_joint, py::arg("h"), py::arg("plan"),
        py::arg("quad_points") = 64);

  py::class_<PiecewiseHamiltonian>(m, "PiecewiseHamiltonian")
      .def_property_readonly("t", &PiecewiseHamiltonian::t)
      .def("eval", &PiecewiseHamiltonian::eval, py::arg("tau"))
      .def("hamiltonian", &PiecewiseHamiltonian::hamiltonian);
  m.def("universal_reduction", &universal_reduction, py::arg("h"), py::arg("t"));
  m.def("average_hamiltonian", &average_hamiltonian, py::arg("h"), py::arg("t"),
        py::arg("tol") = 1e-12);
  m.def("discrete_qdrift_bound", &discrete_qdrift_bound, py::arg("term_norms"), py::arg("probs"),
        py::arg("t"));

  py::class_<Clock>(m, "Clock")
      .def_property_readonly("t_end", &Clock::t_end)
      .def_property_readonly("s_end", &Clock::s_end)
      .def("value", &Clock::value, py::arg("t"))
      .def("profile_at", &Clock::profile_at, py::arg("t"))
      .def("invert", &Clock::invert, py::arg("varsigma"));
  m.def(
      "build_clock",
      [](const TimeDepHamiltonian& h, NormKind kind, int grid_size) {
        return build_clock(h, kind, nullptr, grid_size);
      },
      py::arg("h"), py::arg("kind") = NormKind::Spectral,
      py::arg("grid_size") = kDefaultClockGrid);
  m.def("rescaled_hamiltonian", &rescaled_hamiltonian, py::arg("h"), py::arg("clock"));

  m.def(
      "dyson_truncated",
      [](const TimeDepHamiltonian& h, double t0, double t1, int order_k, int grid_m) {
        return dyson_truncated(h, t0, t1, DysonConfig{order_k, grid_m});
      },
      py::arg("h"), py::arg("t0"), py::arg("t1"), py::arg("order_k"), py::arg("grid_m"));
  m.def(
      "rescaled_dyson",
      [](const TimeDepHamiltonian& h, const Clock& clock, int order_k, int grid_m) {
        return rescaled_dyson(h, clock, DysonConfig{order_k, grid_m});
      },
      py::arg("h"), py::arg("clock"), py::arg("order_k"), py::arg("grid_m"));

  py::class_<OneSparseMatrix>(m, "OneSparseMatrix")
      .def_readonly("dim", &OneSparseMatrix::dim)
      .def("dense", &OneSparseMatrix::dense)
      .def("validate", &OneSparseMatrix::validate, py::arg("reflection") = false)
      .def_property_readonly("entries", [](const OneSparseMatrix& t) {
        std::vector<std::tuple<int, int, Complex>> out;
        for (const auto& e : t.entries) out.emplace_back(e.row, e.col, e.value);
        return out;
      });
  m.def("one_sparse_decompose", &one_sparse_decompose, py::arg("h"), py::arg("d"));
  m.def("reflection_round", &reflection_round, py::arg("terms"), py::arg("gamma"));

  py::class_<ResourceEstimate>(m, "ResourceEstimate")
      .def_property_readonly("formula",
                             [](const ResourceEstimate& e) {
                               return std::string(formula_name(e.formula_id));
                             })
      .def_readonly("inputs", &ResourceEstimate::inputs)
      .def_readonly("value", &ResourceEstimate::value)
      .def_readonly("asymptotic", &ResourceEstimate::asymptotic);
  m.def(
      "estimate",
      [](const std::string& formula, const std::map<std::string, double>& inputs) {
        return estimate(formula_from_name(formula), inputs);
      },
      py::arg("formula"), py::arg("inputs"));
  m.def("resource_formulas", [] {
    std::vector<std::string> names;
    for (int f = 0; f <= static_cast<int>(ResourceFormula::MonteCarloLCU); ++f)
      names.emplace_back(formula_name(static_cast<ResourceFormula>(f)));
    return names;
  });
  m.def("riemann_query_total", &riemann_query_total, py::arg("h"), py::arg("d"), py::arg("t"),
        py::arg("r"));

  py::class_<LJParams>(m, "LJParams")
      .def(py::init<>())
      .def_readwrite("epsilon", &LJParams::epsilon)
      .def_readwrite("r_m", &LJParams::r_m)
      .def_readwrite("mass", &LJParams::mass)
      .def_readwrite("r0", &LJParams::r0)
      .def_readwrite("v0", &LJParams::v0);
  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("separations", &Trajectory::separations)
      .def_readonly("potentials", &Trajectory::potentials)
      .def_readonly("energy_drift", &Trajectory::energy_drift)
      .def_readonly("final_velocity", &Trajectory::final_velocity)
      .def("closest_approach", &Trajectory::closest_approach)
      .def("closest_approach_time", &Trajectory::closest_approach_time);
  m.attr("BOLTZMANN") = kBoltzmann;
  m.attr("HELIUM_MASS") = kHeliumMass;
  m.def("lj_potential", &lj_potential, py::arg("r"), py::arg("params"));
  m.def("lj_force", &lj_force, py::arg("r"), py::arg("params"));
  m.def("integrate_trajectory", &integrate_trajectory, py::arg("params"), py::arg("t_end"),
        py::arg("dt") = 5e-17);
  m.def("induced_hamiltonian", &induced_hamiltonian, py::arg("traj"), py::arg("delta"),
        py::arg("coupling_scale"), py::arg("base_dim") = 2);
  m.def("l1_over_linf_ratio", &l1_over_linf_ratio, py::arg("h"), py::arg("grid") = 4096);

  m.def("format_double", &format_double, py::arg("v"));
  m.def("scattering_instance_json", &scattering_instance_json, py::arg("params"),
        py::arg("t_end_s"), py::arg("dt"), py::arg("delta"), py::arg("coupling_scale"));
}
