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

#include <map>
#include <string>
#include <vector>

#include "ql1sim/hamiltonian.hpp"
#include "ql1sim/scattering.hpp"

namespace ql1sim {

// Numeric parameters attached to a builtin instance; unknown keys are rejected.
using ParamMap = std::map<std::string, double>;

// Builtin catalog: const-z, linear-z, rotating-field, three-tone,
// piecewise-xz, scattering-toy. Spans commuting, noncommuting, discontinuous,
// and peaked-norm regimes.
const std::vector<std::string>& builtin_names();
TimeDepHamiltonian builtin_instance(const std::string& name, const ParamMap& params = {});

// Instance config document:
//   {dim, model: "lcu"|"lc"|"dense-builtin", t_end, coeffs: [expr strings],
//    unitaries: [matrix literals], builtin: {name, params}, discontinuities: [times]}
// A matrix literal is a row-major array of [re, im] pairs (flat, or nested as
// rows). "lcu" pairs nonnegative coefficient expressions with Hermitian
// unitaries; "lc" pairs arbitrary expressions with Hermitian matrices;
// "dense-builtin" defers to the catalog.
TimeDepHamiltonian instance_from_json(const std::string& text);
TimeDepHamiltonian load_instance(const std::string& path);

// Config for the collision-induced two-level model with every parameter
// pinned (an unset coupling resolves to the closest approach, making the peak
// norm 1). Round-trips through instance_from_json.
std::string scattering_instance_json(const LJParams& params, double t_end_s, double dt,
                                     double delta, double coupling_scale);

// Deterministic text output: floats carry 17 significant digits everywhere.
std::string format_double(double v);
std::string csv_line(const std::vector<std::string>& cols);
void write_text_file(const std::string& path, const std::string& content);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Row-major [re, im] pair listing of a complex matrix, as used by instance
// configs and the propagator export.
std::string matrix_json(const Matrix& m);

}  // namespace ql1sim
