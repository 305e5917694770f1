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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ql1sim {

// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad inputs, bad configuration, contract violations by the caller.
struct ConfigError : Error {
  using Error::Error;
};

// The requested accuracy could not be reached.
struct NumericError : Error {
  using Error::Error;
};

struct TimeOutOfDomain : ConfigError {
  using ConfigError::ConfigError;
};
struct DimensionMismatch : ConfigError {
  using ConfigError::ConfigError;
};
struct InvalidBound : ConfigError {
  using ConfigError::ConfigError;
};
struct ZeroHamiltonian : ConfigError {
  using ConfigError::ConfigError;
};
struct ZeroTerm : ConfigError {
  using ConfigError::ConfigError;
};
struct SparsityViolation : ConfigError {
  using ConfigError::ConfigError;
};
struct NonPositiveNorm : ConfigError {
  using ConfigError::ConfigError;
};
struct OutOfRange : ConfigError {
  using ConfigError::ConfigError;
};
struct MissingInput : ConfigError {
  using ConfigError::ConfigError;
};
struct NegativeInput : ConfigError {
  using ConfigError::ConfigError;
};
struct NonPositiveSeparation : ConfigError {
  using ConfigError::ConfigError;
};
struct BudgetExceeded : ConfigError {
  using ConfigError::ConfigError;
};

struct QuadratureNonConvergent : NumericError {
  using NumericError::NumericError;
};
struct NoConvergence : NumericError {
  using NumericError::NumericError;
};
struct StepTooLarge : NumericError {
  using NumericError::NumericError;
};

// Parse failure for coefficient expressions: carries the byte offset of the
// offending token and the set of tokens that would have been accepted there.
struct ParseError : ConfigError {
  std::size_t offset;
  std::vector<std::string> expected;

  ParseError(const std::string& msg, std::size_t off, std::vector<std::string> exp)
      : ConfigError(msg), offset(off), expected(std::move(exp)) {}
};

}  // namespace ql1sim
