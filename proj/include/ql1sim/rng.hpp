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

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

#include "ql1sim/linalg.hpp"

namespace ql1sim {

// Counter-based splittable generator. A stream is keyed by (seed, id0, id1, ...)
// so that e.g. every (trial, segment) pair gets an independent, reproducible
// substream regardless of evaluation order or threading.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 keyed(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
    SplitMix64 g(seed);
    g.next_u64();
    for (std::uint64_t id : ids) {
      g.state_ ^= mix(id + 0x9e3779b97f4a7c15ull);
      g.next_u64();
    }
    return g;
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; platform-independent given the stream.
  double next_normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    // (x + 0.5) * 2^-53 keeps u1 strictly inside (0, 1).
    const double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  Complex next_cnormal() { return Complex(next_normal(), next_normal()); }

  // Haar-ish random unit vector (normalized complex Gaussian).
  Vector next_state(int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = next_cnormal();
    v.normalize();
    return v;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace ql1sim
