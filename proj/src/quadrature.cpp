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

#include "ql1sim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ql1sim {

namespace {

// Value-type adapters so the scalar and matrix integrators share one recursion.
struct ScalarOps {
  using Value = double;
  static double norm(double v) { return std::abs(v); }
};

struct MatrixOps {
  using Value = Matrix;
  static double norm(const Matrix& v) { return max_norm(v); }
};

template <class Ops, class Fn>
struct Simpson {
  using Value = typename Ops::Value;

  Fn f;
  long budget;
  long used = 0;

  Value panel(double a, double fraction_tol, double b, double tol) = delete;

  Value whole(double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    Value fa = f(a), fm = f(m), fb = f(b);
    Value s = simpson(a, b, fa, fm, fb);
    return recurse(a, b, fa, fm, fb, s, tol, 0);
  }

  Value simpson(double a, double b, const Value& fa, const Value& fm, const Value& fb) {
    return ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  }

  Value recurse(double a, double b, const Value& fa, const Value& fm, const Value& fb,
                const Value& s, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    Value flm = f(lm), frm = f(rm);
    Value sl = simpson(a, m, fa, flm, fm);
    Value sr = simpson(m, b, fm, frm, fb);
    Value s2 = sl + sr;
    Value diff = s2 - s;
    if ((Ops::norm(diff) <= 15.0 * tol && depth >= 1) || depth >= 52) {
      return s2 + diff / 15.0;
    }
    used += 2;
    if (used > budget) {
      throw QuadratureNonConvergent("adaptive quadrature exceeded the panel budget");
    }
    return recurse(a, m, fa, flm, fm, sl, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, sr, 0.5 * tol, depth + 1);
  }
};

template <class Ops, class Fn>
typename Ops::Value integrate(Fn f, double a, double b, double tol,
                              const std::vector<double>& split_points, long max_panels,
                              typename Ops::Value zero) {
  if (!(a <= b)) throw ConfigError("integration bounds must satisfy a <= b");
  if (a == b) return zero;
  std::vector<double> edges;
  edges.push_back(a);
  for (double s : split_points) {
    if (s > a && s < b) edges.push_back(s);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());

  Simpson<Ops, Fn> engine{f, max_panels};
  typename Ops::Value total = zero;
  const double span = b - a;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i], hi = edges[i + 1];
    if (hi <= lo) continue;
    total = total + engine.whole(lo, hi, tol * (hi - lo) / span);
  }
  return total;
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        const std::vector<double>& split_points, long max_panels) {
  return integrate<ScalarOps>(f, a, b, tol, split_points, max_panels, 0.0);
}

Matrix adaptive_simpson_matrix(const std::function<Matrix(double)>& f, double a, double b,
                               double tol, const std::vector<double>& split_points,
                               long max_panels) {
  if (a == b) {
    // Shape-correct zero even for an empty interval.
    Matrix probe = f(a);
    return Matrix::Zero(probe.rows(), probe.cols());
  }
  Matrix probe = f(a);
  Matrix zero = Matrix::Zero(probe.rows(), probe.cols());
  return integrate<MatrixOps>(f, a, b, tol, split_points, max_panels, zero);
}

void gauss_legendre(int n, RealVector& nodes, RealVector& weights) {
  if (n < 1) throw ConfigError("gauss_legendre needs n >= 1");
  nodes.resize(n);
  weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes(i) = -x;
    nodes(n - 1 - i) = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights(i) = w;
    weights(n - 1 - i) = w;
  }
}

}  // namespace ql1sim
