// Copyright 2026 The gaussep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reference computations used only by the tests. Each one takes a different route from
// the library code it checks: literal closed forms, factorizations instead of
// eigensolvers, brute force instead of algebra.

#ifndef GAUSSEP_TESTS_ORACLES_HPP_
#define GAUSSEP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "gaussep/linalg.hpp"
#include "gaussep/standard_form.hpp"

namespace oracle {

using gaussep::Matrix;

/// PSD test by symmetric pivoted LDL^T: repeatedly eliminate the largest remaining
/// diagonal entry. Negative pivots below -tol, or a nonzero row behind a zero pivot,
/// mean the matrix is not PSD.
template <std::size_t N>
bool is_psd_ldl(Matrix<N> m, double tol) {
  std::array<bool, N> done{};
  for (std::size_t step = 0; step < N; ++step) {
    std::size_t p = N;
    for (std::size_t i = 0; i < N; ++i)
      if (!done[i] && (p == N || m(i, i) > m(p, p))) p = i;
    const double d = m(p, p);
    if (d < -tol) return false;
    done[p] = true;
    if (d <= tol) {
      // Remaining block must be (numerically) zero for PSD.
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          if (!done[i] && !done[j] && std::abs(m(i, j)) > std::sqrt(tol)) return false;
      return true;
    }
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (!done[i] && !done[j]) m(i, j) -= m(i, p) * m(p, j) / d;
  }
  return true;
}

/// The separability bound on c1^2 exactly as the closed form is usually written, with the
/// 1/(4 t^2) prefactor. Loses digits for small t.
inline double c1sq_literal(double a, double b, double t) {
  const double d = a * a * b * b * (1 - t * t) * (1 - t * t) + t * (a + b * t) * (a * t + b);
  return ((2 * a * b * (1 + t * t) + t) - 2 * std::sqrt(d)) / (4 * t * t);
}

/// The squeezing parameters straight from their closed form.
inline std::pair<double, double> r_literal(double a, double b, double t) {
  const double s = a * b * (1 - t * t) + std::sqrt(a * a * b * b * (1 - t * t) * (1 - t * t) + t * (a + b * t) * (a * t + b));
  return {s / (a * t + b), s / (a + b * t)};
}

/// Smaller and larger eigenvalue of [[p, c], [c, q]] via the textbook formula.
inline std::pair<double, double> eig2(double p, double q, double c) {
  const double m = 0.5 * (p + q), r = 0.5 * std::sqrt((p - q) * (p - q) + 4 * c * c);
  return {m - r, m + r};
}

/// Determinant by Gaussian elimination with partial pivoting.
template <std::size_t N>
double det(Matrix<N> m) {
  double d = 1.0;
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < N; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (m(p, k) == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < N; ++j) std::swap(m(p, j), m(k, j));
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t i = k + 1; i < N; ++i) {
      const double f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < N; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

template <std::size_t N>
Matrix<N> random_symmetric(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

inline double rel_err(double x, double ref) { return std::abs(x - ref) / std::max(1.0, std::abs(ref)); }

}  // namespace oracle

#endif  // GAUSSEP_TESTS_ORACLES_HPP_
