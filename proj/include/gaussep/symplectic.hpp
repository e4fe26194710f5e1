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

#ifndef GAUSSEP_SYMPLECTIC_HPP_
#define GAUSSEP_SYMPLECTIC_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "gaussep/errors.hpp"
#include "gaussep/linalg.hpp"

namespace gaussep {

/// Single-mode symplectic form J = [[0, 1], [-1, 0]].
inline constexpr Matrix2 kJ{{0.0, 1.0, -1.0, 0.0}};

/// Two-mode symplectic form J (+) J in (q1, p1, q2, p2) ordering.
inline constexpr Matrix4 kOmega{{0.0, 1.0, 0.0, 0.0,   //
                                 -1.0, 0.0, 0.0, 0.0,  //
                                 0.0, 0.0, 0.0, 1.0,   //
                                 0.0, 0.0, -1.0, 0.0}};

/// Block-diagonal x (+) y.
inline Matrix4 direct_sum(const Matrix2& x, const Matrix2& y) {
  Matrix4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      r(i, j) = x(i, j);
      r(i + 2, j + 2) = y(i, j);
    }
  return r;
}

/// Two-mode covariance matrix in (q1, p1, q2, p2) ordering, V = [[A, C], [C^T, B]].
/// Vacuum is V = I/2.
class CovarianceMatrix {
 public:
  CovarianceMatrix() : v_(SymMatrix<4>::diagonal({0.5, 0.5, 0.5, 0.5})) {}

  explicit CovarianceMatrix(const SymMatrix<4>& v) : v_(v) {
    if (!all_finite(v_.matrix())) throw InvalidInput("CovarianceMatrix: non-finite entry");
  }

  explicit CovarianceMatrix(const Matrix4& v) : CovarianceMatrix(SymMatrix<4>(v)) {}

  /// Builds V from its blocks. A and B must be symmetric.
  static CovarianceMatrix from_blocks(const Matrix2& a, const Matrix2& b, const Matrix2& c) {
    const double scale = std::max({1.0, max_abs(a), max_abs(b)});
    if (std::abs(a(0, 1) - a(1, 0)) > 1e-12 * scale || std::abs(b(0, 1) - b(1, 0)) > 1e-12 * scale)
      throw InvalidInput("CovarianceMatrix: A and B blocks must be symmetric");
    Matrix4 v;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        v(i, j) = a(i, j);
        v(i + 2, j + 2) = b(i, j);
        v(i, j + 2) = c(i, j);
        v(j + 2, i) = c(i, j);
      }
    return CovarianceMatrix(v);
  }

  static CovarianceMatrix vacuum() { return CovarianceMatrix(); }

  const SymMatrix<4>& sym() const { return v_; }
  const Matrix4& matrix() const { return v_.matrix(); }
  double operator()(std::size_t i, std::size_t j) const { return v_(i, j); }

  Matrix2 A() const { return block(0, 0); }
  Matrix2 B() const { return block(2, 2); }
  Matrix2 C() const { return block(0, 2); }

  friend bool operator==(const CovarianceMatrix&, const CovarianceMatrix&) = default;

 private:
  Matrix2 block(std::size_t r, std::size_t c) const {
    Matrix2 m;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = v_(r + i, c + j);
    return m;
  }

  SymMatrix<4> v_;
};

/// S1 (x) S2, one unit-determinant 2x2 factor per mode.
struct LocalSymplectic {
  Matrix2 s1 = Matrix2::identity();
  Matrix2 s2 = Matrix2::identity();

  static LocalSymplectic identity() { return {}; }

  Matrix4 full() const { return direct_sum(s1, s2); }

  LocalSymplectic inverse() const {
    auto inv = [](const Matrix2& s) { return Matrix2{{s(1, 1), -s(0, 1), -s(1, 0), s(0, 0)}}; };
    return {inv(s1), inv(s2)};
  }

  /// (x * y) acts as y first, then x.
  friend LocalSymplectic operator*(const LocalSymplectic& x, const LocalSymplectic& y) {
    return {x.s1 * y.s1, x.s2 * y.s2};
  }
};

/// [[cos, sin], [-sin, cos]]
inline Matrix2 rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Matrix2{{c, s, -s, c}};
}

/// diag(x, 1/x)
inline Matrix2 squeeze(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidInput("squeeze: factor must be positive and finite");
  return Matrix2{{x, 0.0, 0.0, 1.0 / x}};
}

inline bool is_symplectic(const Matrix2& s, double tol = kDefaultTol) {
  return max_abs(s * kJ * s.transpose() - kJ) <= tol;
}

inline bool is_symplectic(const LocalSymplectic& s, double tol = kDefaultTol) {
  return is_symplectic(s.s1, tol) && is_symplectic(s.s2, tol);
}

/// A -> S1 A S1^T, B -> S2 B S2^T, C -> S1 C S2^T.
inline CovarianceMatrix apply(const LocalSymplectic& s, const CovarianceMatrix& v) {
  const Matrix4 f = s.full();
  return CovarianceMatrix(f * v.matrix() * f.transpose());
}

/// Partial mirror on mode 2: B -> S3 B S3, C -> C S3 with S3 = diag(1, -1). Not symplectic;
/// flips the sign of det C.
inline CovarianceMatrix mirror_c2(const CovarianceMatrix& v) {
  const Matrix4 d = Matrix4::diagonal({1.0, 1.0, 1.0, -1.0});
  return CovarianceMatrix(d * v.matrix() * d);
}

/// Each factor is rotation * squeeze * rotation; angles uniform in [0, 2pi), log squeeze
/// uniform in [-spread, spread].
inline LocalSymplectic random_local_symplectic(std::mt19937_64& rng, double spread = 1.0) {
  if (!(spread >= 0.0)) throw InvalidInput("random_local_symplectic: spread must be non-negative");
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto factor = [&] {
    const double t1 = angle(rng);
    const double u = spread * unit(rng);
    const double t2 = angle(rng);
    return rotation(t1) * squeeze(std::exp(u)) * rotation(t2);
  };
  LocalSymplectic s;
  s.s1 = factor();
  s.s2 = factor();
  return s;
}

inline LocalSymplectic random_local_symplectic(std::uint64_t seed, double spread = 1.0) {
  std::mt19937_64 rng(seed);
  return random_local_symplectic(rng, spread);
}

}  // namespace gaussep

#endif  // GAUSSEP_SYMPLECTIC_HPP_
