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

#ifndef GAUSSEP_STANDARD_FORM_HPP_
#define GAUSSEP_STANDARD_FORM_HPP_

#include <algorithm>
#include <cmath>

#include "gaussep/errors.hpp"
#include "gaussep/linalg.hpp"
#include "gaussep/symplectic.hpp"

namespace gaussep {

/// V0 = [[a, 0, c1, 0], [0, a, 0, c2], [c1, 0, b, 0], [0, c2, 0, b]].
/// After reduce(): c1 >= |c2| and sign(c2) = sign(det C).
struct StandardForm {
  double a = 0.5;
  double b = 0.5;
  double c1 = 0.0;
  double c2 = 0.0;

  friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

struct ReductionResult {
  StandardForm form;
  LocalSymplectic transform;  // apply(transform, V) is the standard-form matrix
};

/// Normalization M = 2V with parties ordered so that n >= m.
struct DgczForm {
  double n = 1.0;
  double m = 1.0;
  double c = 0.0;
  double cprime = 0.0;
};

inline CovarianceMatrix from_standard(const StandardForm& f) {
  Matrix4 v;
  v(0, 0) = v(1, 1) = f.a;
  v(2, 2) = v(3, 3) = f.b;
  v(0, 2) = v(2, 0) = f.c1;
  v(1, 3) = v(3, 1) = f.c2;
  return CovarianceMatrix(v);
}

namespace detail {

// Rotation that diagonalizes a symmetric 2x2 matrix, followed by the squeeze that
// makes it proportional to the identity.
inline Matrix2 equalizing_transform(const Matrix2& m) {
  const double angle = 0.5 * std::atan2(2.0 * m(0, 1), m(0, 0) - m(1, 1));
  const Matrix2 r = rotation(angle);
  const Matrix2 d = r * m * r.transpose();
  const double x = std::pow(d(1, 1) / d(0, 0), 0.25);
  return squeeze(x) * r;
}

struct RotationSvd {
  double left = 0.0;   // rotation(left) * M * rotation(right)^T is diagonal
  double right = 0.0;
  double s1 = 0.0;     // s1 >= |s2|
  double s2 = 0.0;     // sign(s2) = sign(det M)
};

// Closed-form 2x2 SVD with proper rotations on both sides.
inline RotationSvd rotation_svd(const Matrix2& m) {
  const double e = 0.5 * (m(0, 0) + m(1, 1));
  const double f = 0.5 * (m(0, 0) - m(1, 1));
  const double g = 0.5 * (m(1, 0) + m(0, 1));
  const double h = 0.5 * (m(1, 0) - m(0, 1));
  const double q = std::hypot(e, h);
  const double r = std::hypot(f, g);
  const double a1 = (f == 0.0 && g == 0.0) ? 0.0 : std::atan2(g, f);
  const double a2 = (e == 0.0 && h == 0.0) ? 0.0 : std::atan2(h, e);
  RotationSvd out;
  out.left = 0.5 * (a2 + a1);
  out.right = -0.5 * (a2 - a1);
  out.s1 = q + r;
  out.s2 = q - r;
  return out;
}

inline bool positive_definite(const Matrix2& m, double tol) {
  const double tr = m(0, 0) + m(1, 1);
  const double disc = std::hypot(m(0, 0) - m(1, 1), 2.0 * m(0, 1));
  return 0.5 * (tr - disc) > tol;
}

}  // namespace detail

/// Local symplectic reduction to standard form:
///   1. rotate each mode so that A and B are diagonal,
///   2. squeeze each mode so that A = sqrt(det A) I and B = sqrt(det B) I,
///   3. rotate both modes by the singular-vector angles of C,
///   4. order |c1| >= |c2| and make c1 >= 0 (rotation of mode 2 by pi).
/// Throws NotAState when A or B is not positive definite.
inline ReductionResult reduce(const CovarianceMatrix& v) {
  constexpr double kPdTol = 1e-12;
  const Matrix2 a = v.A(), b = v.B();
  if (!detail::positive_definite(a, kPdTol) || !detail::positive_definite(b, kPdTol))
    throw NotAState("reduce: A and B blocks must be positive definite");

  LocalSymplectic s;
  s.s1 = detail::equalizing_transform(a);
  s.s2 = detail::equalizing_transform(b);

  const Matrix2 c = s.s1 * v.C() * s.s2.transpose();
  const auto svd = detail::rotation_svd(c);
  s.s1 = rotation(svd.left) * s.s1;
  s.s2 = rotation(svd.right) * s.s2;

  StandardForm form{std::sqrt(det(a)), std::sqrt(det(b)), svd.s1, svd.s2};
  if (form.c1 < 0.0) {
    s.s2 = rotation(std::numbers::pi) * s.s2;
    form.c1 = -form.c1;
    form.c2 = -form.c2;
  }
  return {form, s};
}

/// (a, b, c1, c2) -> (n, m, c, c') with M = 2V and n >= m. Swapping the parties maps C to
/// C^T, which leaves a diagonal C unchanged.
inline DgczForm to_dgcz(const StandardForm& f, double tol = kDefaultTol) {
  if (f.a < 0.5 - tol || f.b < 0.5 - tol) throw NotPhysical("to_dgcz: a and b must be >= 1/2");
  return {2.0 * std::max(f.a, f.b), 2.0 * std::min(f.a, f.b), 2.0 * f.c1, 2.0 * f.c2};
}

}  // namespace gaussep

#endif  // GAUSSEP_STANDARD_FORM_HPP_
