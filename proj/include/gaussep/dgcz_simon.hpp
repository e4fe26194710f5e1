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

// Two independent constructions of the P-representation certificate, used as
// cross-checks of the explicit squeezing parameters:
//  - the DGCZ route (M = 2V normalization): branch function r2(r1), root of f(r1) on
//    [1, n], standard form II and the product and trace conditions that together are
//    equivalent to M - I >= 0;
//  - Simon's route: the ratio x^4 (equal to r1/r2) and the scale y^4 that equalizes the
//    two smaller eigenvalues kappa_-, kappa'_-. y^4 coincides with r1 r2 only on the
//    separability boundary.

#ifndef GAUSSEP_DGCZ_SIMON_HPP_
#define GAUSSEP_DGCZ_SIMON_HPP_

#include <array>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "gaussep/criteria.hpp"
#include "gaussep/errors.hpp"
#include "gaussep/linalg.hpp"
#include "gaussep/standard_form.hpp"

namespace gaussep {

/// M = [[n1, 0, c1, 0], [0, n2, 0, c2], [c1, 0, m1, 0], [0, c2, 0, m2]].
struct StandardFormII {
  double n1 = 1.0, n2 = 1.0, m1 = 1.0, m2 = 1.0, c1 = 0.0, c2 = 0.0;

  Matrix4 matrix() const {
    Matrix4 m;
    m(0, 0) = n1;
    m(1, 1) = n2;
    m(2, 2) = m1;
    m(3, 3) = m2;
    m(0, 2) = m(2, 0) = c1;
    m(1, 3) = m(3, 1) = c2;
    return m;
  }
};

struct BranchPoint {
  double r1 = 1.0;
  double X = 1.0;
  double r2_plus = 1.0;
  double r2_minus = -1.0;
};

/// X(r1) = r1 (n r1 - 1) / (n - r1).
inline double x_of(double r1, double n) {
  if (r1 == n) throw PoleError("x_of: r1 = n is a pole");
  return r1 * (n * r1 - 1.0) / (n - r1);
}

/// (1 - X)^2 + 4 m^2 X = (X + (m + sqrt(m^2-1))^2)(X + (m - sqrt(m^2-1))^2).
inline std::pair<double, double> discriminant_factored(double x, double m) {
  const double s = std::sqrt(std::max(0.0, m * m - 1.0));
  return {x + (m + s) * (m + s), x + (m - s) * (m - s)};
}

/// Roots of r2 (m r2 - 1) = X (m - r2), each evaluated in the form that avoids cancellation.
inline BranchPoint r2_branches(double r1, double n, double m) {
  BranchPoint p;
  p.r1 = r1;
  p.X = x_of(r1, n);
  const double disc = (1.0 - p.X) * (1.0 - p.X) + 4.0 * m * m * p.X;
  if (!(disc >= 0.0)) throw BranchError("r2_branches: negative discriminant (m > n)");
  const double sd = std::sqrt(disc);
  const double s = 1.0 - p.X;
  if (s >= 0.0) {
    p.r2_plus = (s + sd) / (2.0 * m);
    p.r2_minus = -2.0 * m * p.X / (s + sd);
  } else {
    p.r2_plus = 2.0 * m * p.X / (sd - s);
    p.r2_minus = (s - sd) / (2.0 * m);
  }
  return p;
}

/// The continuous branch: r2_plus on [1, n), m at r1 = n, r2_minus on (n, inf);
/// r2 = r1 when n = m.
inline double r2_of(double r1, double n, double m) {
  if (n == m) return r1;
  if (r1 == n) return m;
  const auto p = r2_branches(r1, n, m);
  return r1 < n ? p.r2_plus : p.r2_minus;
}

/// (n/r1 - 1)(m r2 - 1) - (m/r2 - 1)(n r1 - 1): the constraint between r1 and r2,
/// cross-multiplied so that it stays finite at r1 = r2 = 1.
inline double constraint_residual(double n, double m, double r1, double r2) {
  return (n / r1 - 1.0) * (m * r2 - 1.0) - (m / r2 - 1.0) * (n * r1 - 1.0);
}

/// f(r1) = sqrt(r1 r2)|c| - |c'|/sqrt(r1 r2) - [sqrt((n r1-1)(m r2-1)) - sqrt((n/r1-1)(m/r2-1))].
inline double f_dgcz(double r1, const DgczForm& g, double tol = kDefaultTol) {
  const double r2 = r2_of(r1, g.n, g.m);
  const double sr = std::sqrt(r1 * r2);
  const double p1 = (g.n * r1 - 1.0) * (g.m * r2 - 1.0);
  const double p2 = (g.n / r1 - 1.0) * (g.m / r2 - 1.0);
  if (p1 < -tol || p2 < -tol) throw DomainError("f_dgcz: negative square-root argument");
  return sr * std::abs(g.c) - std::abs(g.cprime) / sr -
         (std::sqrt(std::max(p1, 0.0)) - std::sqrt(std::max(p2, 0.0)));
}

/// Root of f on [1, n]. Requires f(1) = |c| - |c'| >= 0 and
/// sqrt((n^2-1)(m^2-1)) >= sqrt(nm)|c| + |c'|/sqrt(nm), which forces f(n) <= 0.
inline double find_root(const DgczForm& g, double tol = 1e-12) {
  if (std::abs(g.c) < std::abs(g.cprime)) throw NoBracket("find_root: requires |c| >= |c'|");
  if (g.n < g.m) throw InvalidInput("find_root: parties must be ordered so that n >= m");
  const double snm = std::sqrt(g.n * g.m);
  const double lhs = std::sqrt(std::max(0.0, (g.n * g.n - 1.0) * (g.m * g.m - 1.0)));
  const double rhs = snm * std::abs(g.c) + std::abs(g.cprime) / snm;
  if (lhs < rhs - kDefaultTol) throw NoBracket("find_root: state violates the bound that forces f(n) <= 0");
  const double f1 = f_dgcz(1.0, g);
  if (std::abs(f1) <= tol || g.n <= 1.0) return 1.0;
  return bisect_root([&](double r1) { return f_dgcz(r1, g); }, 1.0, g.n, tol);
}

inline StandardFormII standard_form_ii(const DgczForm& g, double r1) {
  const double r2 = r2_of(r1, g.n, g.m);
  const double sr = std::sqrt(r1 * r2);
  return {g.n * r1, g.n / r1, g.m * r2, g.m / r2, g.c * sr, g.cprime / sr};
}

struct DgczPrepCheck {
  bool passed = false;
  bool psd = false;  // is_psd(M - I), the direct route
  std::vector<NamedMargin> margins;
};

/// sqrt((m1-1)(n1-1)) >= |c1|, sqrt((m2-1)(n2-1)) >= |c2|, (n1-1)+(m1-1) >= 0 and
/// (n2-1)+(m2-1) >= 0. The trace conditions are what make these equivalent to M - I >= 0.
inline DgczPrepCheck prep_conditions_dgcz(const StandardFormII& s, double tol = kDefaultTol) {
  auto root_margin = [](double p, double c) {
    return p >= 0.0 ? std::sqrt(p) - std::abs(c) : -std::sqrt(-p) - std::abs(c);
  };
  DgczPrepCheck out;
  out.margins = {{"product_q", root_margin((s.m1 - 1.0) * (s.n1 - 1.0), s.c1)},
                 {"product_p", root_margin((s.m2 - 1.0) * (s.n2 - 1.0), s.c2)},
                 {"trace_q", (s.n1 - 1.0) + (s.m1 - 1.0)},
                 {"trace_p", (s.n2 - 1.0) + (s.m2 - 1.0)}};
  out.passed = min_margin(out.margins) >= -tol;
  out.psd = is_psd(SymMatrix<4>(s.matrix() - Matrix4::identity()), tol);
  return out;
}

/// lhs = sqrt((n1+n2-2)(m1+m2-2)), rhs = sqrt((n1-1)(m1-1)) + sqrt((n2-1)(m2-1)); lhs >= rhs
/// with equality when (n2-1)/(n1-1) = (m2-1)/(m1-1).
inline std::pair<double, double> convexity_gap(double n1, double n2, double m1, double m2) {
  const double p1 = (n1 - 1.0) * (m1 - 1.0), p2 = (n2 - 1.0) * (m2 - 1.0);
  if (n1 + n2 < 2.0 || m1 + m2 < 2.0 || p1 < 0.0 || p2 < 0.0)
    throw DomainError("convexity_gap: arguments outside the admissible region");
  return {std::sqrt((n1 + n2 - 2.0) * (m1 + m2 - 2.0)), std::sqrt(p1) + std::sqrt(p2)};
}

/// x^4 = (|c1| a + |c2| b) / (|c2| a + |c1| b).
inline double simon_x4(const StandardForm& s) {
  const double c1 = std::abs(s.c1), c2 = std::abs(s.c2);
  if (c1 == 0.0) throw InvalidInput("simon_x4: requires c1 != 0");
  return (c1 * s.a + c2 * s.b) / (c2 * s.a + c1 * s.b);
}

namespace detail {

// p + q - sqrt((p-q)^2 + 4c^2) rewritten as 4(pq - c^2) / (p + q + sqrt(...)).
inline double smaller_pair_sum(double p, double q, double c) {
  return 4.0 * (p * q - c * c) / (p + q + std::hypot(p - q, 2.0 * c));
}

}  // namespace detail

/// y^4 = [a/x^2 + b x^2 - sqrt((a/x^2 - b x^2)^2 + 4c2^2)] / [a x^2 + b/x^2 - sqrt((a x^2 - b/x^2)^2 + 4c1^2)].
inline double simon_y4(const StandardForm& s, double x4) {
  if (!(x4 > 0.0)) throw InvalidInput("simon_y4: x^4 must be positive");
  const double x2 = std::sqrt(x4);
  const double den = detail::smaller_pair_sum(s.a * x2, s.b / x2, s.c1);
  const double num = detail::smaller_pair_sum(s.a / x2, s.b * x2, s.c2);
  if (!(den > 0.0)) throw DomainError("simon_y4: non-positive denominator");
  return num / den;
}

/// Eigenvalue pairs of the Simon-transformed matrix: {kappa_+, kappa'_+, kappa_-, kappa'_-}.
inline std::array<double, 4> kappa_eigs(const StandardForm& s, double x, double y) {
  const double x2 = x * x, y2 = y * y;
  const double c1 = std::abs(s.c1), c2 = std::abs(s.c2);
  const double p = s.a * x2, q = s.b / x2;
  const double pp = s.a / x2, qp = s.b * x2;
  return {0.5 * y2 * (p + q + std::hypot(p - q, 2.0 * c1)),
          0.5 / y2 * (pp + qp + std::hypot(pp - qp, 2.0 * c2)),
          0.5 * y2 * detail::smaller_pair_sum(p, q, c1),
          0.5 / y2 * detail::smaller_pair_sum(pp, qp, c2)};
}

}  // namespace gaussep

#endif  // GAUSSEP_DGCZ_SIMON_HPP_
