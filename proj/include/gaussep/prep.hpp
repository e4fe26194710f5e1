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

// Squeezing parameters that make the coherent-state (P) representation condition
// saturate the separability bound, and the Gaussian P-function they certify.
//
// Conventions: vacuum V = I/2; the squeezing S(r1, r2) has
// S S^T = diag(1/r1, r1, 1/r2, r2), and the P-representation condition in that frame
// is V0 - S S^T / 2 >= 0, i.e. S^-1 V0 S^-T - I/2 >= 0.

#ifndef GAUSSEP_PREP_HPP_
#define GAUSSEP_PREP_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gaussep/criteria.hpp"
#include "gaussep/errors.hpp"
#include "gaussep/linalg.hpp"
#include "gaussep/standard_form.hpp"
#include "gaussep/symplectic.hpp"

namespace gaussep {

struct SqueezeParams {
  double r1 = 1.0;
  double r2 = 1.0;
  double t = 1.0;
};

/// Gaussian P-function exp(-x^T cov^-1 x / 2) around mean.
struct PFunctionParams {
  Vector<4> mean{};
  SymMatrix<4> cov{};
};

struct PrepCertificate {
  StandardForm frame;        // canonical standard form the squeezing acts on
  SqueezeParams squeeze;
  LocalSymplectic to_squeezed;  // S^-1: apply(to_squeezed, from_standard(frame)) = V'
  PFunctionParams pfun;      // cov = V' - I/2
  std::array<double, 4> lambda_eigs{};
};

struct PrepTest {
  bool passed = false;
  std::vector<NamedMargin> margins;
};

namespace detail {

inline void check_prep_domain(double a, double b, double t, const char* who) {
  if (!(a >= 0.5 - kDefaultTol) || !(b >= 0.5 - kDefaultTol))
    throw InvalidInput(std::string(who) + ": requires a, b >= 1/2");
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput(std::string(who) + ": t must lie in [0, 1]");
}

inline double radicand(double a, double b, double t) {
  const double u = a * b * (1.0 - t * t);
  return u * u + t * (a + b * t) * (a * t + b);
}

// Eigenvalues of [[p, c], [c, q]], ascending.
inline std::pair<double, double> sym2_eigs(double p, double q, double c) {
  const double s = p + q;
  const double r = std::hypot(p - q, 2.0 * c);
  const double hi = 0.5 * (s + r);
  const double lo = (s > 0.0 && hi > 0.0) ? (p * q - c * c) / hi : 0.5 * (s - r);
  return {lo, hi};
}

}  // namespace detail

/// r1 = {ab(1-t^2) + sqrt(D)} / (at + b),  r2 = {ab(1-t^2) + sqrt(D)} / (a + bt),
/// D = a^2 b^2 (1-t^2)^2 + t(a+bt)(at+b). Values are confined to [1, 2a] x [1, 2b].
inline SqueezeParams squeeze_params(double a, double b, double t) {
  detail::check_prep_domain(a, b, t, "squeeze_params");
  const double s = a * b * (1.0 - t * t) + std::sqrt(detail::radicand(a, b, t));
  SqueezeParams p;
  p.t = t;
  p.r1 = std::clamp(s / (a * t + b), 1.0, std::max(1.0, 2.0 * a));
  p.r2 = std::clamp(s / (a + b * t), 1.0, std::max(1.0, 2.0 * b));
  return p;
}

/// (a - r1/2, b - r2/2) at the squeeze_params point, in the cancellation-free form
///   a - r1/2 = t (4a^2-1)(a+bt) / (2 [ab(1+t^2) + 2a^2 t + sqrt(D)]).
inline std::pair<double, double> squeeze_slacks(double a, double b, double t) {
  detail::check_prep_domain(a, b, t, "squeeze_slacks");
  const double sd = std::sqrt(detail::radicand(a, b, t));
  const double base = a * b * (1.0 + t * t);
  return {t * (4.0 * a * a - 1.0) * (a + b * t) / (2.0 * (base + 2.0 * a * a * t + sd)),
          t * (4.0 * b * b - 1.0) * (a * t + b) / (2.0 * (base + 2.0 * b * b * t + sd))};
}

/// Eigenvalues of V0 - S S^T / 2: {(l1)-, (l1)+, (l2)-, (l2)+}.
inline std::array<double, 4> lambda_eigs(const StandardForm& s, double r1, double r2) {
  const auto [l1m, l1p] = detail::sym2_eigs(s.a - 0.5 / r1, s.b - 0.5 / r2, s.c1);
  const auto [l2m, l2p] = detail::sym2_eigs(s.a - 0.5 * r1, s.b - 0.5 * r2, s.c2);
  return {l1m, l1p, l2m, l2p};
}

/// V0 - S(r1, r2) S(r1, r2)^T / 2 as a matrix.
inline SymMatrix<4> prep_matrix(const StandardForm& s, double r1, double r2) {
  Matrix4 m = from_standard(s).matrix();
  m(0, 0) -= 0.5 / r1;
  m(1, 1) -= 0.5 * r1;
  m(2, 2) -= 0.5 / r2;
  m(3, 3) -= 0.5 * r2;
  return SymMatrix<4>(m);
}

/// Both product inequalities plus the two trace conditions, each with slack >= -tol.
inline PrepTest prep_test(const StandardForm& s, double r1, double r2, double tol = kDefaultTol) {
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw InvalidInput("prep_test: squeezing parameters must be positive");
  const double p1 = s.a - 0.5 / r1, q1 = s.b - 0.5 / r2;
  const double p2 = s.a - 0.5 * r1, q2 = s.b - 0.5 * r2;
  PrepTest out;
  out.margins = {{"product_q", p1 * q1 - s.c1 * s.c1},
                 {"product_p", p2 * q2 - s.c2 * s.c2},
                 {"trace_q", p1 + q1},
                 {"trace_p", p2 + q2},
                 {"a_floor", s.a - 0.5},
                 {"b_floor", s.b - 0.5}};
  out.passed = min_margin(out.margins) >= -tol;
  return out;
}

/// Reorders a standard form so that c1 >= |c2| (q/p swap on both modes if needed).
inline StandardForm canonical(StandardForm s) {
  if (std::abs(s.c2) > std::abs(s.c1)) std::swap(s.c1, s.c2);
  if (s.c1 < 0.0) {
    s.c1 = -s.c1;
    s.c2 = -s.c2;
  }
  return s;
}

/// Squeezing at t = |c2|/c1 (r1 = 2a, r2 = 2b when c1 = 0), then the P-function of the
/// squeezed-frame state. Returns nullopt when the P-representation condition fails.
inline std::optional<PrepCertificate> prep_certificate(const StandardForm& input, double tol = kDefaultTol) {
  const StandardForm s = canonical(input);
  if (s.a < 0.5 - tol || s.b < 0.5 - tol) return std::nullopt;
  const double t = s.c1 > 0.0 ? std::min(1.0, std::abs(s.c2) / s.c1) : 0.0;
  const SqueezeParams sp = squeeze_params(std::max(s.a, 0.5), std::max(s.b, 0.5), t);
  if (!prep_test(s, sp.r1, sp.r2, tol).passed) return std::nullopt;

  PrepCertificate cert;
  cert.frame = s;
  cert.squeeze = sp;
  cert.lambda_eigs = lambda_eigs(s, sp.r1, sp.r2);
  cert.to_squeezed.s1 = squeeze(std::sqrt(sp.r1));
  cert.to_squeezed.s2 = squeeze(std::sqrt(sp.r2));
  const Matrix4 vprime = apply(cert.to_squeezed, from_standard(s)).matrix();
  cert.pfun.cov = SymMatrix<4>(vprime - 0.5 * Matrix4::identity());
  return cert;
}

/// Both sides of the coincidence of the separability and P-representation boundaries:
/// lhs = (1/t^2)(a - r1/2)(b - r2/2) at squeeze_params, rhs = c1sq_bound(a, b, t).
/// Both are evaluated without dividing by t, so t = 0 yields the limiting values.
inline std::pair<double, double> boundary_identity(double a, double b, double t) {
  detail::check_prep_domain(a, b, t, "boundary_identity");
  double lhs;
  if (t > 0.0) {
    const auto [sa, sb] = squeeze_slacks(a, b, t);
    lhs = (sa / t) * (sb / t);
  } else {
    lhs = (a - 0.25 / a) * (b - 0.25 / b);
  }
  return {lhs, c1sq_bound(a, b, t)};
}

/// Residuals of r1 = (r2 a / t + 1/2) / (a + r2 / (2t)) and its partner, multiplied
/// through by t so that t = 0 is admissible.
inline std::pair<double, double> extremality_conditions(double a, double b, double t, double r1, double r2) {
  return {r1 - (r2 * a + 0.5 * t) / (a * t + 0.5 * r2), r2 - (r1 * b + 0.5 * t) / (b * t + 0.5 * r1)};
}

/// Characteristic function exp(-lambda^T V lambda / 2) of a zero-mean Gaussian state.
inline double chi(const CovarianceMatrix& v, const Vector<4>& lam) {
  return std::exp(-0.5 * bilinear(lam, v.matrix(), lam));
}

struct PSample {
  std::vector<Vector<4>> samples;
  SymMatrix<4> cov_estimate;  // (1/n) sum (x - mean)(x - mean)^T
};

/// Draws n samples of the Gaussian P-function via the symmetric square root of cov.
inline PSample sample_p(const PFunctionParams& pf, std::size_t n, std::uint64_t seed, double tol = kDefaultTol) {
  if (min_eigenvalue(pf.cov) < -tol) throw InvalidInput("sample_p: covariance is not positive semidefinite");
  if (n == 0) throw InvalidInput("sample_p: sample count must be positive");
  const Matrix4 root = psd_sqrt(pf.cov);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  PSample out;
  out.samples.resize(n);
  Matrix4 acc;
  for (auto& x : out.samples) {
    Vector<4> z;
    for (auto& zi : z) zi = normal(rng);
    const Vector<4> dx = root * z;
    for (std::size_t i = 0; i < 4; ++i) x[i] = pf.mean[i] + dx[i];
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) acc(i, j) += dx[i] * dx[j];
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) out.cov_estimate.set(i, j, acc(i, j) / static_cast<double>(n));
  return out;
}

/// Standard error of each entry of the known-mean covariance estimator:
/// sqrt((s_ii s_jj + s_ij^2) / n).
inline Matrix4 covariance_standard_errors(const SymMatrix<4>& cov, std::size_t n) {
  Matrix4 se;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      se(i, j) = std::sqrt((cov(i, i) * cov(j, j) + cov(i, j) * cov(i, j)) / static_cast<double>(n));
  return se;
}

/// (estimate - truth) / SE per entry; 0 where both the deviation and the SE vanish.
inline Matrix4 covariance_z_scores(const SymMatrix<4>& estimate, const SymMatrix<4>& truth, std::size_t n) {
  const Matrix4 se = covariance_standard_errors(truth, n);
  Matrix4 z;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const double diff = estimate(i, j) - truth(i, j);
      if (se(i, j) > 0.0)
        z(i, j) = diff / se(i, j);
      else
        z(i, j) = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
  return z;
}

struct ExtremalSearch {
  double value = 0.0;  // max over (r1, r2) of the P-representation bound on c1^2
  double r1 = 1.0;
  double r2 = 1.0;
};

namespace detail {

// min{(a - 1/2r1)(b - 1/2r2), (a - r1/2)(b - r2/2) / t^2}; the second term is dropped at t = 0.
inline double prep_bound(double a, double b, double t, double r1, double r2) {
  const double first = (a - 0.5 / r1) * (b - 0.5 / r2);
  if (t == 0.0) return first;
  return std::min(first, (a - 0.5 * r1) * (b - 0.5 * r2) / (t * t));
}

// For fixed r1 the first term increases and the second decreases in r2, so the best r2
// sits at their crossing or at an end of [1, 2b].
inline std::pair<double, double> best_over_r2(double a, double b, double t, double r1) {
  const double hi = std::max(1.0, 2.0 * b);
  if (t == 0.0) return {prep_bound(a, b, t, r1, hi), hi};
  auto gap = [&](double r2) { return (a - 0.5 / r1) * (b - 0.5 / r2) - (a - 0.5 * r1) * (b - 0.5 * r2) / (t * t); };
  if (gap(1.0) >= 0.0) return {prep_bound(a, b, t, r1, 1.0), 1.0};
  if (gap(hi) <= 0.0) return {prep_bound(a, b, t, r1, hi), hi};
  double lo = 1.0, up = hi;
  for (int it = 0; it < 200 && up - lo > 1e-15 * up; ++it) {
    const double mid = 0.5 * (lo + up);
    (gap(mid) < 0.0 ? lo : up) = mid;
  }
  const double r2 = 0.5 * (lo + up);
  return {prep_bound(a, b, t, r1, r2), r2};
}

}  // namespace detail

/// Brute-force maximization of the P-representation bound over [1, 2a] x [1, 2b]:
/// a grid x grid scan, then a refinement along r1 of the profile max_r2 bound(r1, r2).
/// The maximum lies on the ridge where the two products cross, which runs diagonally
/// through the grid, so the profile is first sampled at every grid r1 and golden-section
/// search runs in the cells around its best sample. Independent of the closed-form
/// squeezing parameters.
inline ExtremalSearch maximize_prep_bound(double a, double b, double t, std::size_t grid = 400) {
  detail::check_prep_domain(a, b, t, "maximize_prep_bound");
  if (grid < 2) throw InvalidInput("maximize_prep_bound: grid must have at least 2 points");
  const double r1_hi = std::max(1.0, 2.0 * a), r2_hi = std::max(1.0, 2.0 * b);
  const double h1 = (r1_hi - 1.0) / static_cast<double>(grid - 1);
  const double h2 = (r2_hi - 1.0) / static_cast<double>(grid - 1);

  ExtremalSearch best{-std::numeric_limits<double>::infinity(), 1.0, 1.0};
  for (std::size_t i = 0; i < grid; ++i) {
    const double r1 = 1.0 + h1 * static_cast<double>(i);
    for (std::size_t j = 0; j < grid; ++j) {
      const double r2 = 1.0 + h2 * static_cast<double>(j);
      const double v = detail::prep_bound(a, b, t, r1, r2);
      if (v > best.value) best = {v, r1, r2};
    }
  }

  auto h = [&](double r1) { return detail::best_over_r2(a, b, t, r1).first; };
  double center = best.r1, center_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid; ++i) {
    const double r1 = 1.0 + h1 * static_cast<double>(i);
    const double v = h(r1);
    if (v > center_value) {
      center_value = v;
      center = r1;
    }
  }
  double lo = std::max(1.0, center - h1), hi = std::min(r1_hi, center + h1);
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = h(x1), f2 = h(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = h(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = h(x1);
    }
  }
  for (double r1 : {0.5 * (lo + hi), center, best.r1}) {
    const auto [v, r2] = detail::best_over_r2(a, b, t, r1);
    if (v > best.value) best = {v, r1, r2};
  }
  return best;
}

}  // namespace gaussep

#endif  // GAUSSEP_PREP_HPP_
