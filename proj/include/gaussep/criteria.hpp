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

// Physicality, separability and witness evaluations on two-mode covariance matrices.
//
// Every criterion reports its slack ("margin") rather than a bare boolean. A margin
// >= -tol counts as satisfied, so states on a boundary fall on the satisfied side.

#ifndef GAUSSEP_CRITERIA_HPP_
#define GAUSSEP_CRITERIA_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gaussep/errors.hpp"
#include "gaussep/linalg.hpp"
#include "gaussep/standard_form.hpp"
#include "gaussep/symplectic.hpp"

namespace gaussep {

/// Coefficients of X(d, f) = d.(q1, p1) + f.(q2, p2) and X(g, h).
struct WitnessVectors {
  Vector<2> d{}, f{}, g{}, h{};

  Vector<8> flat() const { return {d[0], d[1], f[0], f[1], g[0], g[1], h[0], h[1]}; }
  static WitnessVectors from_flat(const Vector<8>& w) {
    return {{w[0], w[1]}, {w[2], w[3]}, {w[4], w[5]}, {w[6], w[7]}};
  }

  /// d = (1, 0), f = (-1, 0), g = (0, 1), h = (0, 1): the variances of q1 - q2 and p1 + p2.
  static WitnessVectors epr() { return {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, 1.0}}; }
};

enum class Separability { yes, no, boundary };

inline const char* to_string(Separability s) {
  switch (s) {
    case Separability::yes: return "yes";
    case Separability::no: return "no";
    case Separability::boundary: return "boundary";
  }
  return "?";
}

struct NamedMargin {
  std::string name;
  double value = 0.0;
};

inline double min_margin(const std::vector<NamedMargin>& ms) {
  double r = std::numeric_limits<double>::infinity();
  for (const auto& m : ms) r = std::min(r, m.value);
  return r;
}

inline Separability classify(double margin, double tol) {
  if (margin < -tol) return Separability::no;
  if (margin <= tol) return Separability::boundary;
  return Separability::yes;
}

struct PhysicalityResult {
  bool physical = false;
  double margin = 0.0;  // 4(ab-c1^2)(ab-c2^2) - [(a^2+b^2) + 2 c1 c2 - 1/4]
  std::vector<NamedMargin> margins;
};

struct Verdict {
  bool physical = false;
  Separability separable = Separability::no;
  std::vector<NamedMargin> margins;

  /// yes or boundary.
  bool is_separable() const { return physical && separable != Separability::no; }
  double min_margin() const { return gaussep::min_margin(margins); }
};

/// Uncertainty principle V + (i/2) Omega >= 0 on a standard form. The determinant
/// inequality alone is not sufficient; positivity of V and the sum of squared symplectic
/// eigenvalues (a^2 + b^2 + 2 c1 c2 >= 1/2) select the physical root.
inline PhysicalityResult physicality(const StandardForm& s, double tol = kDefaultTol) {
  if (!(s.a > 0.0) || !(s.b > 0.0)) throw InvalidInput("physicality: a and b must be positive");
  const double ab = s.a * s.b;
  PhysicalityResult r;
  r.margin = 4.0 * (ab - s.c1 * s.c1) * (ab - s.c2 * s.c2) -
             (s.a * s.a + s.b * s.b + 2.0 * s.c1 * s.c2 - 0.25);
  r.margins = {{"determinant", r.margin},
               {"a_floor", s.a - 0.5},
               {"b_floor", s.b - 0.5},
               {"positivity_c1", ab - s.c1 * s.c1},
               {"positivity_c2", ab - s.c2 * s.c2},
               {"symplectic_sum", s.a * s.a + s.b * s.b + 2.0 * s.c1 * s.c2 - 0.5}};
  r.physical = min_margin(r.margins) >= -tol;
  return r;
}

/// Real 8x8 embedding [[V, -Omega/2], [Omega/2, V]] of V + (i/2) Omega.
inline SymMatrix<8> uncertainty_embedding(const CovarianceMatrix& v) {
  Matrix8 e;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      e(i, j) = e(i + 4, j + 4) = v(i, j);
      e(i, j + 4) = -0.5 * kOmega(i, j);
      e(i + 4, j) = 0.5 * kOmega(i, j);
    }
  return SymMatrix<8>(e);
}

inline double uncertainty_min_eigenvalue(const CovarianceMatrix& v) {
  return min_eigenvalue(uncertainty_embedding(v));
}

inline bool physical_by_embedding(const CovarianceMatrix& v, double tol = kDefaultTol) {
  return is_psd(uncertainty_embedding(v), tol);
}

/// Positive partial transpose: the mirrored matrix must itself be physical.
inline bool ppt_by_embedding(const CovarianceMatrix& v, double tol = kDefaultTol) {
  return is_psd(uncertainty_embedding(mirror_c2(v)), tol);
}

/// sqrt((2a-1)(2b-1)) - (|c1| + |c2|)
inline double dgcz_sum_bound(const StandardForm& s) {
  const double prod = std::max(0.0, (2.0 * s.a - 1.0) * (2.0 * s.b - 1.0));
  return std::sqrt(prod) - (std::abs(s.c1) + std::abs(s.c2));
}

/// Exact two-mode Gaussian criterion:
///   4(ab-c1^2)(ab-c2^2) >= (a^2+b^2) + 2|c1 c2| - 1/4  and  sqrt((2a-1)(2b-1)) >= |c1|+|c2|.
inline Verdict simon_separable(const StandardForm& s, double tol = kDefaultTol) {
  if (!physicality(s, tol).physical) throw NotPhysical("simon_separable: state is not physical");
  const double ab = s.a * s.b;
  Verdict v;
  v.physical = true;
  v.margins = {{"simon", 4.0 * (ab - s.c1 * s.c1) * (ab - s.c2 * s.c2) -
                             (s.a * s.a + s.b * s.b + 2.0 * std::abs(s.c1 * s.c2) - 0.25)},
               {"sum_bound", dgcz_sum_bound(s)}};
  v.separable = classify(v.min_margin(), tol);
  return v;
}

namespace detail {

inline double witness_quadratic(const CovarianceMatrix& v, const WitnessVectors& w) {
  const Vector<4> x{w.d[0], w.d[1], w.f[0], w.f[1]};
  const Vector<4> y{w.g[0], w.g[1], w.h[0], w.h[1]};
  return bilinear(x, v.matrix(), x) + bilinear(y, v.matrix(), y);
}

}  // namespace detail

/// Separable-state bound with the nonnegative tilde-V terms dropped:
/// quadratic form - (|d^T J g| + |f^T J h|). Negative certifies inseparability.
inline double witness_value(const CovarianceMatrix& v, const WitnessVectors& w) {
  return detail::witness_quadratic(v, w) -
         (std::abs(bilinear(w.d, kJ, w.g)) + std::abs(bilinear(w.f, kJ, w.h)));
}

/// Kennard relation for arbitrary states: quadratic form - |d^T J g + f^T J h|.
/// Negative certifies that V is not physical.
inline double kennard_value(const CovarianceMatrix& v, const WitnessVectors& w) {
  return detail::witness_quadratic(v, w) - std::abs(bilinear(w.d, kJ, w.g) + bilinear(w.f, kJ, w.h));
}

/// Upper bound on c1^2 for separability at t = |c2|/|c1|. Uses the rationalised form
/// (4a^2-1)(4b^2-1) / (4 [P + 2 sqrt(D)]) of
///   (1/4t^2) { P - 2 sqrt(D) },  P = 2ab(1+t^2) + t,  D = a^2 b^2 (1-t^2)^2 + t(a+bt)(at+b),
/// which is free of cancellation and continuous at t = 0.
inline double c1sq_bound(double a, double b, double t) {
  if (!(a >= 0.5) || !(b >= 0.5)) throw InvalidInput("c1sq_bound: requires a, b >= 1/2");
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("c1sq_bound: t must lie in [0, 1]");
  const double p = 2.0 * a * b * (1.0 + t * t) + t;
  const double u = a * b * (1.0 - t * t);
  const double d = u * u + t * (a + b * t) * (a * t + b);
  return (4.0 * a * a - 1.0) * (4.0 * b * b - 1.0) / (4.0 * (p + 2.0 * std::sqrt(d)));
}

struct WitnessSearchOptions {
  int restarts = 64;
  int iterations = 400;  // coordinate-descent passes per restart
  double tol = kDefaultTol;
};

/// Random restarts plus coordinate descent of witness_value over the unit sphere in R^8.
/// Returns the best vectors when their margin is below -tol.
inline std::optional<WitnessVectors> search_witness(const CovarianceMatrix& v, std::uint64_t seed,
                                                    const WitnessSearchOptions& opt = {}) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;

  auto normalize = [](Vector<8>& w) {
    const double n = std::sqrt(dot(w, w));
    for (auto& x : w) x /= n;
  };
  auto value = [&](const Vector<8>& w) { return witness_value(v, WitnessVectors::from_flat(w)); };

  Vector<8> best{};
  double best_value = std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < opt.restarts; ++restart) {
    Vector<8> w;
    for (auto& x : w) x = normal(rng);
    normalize(w);
    double cur = value(w);
    double step = 0.5;
    for (int pass = 0; pass < opt.iterations && step > 1e-12; ++pass) {
      bool improved = false;
      for (std::size_t k = 0; k < 8; ++k) {
        for (double dir : {1.0, -1.0}) {
          Vector<8> trial = w;
          trial[k] += dir * step;
          normalize(trial);
          const double tv = value(trial);
          if (tv < cur) {
            w = trial;
            cur = tv;
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (cur < best_value) {
      best_value = cur;
      best = w;
    }
  }
  if (best_value < -opt.tol) return WitnessVectors::from_flat(best);
  return std::nullopt;
}

}  // namespace gaussep

#endif  // GAUSSEP_CRITERIA_HPP_
