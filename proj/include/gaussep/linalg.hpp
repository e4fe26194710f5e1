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

// Small dense matrices and the numerical kernel shared by every module:
// cyclic Jacobi eigensolver, PSD test and bracketed bisection.

#ifndef GAUSSEP_LINALG_HPP_
#define GAUSSEP_LINALG_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "gaussep/errors.hpp"

namespace gaussep {

inline constexpr double kDefaultTol = 1e-10;

/// Dense row-major N x N matrix of doubles.
template <std::size_t N>
struct Matrix {
  std::array<double, N * N> data{};

  static constexpr std::size_t size() { return N; }

  constexpr double& operator()(std::size_t i, std::size_t j) { return data[i * N + j]; }
  constexpr double operator()(std::size_t i, std::size_t j) const { return data[i * N + j]; }

  static constexpr Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  constexpr Matrix transpose() const {
    Matrix t;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend constexpr Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const double xik = x(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend constexpr Matrix operator+(Matrix x, const Matrix& y) {
    for (std::size_t i = 0; i < N * N; ++i) x.data[i] += y.data[i];
    return x;
  }

  friend constexpr Matrix operator-(Matrix x, const Matrix& y) {
    for (std::size_t i = 0; i < N * N; ++i) x.data[i] -= y.data[i];
    return x;
  }

  friend constexpr Matrix operator*(double s, Matrix x) {
    for (auto& v : x.data) v *= s;
    return x;
  }

  friend constexpr bool operator==(const Matrix&, const Matrix&) = default;
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;
using Matrix8 = Matrix<8>;
template <std::size_t N>
using Vector = std::array<double, N>;

template <std::size_t N>
Vector<N> operator*(const Matrix<N>& m, const Vector<N>& v) {
  Vector<N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += m(i, j) * v[j];
  return r;
}

template <std::size_t N>
double dot(const Vector<N>& x, const Vector<N>& y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

/// x^T M y
template <std::size_t N>
double bilinear(const Vector<N>& x, const Matrix<N>& m, const Vector<N>& y) {
  return dot(x, m * y);
}

template <std::size_t N>
double max_abs(const Matrix<N>& m) {
  double r = 0.0;
  for (double v : m.data) r = std::max(r, std::abs(v));
  return r;
}

/// Infinity norm (maximum absolute row sum).
template <std::size_t N>
double norm_inf(const Matrix<N>& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < N; ++j) s += std::abs(m(i, j));
    r = std::max(r, s);
  }
  return r;
}

template <std::size_t N>
bool all_finite(const Matrix<N>& m) {
  return std::all_of(m.data.begin(), m.data.end(), [](double v) { return std::isfinite(v); });
}

inline double det(const Matrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

/// Real symmetric matrix. Symmetry is exact: every write goes to both (i,j) and (j,i),
/// and construction from a general matrix averages it with its transpose.
template <std::size_t N>
class SymMatrix {
  static_assert(N == 2 || N == 4 || N == 8, "SymMatrix supports dimensions 2, 4 and 8");

 public:
  SymMatrix() = default;

  explicit SymMatrix(const Matrix<N>& m) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j) set(i, j, i == j ? m(i, i) : 0.5 * (m(i, j) + m(j, i)));
  }

  static SymMatrix identity() { return SymMatrix(Matrix<N>::identity()); }
  static SymMatrix diagonal(const Vector<N>& d) { return SymMatrix(Matrix<N>::diagonal(d)); }

  static constexpr std::size_t dimension() { return N; }

  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }

  const Matrix<N>& matrix() const { return m_; }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  Matrix<N> m_{};
};

template <std::size_t N>
struct EigenDecomposition {
  Vector<N> eigenvalues{};  // ascending
  Matrix<N> eigenvectors{};  // column k belongs to eigenvalues[k]
};

/// Cyclic Jacobi rotations. Converges quadratically; for N <= 8 a handful of sweeps
/// reach machine precision.
template <std::size_t N>
EigenDecomposition<N> sym_eigen(const SymMatrix<N>& input) {
  Matrix<N> a = input.matrix();
  if (!all_finite(a)) throw InvalidInput("sym_eigen: non-finite matrix entry");
  Matrix<N> v = Matrix<N>::identity();

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      diag += a(i, i) * a(i, i);
      for (std::size_t j = i + 1; j < N; ++j) off += a(i, j) * a(i, j);
    }
    if (off == 0.0 || off <= 1e-36 * diag) break;

    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  EigenDecomposition<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < N; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

template <std::size_t N>
double min_eigenvalue(const SymMatrix<N>& m) {
  return sym_eigen(m).eigenvalues[0];
}

/// True iff the smallest eigenvalue is >= -tol.
template <std::size_t N>
bool is_psd(const SymMatrix<N>& m, double tol = kDefaultTol) {
  if (!(tol >= 0.0)) throw InvalidInput("is_psd: tolerance must be non-negative");
  return min_eigenvalue(m) >= -tol;
}

/// Symmetric square root Q sqrt(max(L,0)) Q^T; negative eigenvalues are clamped to zero.
template <std::size_t N>
Matrix<N> psd_sqrt(const SymMatrix<N>& m) {
  const auto ed = sym_eigen(m);
  Matrix<N> r;
  for (std::size_t k = 0; k < N; ++k) {
    const double s = std::sqrt(std::max(ed.eigenvalues[k], 0.0));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        r(i, j) += ed.eigenvectors(i, k) * s * ed.eigenvectors(j, k);
  }
  return r;
}

/// Bisection on a bracketing interval. Returns x with |f(x)| <= tol or a final
/// interval narrower than tol.
template <class F>
double bisect_root(F&& f, double lo, double hi, double tol = 1e-12) {
  if (!(tol > 0.0)) throw InvalidInput("bisect_root: tolerance must be positive");
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  const double fhi = f(hi);
  if (std::abs(flo) <= tol) return lo;
  if (std::abs(fhi) <= tol) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) throw BracketError("bisect_root: no sign change on interval");

  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) <= tol || hi - lo <= tol || mid == lo || mid == hi) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace gaussep

#endif  // GAUSSEP_LINALG_HPP_
