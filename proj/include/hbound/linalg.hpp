// Copyright 2026 The hbound Authors.
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

// Small dense symmetric linear algebra: just enough for the symmetric-definite
// pencil Ax = lambda Bx. Self-contained on purpose; orders stay below ~1000.

#ifndef HBOUND_LINALG_HPP_
#define HBOUND_LINALG_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "hbound/error.hpp"

namespace hbound {

// Square row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
  }

  // max |a_ij - a_ji| / max(1, ||A||_F).
  double asymmetry() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    return m / std::max(1.0, frobenius_norm());
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

// Lower-triangular L with B = L L^T. Throws ConditioningError when a pivot is
// not safely positive.
inline Matrix cholesky(const Matrix& b) {
  const std::size_t n = b.size();
  Matrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = b(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 64.0 * std::numeric_limits<double>::epsilon() *
                  std::abs(b(j, j)))) {
      throw ConditioningError(
          "Gram matrix is numerically indefinite at pivot " +
          std::to_string(j) + " of " + std::to_string(n) +
          "; use the orthonormal basis or a smaller degree");
    }
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = b(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return l;
}

// L^{-1} A L^{-T} for lower-triangular L, symmetrized.
inline Matrix congruence_reduce(const Matrix& a, const Matrix& l) {
  const std::size_t n = a.size();
  // Y = L^{-1} A, column by column.
  Matrix y(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = a(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y(k, c);
      y(i, c) = s / l(i, i);
    }
  }
  // C = Y L^{-T}, i.e. C^T = L^{-1} Y^T; solve row by row.
  Matrix c(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = y(r, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(j, k) * c(r, k);
      c(r, j) = s / l(j, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double m = 0.5 * (c(i, j) + c(j, i));
      c(i, j) = m;
      c(j, i) = m;
    }
  return c;
}

// All eigenvalues (ascending) of a symmetric matrix by cyclic Jacobi. Sweeps
// until the off-diagonal Frobenius norm is below tol * ||A||_F.
inline std::vector<double> jacobi_eigenvalues(Matrix a, double tol = 1e-12,
                                              int max_sweeps = 100) {
  const std::size_t n = a.size();
  const double norm = a.frobenius_norm();
  auto off = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  for (int sweep = 0; sweep < max_sweeps && off() > tol * norm; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Householder reduction to tridiagonal form (diagonal d, subdiagonal e with
// e[0] unused).
inline void tridiagonalize(Matrix a, std::vector<double>& d,
                           std::vector<double>& e) {
  const std::size_t n = a.size();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  std::vector<double> v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    // Annihilate a(k+2.., k).
    double alpha = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha += a(i, k) * a(i, k);
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) continue;
    if (a(k + 1, k) > 0) alpha = -alpha;
    std::fill(v.begin(), v.end(), 0.0);
    v[k + 1] = a(k + 1, k) - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;
    // A <- H A H with H = I - 2 v v^T / (v^T v).
    const double beta = 2.0 / vnorm2;
    for (std::size_t i = k; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      p[i] = beta * s;
    }
    double vp = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vp += v[i] * p[i];
    const double kappa = 0.5 * beta * vp;
    for (std::size_t i = k; i < n; ++i) p[i] -= kappa * (i > k ? v[i] : 0.0);
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        a(i, j) -= v[i] * p[j] + p[i] * v[j];
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  for (std::size_t i = 1; i < n; ++i) e[i] = a(i, i - 1);
}

// Smallest eigenvalue of the symmetric tridiagonal (d, e) by Sturm-sequence
// bisection on the Gershgorin interval.
inline double tridiagonal_min_eigenvalue(const std::vector<double>& d,
                                         const std::vector<double>& e) {
  const std::size_t n = d.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(e[i]) : 0.0) +
                     (i + 1 < n ? std::abs(e[i + 1]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const double tiny = std::numeric_limits<double>::min();
  // Number of eigenvalues < x.
  auto count_below = [&](double x) {
    std::size_t c = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      q = d[i] - x - (i > 0 ? e[i] * e[i] / q : 0.0);
      if (q == 0.0) q = -tiny;
      if (q < 0) ++c;
    }
    return c;
  };
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

enum class EigenMethod { kAuto, kJacobi, kTridiagonal };

// Smallest eigenvalue of a symmetric matrix. kAuto uses Jacobi up to order
// 200 and Householder + bisection beyond (Jacobi's O(n^3) per sweep becomes
// the bottleneck there).
inline double symmetric_min_eigenvalue(const Matrix& c,
                                       EigenMethod method = EigenMethod::kAuto) {
  if (c.size() == 0) throw InvalidArgument("empty matrix");
  if (method == EigenMethod::kAuto)
    method = c.size() <= 200 ? EigenMethod::kJacobi : EigenMethod::kTridiagonal;
  if (method == EigenMethod::kJacobi) return jacobi_eigenvalues(c).front();
  std::vector<double> d, e;
  tridiagonalize(c, d, e);
  return tridiagonal_min_eigenvalue(d, e);
}

}  // namespace hbound

#endif  // HBOUND_LINALG_HPP_
