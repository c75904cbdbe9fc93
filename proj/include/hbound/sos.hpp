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

// Upper bound from sum-of-squares densities of degree <= 2k:
//
//   f_k^sos = min { int f s^2 : int s^2 = 1, deg s <= k }
//           = smallest lambda with A x = lambda B x,
//
// where A_{ab} = int f p_a p_b and B_{ab} = int p_a p_b over [0,1]^n for a
// polynomial basis {p_a} of degree <= k.

#ifndef HBOUND_SOS_HPP_
#define HBOUND_SOS_HPP_

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "hbound/error.hpp"
#include "hbound/linalg.hpp"
#include "hbound/polynomial.hpp"

namespace hbound {

enum class Basis { kMonomial, kOrthonormal };

struct MomentPencil {
  Matrix A;
  Matrix B;
  int basis_degree = 0;
  Basis basis = Basis::kOrthonormal;
  std::vector<Exponent> basis_index;
};

// N^n_{<=k} in graded-lex order: degree ascending, then lexicographically
// descending within a degree, e.g. 1, x1, x2, x1^2, x1x2, x2^2.
inline std::vector<Exponent> graded_lex_exponents(int n, int k) {
  if (n < 1) throw InvalidArgument("need n >= 1");
  if (k < 0) throw InvalidArgument("need k >= 0");
  std::vector<Exponent> out;
  for (int d = 0; d <= k; ++d) {
    Exponent e(n, 0);
    e[0] = d;
    for (;;) {
      out.push_back(e);
      int i = n - 2;
      while (i >= 0 && e[i] == 0) --i;
      if (i < 0) break;
      int tail = 0;
      for (int j = i + 1; j < n; ++j) {
        tail += e[j];
        e[j] = 0;
      }
      --e[i];
      e[i + 1] = tail + 1;
    }
  }
  return out;
}

// Gauss-Legendre nodes and weights on [0,1]; exact for degree <= 2m-1.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(
    int m) {
  if (m < 1) throw InvalidArgument("need at least one quadrature node");
  std::vector<double> x(m), w(m);
  for (int i = 0; i < m; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= m; ++j) {
        const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    // Map [-1,1] -> [0,1].
    x[i] = 0.5 * (t + 1.0);
    w[i] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
  return {x, w};
}

namespace detail {

// M[delta][a][b] = int_0^1 x^delta P_a(x) P_b(x) dx for the orthonormal
// shifted Legendre polynomials P_a(x) = sqrt(2a+1) L_a(2x-1).
inline std::vector<std::vector<std::vector<double>>> legendre_moment_tensor(
    int max_delta, int k) {
  const int m = (max_delta + 2 * k) / 2 + 1;
  auto [x, w] = gauss_legendre(m);
  std::vector<std::vector<double>> P(m, std::vector<double>(k + 1));
  for (int q = 0; q < m; ++q) {
    const double t = 2.0 * x[q] - 1.0;
    double l0 = 1.0, l1 = t;
    for (int a = 0; a <= k; ++a) {
      double la;
      if (a == 0) {
        la = 1.0;
      } else if (a == 1) {
        la = t;
      } else {
        la = ((2.0 * a - 1.0) * t * l1 - (a - 1.0) * l0) / a;
        l0 = l1;
        l1 = la;
      }
      P[q][a] = std::sqrt(2.0 * a + 1.0) * la;
    }
  }
  std::vector<std::vector<std::vector<double>>> M(
      max_delta + 1, std::vector<std::vector<double>>(
                         k + 1, std::vector<double>(k + 1, 0.0)));
  for (int d = 0; d <= max_delta; ++d)
    for (int a = 0; a <= k; ++a)
      for (int b = a; b <= k; ++b) {
        double s = 0.0;
        for (int q = 0; q < m; ++q)
          s += w[q] * std::pow(x[q], d) * P[q][a] * P[q][b];
        M[d][a][b] = s;
        M[d][b][a] = s;
      }
  return M;
}

}  // namespace detail

inline MomentPencil build_moment_pencil(const Polynomial& f, int k,
                                        Basis basis = Basis::kOrthonormal) {
  const int n = f.n_vars();
  MomentPencil p;
  p.basis_degree = k;
  p.basis = basis;
  p.basis_index = graded_lex_exponents(n, k);
  const std::size_t N = p.basis_index.size();
  p.A = Matrix(N);
  p.B = Matrix(N);
  const auto& idx = p.basis_index;

  if (basis == Basis::kMonomial) {
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = r; c < N; ++c) {
        double b = 1.0;
        for (int i = 0; i < n; ++i) b /= idx[r][i] + idx[c][i] + 1.0;
        double a = 0.0;
        for (const auto& t : f.terms()) {
          double m = t.coef;
          for (int i = 0; i < n; ++i)
            m /= idx[r][i] + idx[c][i] + t.alpha[i] + 1.0;
          a += m;
        }
        p.A(r, c) = p.A(c, r) = a;
        p.B(r, c) = p.B(c, r) = b;
      }
    }
    return p;
  }

  int max_delta = 0;
  for (int i = 0; i < n; ++i) max_delta = std::max(max_delta, f.max_exponent(i));
  const auto M = detail::legendre_moment_tensor(max_delta, k);
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = r; c < N; ++c) {
      double b = 1.0;
      for (int i = 0; i < n; ++i) b *= M[0][idx[r][i]][idx[c][i]];
      double a = 0.0;
      for (const auto& t : f.terms()) {
        double m = t.coef;
        for (int i = 0; i < n && m != 0.0; ++i)
          m *= M[t.alpha[i]][idx[r][i]][idx[c][i]];
        a += m;
      }
      p.A(r, c) = p.A(c, r) = a;
      p.B(r, c) = p.B(c, r) = b;
    }
  }
  return p;
}

// min lambda with A x = lambda B x, via B = L L^T and the symmetric
// eigenproblem for L^{-1} A L^{-T}.
inline double smallest_generalized_eigenvalue(
    const MomentPencil& p, EigenMethod method = EigenMethod::kAuto) {
  const Matrix L = cholesky(p.B);
  return symmetric_min_eigenvalue(congruence_reduce(p.A, L), method);
}

inline double f_sos(const Polynomial& f, int k,
                    Basis basis = Basis::kOrthonormal,
                    EigenMethod method = EigenMethod::kAuto) {
  if (k < 0) throw InvalidArgument("degree k must be >= 0");
  if (f.is_zero()) return 0.0;
  return smallest_generalized_eigenvalue(build_moment_pencil(f, k, basis),
                                         method);
}

}  // namespace hbound

#endif  // HBOUND_SOS_HPP_
