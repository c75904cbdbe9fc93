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

// Convergence-rate machinery: beta densities concentrated near a known
// minimizer x*, the Handelman degree k_r they induce, and log-log slope fits.
//
// For precision r, coordinate i gets shapes (eta*_i, beta*_i) with mean
// eta*/(eta* + beta*) within 1/r of x*_i; the density
// x^{eta*-1} (1-x)^{beta*-1} then has Handelman degree
// k_r = sum_i (eta*_i + beta*_i - 2), so E f(X) >= f_{k_r}^H >= f(x*).

#ifndef HBOUND_RATES_HPP_
#define HBOUND_RATES_HPP_

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hbound/error.hpp"
#include "hbound/moments.hpp"
#include "hbound/polynomial.hpp"
#include "hbound/test_functions.hpp"

namespace hbound {

struct Fraction {
  long p = 0;
  long q = 1;
};

// p/q with |x - p/q| < eps/q, 1 <= q <= 1/eps and 0 <= p <= q: the last
// continued-fraction convergent of x whose denominator is at most
// floor(1/eps).
inline Fraction dirichlet_approx(double x, double eps) {
  if (!(x > 0.0 && x < 1.0))
    throw InvalidArgument("dirichlet_approx needs x in (0,1)");
  if (!(eps > 0.0 && eps <= 1.0))
    throw InvalidArgument("dirichlet_approx needs eps in (0,1]");
  const long qmax = static_cast<long>(std::floor(1.0 / eps + 1e-9));
  // Convergents h/k with h_{-1}=1, k_{-1}=0, h_0=a_0=0, k_0=1.
  long h_prev = 1, k_prev = 0, h = 0, k = 1;
  double rest = x;  // fractional part still to expand
  for (int it = 0; it < 64; ++it) {
    if (rest < 1e-15) break;
    const double inv = 1.0 / rest;
    const double a_d = std::floor(inv);
    if (a_d > 1e15) break;
    const long a = static_cast<long>(a_d);
    const long h_next = a * h + h_prev;
    const long k_next = a * k + k_prev;
    if (k_next > qmax) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    rest = inv - a_d;
  }
  return {h, k};
}

enum class ShapeCase { kI, kII, kIII, kIV, kV, kVI };

inline const char* to_string(ShapeCase c) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi"};
  return names[static_cast<int>(c)];
}

struct ShapeAssignment {
  std::vector<long> eta_star;
  std::vector<long> beta_star;
  int r = 1;
  long k_r = 0;
  std::vector<ShapeCase> cases;

  // Shapes minus one: the Handelman exponents of x^{eta*-1}(1-x)^{beta*-1}.
  ExponentPair exponent_pair() const {
    std::vector<int> e(eta_star.size()), b(beta_star.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = static_cast<int>(eta_star[i] - 1);
      b[i] = static_cast<int>(beta_star[i] - 1);
    }
    return ExponentPair(std::move(e), std::move(b));
  }
};

// Shape parameters for precision r. Coordinates with a supplied fraction p/q
// are treated as exactly rational; all others go through dirichlet_approx
// with eps = 1/r.
inline ShapeAssignment shape_parameters(
    std::span<const double> x_star, int r,
    std::span<const std::optional<ExactCoordinate>> rationality = {}) {
  if (r < 1) throw InvalidArgument("precision r must be >= 1");
  if (!rationality.empty() && rationality.size() != x_star.size())
    throw InvalidArgument("rationality list length does not match x*");
  const std::size_t n = x_star.size();
  ShapeAssignment s;
  s.r = r;
  s.eta_star.resize(n);
  s.beta_star.resize(n);
  s.cases.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = x_star[i];
    if (!(x >= 0.0 && x <= 1.0))
      throw InvalidArgument("x* must lie in [0,1]^n");
    const bool rational = !rationality.empty() && rationality[i].has_value();
    long p, q;
    if (rational) {
      p = rationality[i]->p;
      q = rationality[i]->q;
      if (q < 1 || p < 0 || p > q)
        throw InvalidArgument("supplied fraction must satisfy 0 <= p <= q, q >= 1");
      const long g = std::gcd(p, q);
      p /= g;
      q /= g;
      if (std::abs(x - static_cast<double>(p) / q) > 1e-12)
        throw InvalidArgument("supplied fraction " + std::to_string(p) + "/" +
                              std::to_string(q) + " does not match x*_" +
                              std::to_string(i + 1));
      if (p == 0) {
        s.cases[i] = ShapeCase::kI;
        s.eta_star[i] = 1;
        s.beta_star[i] = r;
      } else if (p == q) {
        s.cases[i] = ShapeCase::kII;
        s.eta_star[i] = r;
        s.beta_star[i] = 1;
      } else {
        s.cases[i] = ShapeCase::kIII;
        s.eta_star[i] = static_cast<long>(r) * p;
        s.beta_star[i] = static_cast<long>(r) * (q - p);
      }
      continue;
    }
    if (x == 0.0 || x == 1.0)
      throw InvalidArgument("x*_" + std::to_string(i + 1) +
                            " is an endpoint; supply it as a fraction");
    const Fraction fr = dirichlet_approx(x, 1.0 / r);
    p = fr.p;
    q = fr.q;
    if (p == 0) {
      s.cases[i] = ShapeCase::kIV;
      s.eta_star[i] = 1;
      s.beta_star[i] = r;
    } else if (p == q) {
      s.cases[i] = ShapeCase::kV;
      s.eta_star[i] = r;
      s.beta_star[i] = 1;
    } else {
      s.cases[i] = ShapeCase::kVI;
      s.eta_star[i] = static_cast<long>(r) * p;
      s.beta_star[i] = static_cast<long>(r) * (q - p);
    }
  }
  s.k_r = 0;
  for (std::size_t i = 0; i < n; ++i)
    s.k_r += s.eta_star[i] + s.beta_star[i] - 2;
  return s;
}

// E f(X) with X_i ~ beta(eta*_i, beta*_i) independent.
inline double expected_value_at_shapes(const Polynomial& f,
                                       const ShapeAssignment& s) {
  if (static_cast<int>(s.eta_star.size()) != f.n_vars())
    throw InvalidArgument("shape assignment dimension does not match polynomial");
  double v = 0.0;
  for (const auto& t : f.terms()) {
    double m = t.coef;
    for (int i = 0; i < f.n_vars(); ++i)
      m *= beta_raw_moment(static_cast<double>(s.eta_star[i]),
                           static_cast<double>(s.beta_star[i]), t.alpha[i]);
    v += m;
  }
  return v;
}

// Least-squares slope of log(gap) against log(k).
inline double empirical_rate(std::span<const double> ks,
                             std::span<const double> gaps) {
  if (ks.size() != gaps.size())
    throw InvalidArgument("ks and gaps must have equal length");
  if (ks.size() < 3) throw InvalidArgument("need at least 3 points");
  const std::size_t m = ks.size();
  double sx = 0, sy = 0;
  std::vector<double> lx(m), ly(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(ks[i] > 0)) throw InvalidArgument("k values must be positive");
    if (!(gaps[i] > 0))
      throw InvalidArgument(
          "nonpositive gap at k = " + std::to_string(ks[i]) +
          " (the bound may have converged exactly; drop such k)");
    lx[i] = std::log(ks[i]);
    ly[i] = std::log(gaps[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / m, my = sy / m;
  double num = 0, den = 0;
  for (std::size_t i = 0; i < m; ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  if (den == 0) throw InvalidArgument("k values must not all be equal");
  return num / den;
}

inline double empirical_rate(std::span<const int> ks,
                             std::span<const double> gaps) {
  std::vector<double> kd(ks.begin(), ks.end());
  return empirical_rate(std::span<const double>(kd), gaps);
}

}  // namespace hbound

#endif  // HBOUND_RATES_HPP_
