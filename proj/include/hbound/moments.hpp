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

// Moments of the Lebesgue measure on [0,1]^n against x^eta (1-x)^beta.
//
// The bound code never forms gamma(eta, beta) itself: it only needs ratios
// gamma(eta + alpha, beta) / gamma(eta, beta), which telescope into products of
// small factors (eta_i + t) / (eta_i + beta_i + 1 + t) and stay well inside
// double range for any practical degree.

#ifndef HBOUND_MOMENTS_HPP_
#define HBOUND_MOMENTS_HPP_

#include <cmath>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hbound/error.hpp"
#include "hbound/polynomial.hpp"

namespace hbound {

using Rational = boost::multiprecision::cpp_rational;

// Exponents of the density x^eta (1-x)^beta.
struct ExponentPair {
  std::vector<int> eta;
  std::vector<int> beta;

  ExponentPair() = default;
  ExponentPair(std::vector<int> e, std::vector<int> b)
      : eta(std::move(e)), beta(std::move(b)) {
    if (eta.size() != beta.size())
      throw InvalidArgument("eta and beta must have equal length");
    for (std::size_t i = 0; i < eta.size(); ++i)
      if (eta[i] < 0 || beta[i] < 0)
        throw InvalidArgument("exponent pair entries must be nonnegative");
  }
  // Zero density exponents in n variables (the uniform density).
  static ExponentPair uniform(int n) {
    return ExponentPair(std::vector<int>(n, 0), std::vector<int>(n, 0));
  }

  int n() const noexcept { return static_cast<int>(eta.size()); }
  int degree() const noexcept {
    int s = 0;
    for (std::size_t i = 0; i < eta.size(); ++i) s += eta[i] + beta[i];
    return s;
  }

  // Lexicographic on the concatenation (eta_1..eta_n, beta_1..beta_n).
  friend auto operator<=>(const ExponentPair& a, const ExponentPair& b) {
    if (auto c = a.eta <=> b.eta; c != 0) return c;
    return a.beta <=> b.beta;
  }
  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

inline std::string to_string(const ExponentPair& p) {
  std::string s = "eta=(";
  for (int i = 0; i < p.n(); ++i) s += (i ? "," : "") + std::to_string(p.eta[i]);
  s += ") beta=(";
  for (int i = 0; i < p.n(); ++i)
    s += (i ? "," : "") + std::to_string(p.beta[i]);
  return s + ")";
}

// \int_0^1 t^i (1-t)^j dt = i! j! / (i+j+1)!, via log-gamma.
inline double univariate_moment(int i, int j) {
  if (i < 0 || j < 0) throw InvalidArgument("moment exponents must be >= 0");
  return std::exp(std::lgamma(i + 1.0) + std::lgamma(j + 1.0) -
                  std::lgamma(i + j + 2.0));
}

// gamma(eta, beta) on the unit box. Diagnostics only; see moment_ratio.
inline double gamma_box(const ExponentPair& p) {
  double log_sum = 0.0;
  for (int i = 0; i < p.n(); ++i)
    log_sum += std::lgamma(p.eta[i] + 1.0) + std::lgamma(p.beta[i] + 1.0) -
               std::lgamma(p.eta[i] + p.beta[i] + 2.0);
  return std::exp(log_sum);
}

// One coordinate of moment_ratio, for real shapes eta, beta >= 0:
// prod_{t=1}^{a} (eta + t) / (eta + beta + 1 + t).
inline double coordinate_ratio(double eta, double beta, int a) {
  double v = 1.0;
  for (int t = 1; t <= a; ++t) v *= (eta + t) / (eta + beta + 1.0 + t);
  return v;
}

// gamma(eta + alpha, beta) / gamma(eta, beta).
inline double moment_ratio(const ExponentPair& p, std::span<const int> alpha) {
  if (static_cast<int>(alpha.size()) != p.n())
    throw InvalidArgument("alpha length does not match exponent pair");
  double v = 1.0;
  for (int i = 0; i < p.n(); ++i) {
    if (alpha[i] < 0) throw InvalidArgument("alpha entries must be >= 0");
    v *= coordinate_ratio(p.eta[i], p.beta[i], alpha[i]);
  }
  return v;
}

// E[X^k] for X ~ beta(a, b): a(a+1)...(a+k-1) / ((a+b)...(a+b+k-1)).
inline double beta_raw_moment(double a, double b, int k) {
  if (!(a > 0.0) || !(b > 0.0))
    throw InvalidArgument("beta shape parameters must be positive");
  if (k < 0) throw InvalidArgument("moment order must be >= 0");
  double v = 1.0;
  for (int t = 0; t < k; ++t) v *= (a + t) / (a + b + t);
  return v;
}

namespace detail {
inline boost::multiprecision::cpp_int factorial(int m) {
  boost::multiprecision::cpp_int f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}
}  // namespace detail

// Exact prod_i eta_i! beta_i! / (eta_i + beta_i + 1)!.
inline Rational gamma_box_exact(const ExponentPair& p) {
  Rational v = 1;
  for (int i = 0; i < p.n(); ++i) {
    v *= Rational(detail::factorial(p.eta[i]) * detail::factorial(p.beta[i]),
                  detail::factorial(p.eta[i] + p.beta[i] + 1));
  }
  return v;
}

}  // namespace hbound

#endif  // HBOUND_MOMENTS_HPP_
