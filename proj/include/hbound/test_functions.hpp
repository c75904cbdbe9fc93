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

// Standard global-optimization benchmarks rescaled to [0,1]^n. Composed forms
// such as (20x1 + 40x2 - 37)^2 are expanded once, in exact rational
// arithmetic, and only then rounded to double coefficients.

#ifndef HBOUND_TEST_FUNCTIONS_HPP_
#define HBOUND_TEST_FUNCTIONS_HPP_

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hbound/error.hpp"
#include "hbound/polynomial.hpp"

namespace hbound {

using Rational = boost::multiprecision::cpp_rational;

// A coordinate known to be the exact rational p/q.
struct ExactCoordinate {
  long p;
  long q;
};

struct TestFunction {
  std::string name;
  Polynomial poly;
  // Reference extremes as printed in the benchmark table; f_min/f_max are the
  // normalization of every relative gap.
  double f_min = 0.0;
  double f_max = 0.0;
  std::vector<Point> minimizers;
  Point maximizer;
  // Exact coordinates of minimizers.front() where they are rational. Empty
  // optionals mark coordinates that are irrational.
  std::vector<std::optional<ExactCoordinate>> exact_minimizer;
  bool convex = false;
  // Number of significant digits of the printed f_min/f_max, used when
  // comparing them with evaluations.
  double reference_tolerance = 1e-9;

  int n_vars() const { return poly.n_vars(); }
};

namespace detail {

// Dense-enough exact polynomial used only while expanding composed forms.
class RationalPoly {
 public:
  explicit RationalPoly(int n) : n_(n) {}

  static RationalPoly constant(int n, const Rational& c) {
    RationalPoly p(n);
    if (c != 0) p.terms_[Exponent(n, 0)] = c;
    return p;
  }

  // c0 + c1 * x_i
  static RationalPoly affine(int n, int i, const Rational& c1,
                             const Rational& c0) {
    RationalPoly p = constant(n, c0);
    Exponent e(n, 0);
    e[i] = 1;
    if (c1 != 0) p.terms_[e] += c1;
    return p;
  }

  RationalPoly& operator+=(const RationalPoly& o) {
    for (const auto& [e, c] : o.terms_) terms_[e] += c;
    prune();
    return *this;
  }
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) {
    return a += b;
  }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) {
    return a += b * Rational(-1);
  }
  friend RationalPoly operator*(const RationalPoly& a, const Rational& s) {
    RationalPoly r(a.n_);
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = c * s;
    return r;
  }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(a.n_);
        for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        r.terms_[e] += ca * cb;
      }
    }
    r.prune();
    return r;
  }
  RationalPoly pow(int k) const {
    RationalPoly r = constant(n_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  Polynomial to_polynomial() const {
    std::map<Exponent, double> out;
    for (const auto& [e, c] : terms_) out[e] = static_cast<double>(c);
    return Polynomial(n_, out);
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  int n_;
  std::map<Exponent, Rational> terms_;
};

inline Rational dec(long num, long den) { return Rational(num, den); }

// Root of d/dy [y^4/2 - 8y^2 + 5y/2] = 2y^3 - 16y + 5/2 near y = -2.9035.
inline double styblinski_tang_argmin() {
  long double y = -2.9L;
  for (int it = 0; it < 60; ++it) {
    const long double g = 2 * y * y * y - 16 * y + 2.5L;
    const long double dg = 6 * y * y - 16;
    y -= g / dg;
  }
  return static_cast<double>((y + 5) / 10);
}

}  // namespace detail

inline TestFunction builtin(const std::string& name, int n = 2) {
  using detail::dec;
  using detail::RationalPoly;
  auto lin = [](int nv, int i, long a_num, long a_den, long b_num,
                long b_den) {
    return RationalPoly::affine(nv, i, dec(a_num, a_den), dec(b_num, b_den));
  };
  const bool bivariate = name == "booth" || name == "matyas" ||
                         name == "motzkin" || name == "three_hump_camel";
  const bool scalable = name == "styblinski_tang" || name == "rosenbrock";
  if (!bivariate && !scalable)
    throw InvalidArgument("unknown test function '" + name + "'");
  if (bivariate && n != 2)
    throw InvalidArgument(name + " is defined for n = 2 only");
  if (scalable && n < 2)
    throw InvalidArgument(name + " needs n >= 2");

  TestFunction tf;
  tf.name = name;
  if (name == "booth") {
    auto a = RationalPoly::affine(2, 0, 20, -37) + lin(2, 1, 40, 1, 0, 1);
    auto b = RationalPoly::affine(2, 0, 40, -35) + lin(2, 1, 20, 1, 0, 1);
    tf.poly = (a.pow(2) + b.pow(2)).to_polynomial();
    tf.f_min = 0.0;
    tf.f_max = 2594.0;
    tf.minimizers = {{0.55, 0.65}};
    tf.exact_minimizer = {ExactCoordinate{11, 20}, ExactCoordinate{13, 20}};
    tf.maximizer = {0.0, 0.0};
    tf.convex = true;
  } else if (name == "matyas") {
    auto a = lin(2, 0, 20, 1, -10, 1);
    auto b = lin(2, 1, 20, 1, -10, 1);
    tf.poly = ((a.pow(2) + b.pow(2)) * dec(26, 100) - a * b * dec(48, 100))
                  .to_polynomial();
    tf.f_min = 0.0;
    tf.f_max = 100.0;
    tf.minimizers = {{0.5, 0.5}};
    tf.exact_minimizer = {ExactCoordinate{1, 2}, ExactCoordinate{1, 2}};
    tf.maximizer = {0.0, 1.0};
    tf.convex = true;
  } else if (name == "motzkin") {
    auto a = lin(2, 0, 4, 1, -2, 1);
    auto b = lin(2, 1, 4, 1, -2, 1);
    tf.poly = (a.pow(4) * b.pow(2) + a.pow(2) * b.pow(4) -
               a.pow(2) * b.pow(2) * Rational(3) +
               RationalPoly::constant(2, 1))
                  .to_polynomial();
    tf.f_min = 0.0;
    tf.f_max = 81.0;
    tf.minimizers = {{0.25, 0.25}, {0.25, 0.75}, {0.75, 0.25}, {0.75, 0.75}};
    tf.exact_minimizer = {ExactCoordinate{1, 4}, ExactCoordinate{1, 4}};
    tf.maximizer = {1.0, 1.0};
  } else if (name == "three_hump_camel") {
    auto a = lin(2, 0, 10, 1, -5, 1);
    auto b = lin(2, 1, 10, 1, -5, 1);
    tf.poly = (a.pow(2) * Rational(2) - a.pow(4) * dec(105, 100) +
               a.pow(6) * dec(1, 6) + a * b + b.pow(2))
                  .to_polynomial();
    tf.f_min = 0.0;
    tf.f_max = 2047.92;
    tf.minimizers = {{0.5, 0.5}};
    tf.exact_minimizer = {ExactCoordinate{1, 2}, ExactCoordinate{1, 2}};
    tf.maximizer = {1.0, 1.0};
    tf.reference_tolerance = 5e-3;
  } else if (name == "styblinski_tang") {
    RationalPoly f(n);
    for (int i = 0; i < n; ++i) {
      auto y = lin(n, i, 10, 1, -5, 1);
      f += y.pow(4) * dec(1, 2) - y.pow(2) * Rational(8) + y * dec(5, 2);
    }
    tf.poly = f.to_polynomial();
    tf.f_min = -39.16599 * n;
    tf.f_max = 125.0 * n;
    tf.minimizers = {Point(n, detail::styblinski_tang_argmin())};
    tf.exact_minimizer.assign(n, std::nullopt);
    tf.maximizer = Point(n, 1.0);
    // -39.16599 is rounded; the true minimum is -39.1661657...
    tf.reference_tolerance = 2e-4 * n;
  } else {  // rosenbrock
    RationalPoly f(n);
    for (int i = 0; i + 1 < n; ++i) {
      auto yi = lin(n, i, 4096, 1000, -2048, 1000);
      auto yn = lin(n, i + 1, 4096, 1000, -2048, 1000);
      auto r = lin(n, i, 4096, 1000, -3048, 1000);
      f += (yn - yi.pow(2)).pow(2) * Rational(100) + r.pow(2);
    }
    tf.poly = f.to_polynomial();
    tf.f_min = 0.0;
    tf.f_max = 3905.93 * (n - 1);
    tf.minimizers = {Point(n, 3048.0 / 4096.0)};
    tf.exact_minimizer.assign(n, ExactCoordinate{381, 512});
    tf.maximizer = Point(n, 0.0);
    tf.reference_tolerance = 5e-3 * (n - 1);
  }
  return tf;
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "booth",           "matyas",    "motzkin", "three_hump_camel",
      "styblinski_tang", "rosenbrock"};
  return names;
}

// (bound - f_min) / (f_max - f_min) * 100.
inline double relative_gap(double bound, double f_min, double f_max) {
  if (!(f_max > f_min))
    throw InvalidArgument("degenerate range: f_max must exceed f_min");
  return (bound - f_min) / (f_max - f_min) * 100.0;
}

inline double relative_gap(double bound, const TestFunction& f) {
  return relative_gap(bound, f.f_min, f.f_max);
}

}  // namespace hbound

#endif  // HBOUND_TEST_FUNCTIONS_HPP_
