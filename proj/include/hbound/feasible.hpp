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

// Feasible points from an optimal density x^{r eta} (1-x)^{r beta}: its mean
// (the Jensen point), its mode, and independent draws from the product of
// beta(r eta_i + 1, r beta_i + 1) marginals.

#ifndef HBOUND_FEASIBLE_HPP_
#define HBOUND_FEASIBLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "hbound/error.hpp"
#include "hbound/linalg.hpp"
#include "hbound/moments.hpp"
#include "hbound/polynomial.hpp"

namespace hbound {

// Coordinates (r eta_i + 1) / (r eta_i + r beta_i + 2): the mean of X.
inline Point expectation_point(const ExponentPair& p, int r = 1) {
  if (r < 1) throw InvalidArgument("power r must be >= 1");
  Point x(p.n());
  for (int i = 0; i < p.n(); ++i)
    x[i] = (static_cast<double>(r) * p.eta[i] + 1.0) /
           (static_cast<double>(r) * (p.eta[i] + p.beta[i]) + 2.0);
  return x;
}

// Maximizer of x^{r eta} (1-x)^{r beta}: eta_i / (eta_i + beta_i) per
// coordinate. nullopt when some coordinate has eta_i = beta_i = 0, where the
// marginal is flat and the mode is not unique.
inline std::optional<Point> density_mode(const ExponentPair& p, int r = 1) {
  if (r < 1) throw InvalidArgument("power r must be >= 1");
  Point x(p.n());
  for (int i = 0; i < p.n(); ++i) {
    const int s = p.eta[i] + p.beta[i];
    if (s == 0) return std::nullopt;
    x[i] = static_cast<double>(p.eta[i]) / s;
  }
  return x;
}

// Sufficient conditions for f(E X) <= E f(X), checked in this order.
enum class JensenCase {
  kConvexAsserted,
  kNonnegativeCoefficients,
  kSquareFree,
  kNotApplicable
};

inline const char* to_string(JensenCase c) {
  switch (c) {
    case JensenCase::kConvexAsserted:
      return "convex_asserted";
    case JensenCase::kNonnegativeCoefficients:
      return "nonnegative_coefficients";
    case JensenCase::kSquareFree:
      return "square_free";
    case JensenCase::kNotApplicable:
      return "not_applicable";
  }
  return "?";
}

inline JensenCase jensen_classify(const Polynomial& f, bool convex_asserted) {
  if (convex_asserted) return JensenCase::kConvexAsserted;
  bool nonneg = true, square_free = true;
  for (const auto& t : f.terms()) {
    if (t.coef < 0) nonneg = false;
    for (int a : t.alpha)
      if (a > 1) square_free = false;
  }
  if (nonneg) return JensenCase::kNonnegativeCoefficients;
  if (square_free) return JensenCase::kSquareFree;
  return JensenCase::kNotApplicable;
}

struct ConvexityReport {
  bool negative_curvature = false;
  double min_eigenvalue = std::numeric_limits<double>::infinity();
  Point worst_point;
};

// Finite-difference Hessians at random interior points. Advisory only: it
// never changes jensen_classify's answer.
inline ConvexityReport convexity_diagnostic(const Polynomial& f,
                                            std::uint64_t seed = 1,
                                            int points = 100) {
  const int n = f.n_vars();
  std::mt19937_64 rng(seed);
  ConvexityReport rep;
  const double h = 1e-4;
  Point x(n), y(n);
  for (int s = 0; s < points; ++s) {
    for (auto& v : x)
      v = 0.05 + 0.9 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    Matrix H(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        auto at = [&](double di, double dj) {
          y = x;
          y[i] += di;
          y[j] += dj;
          return evaluate(f, y);
        };
        const double hij =
            (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
        H(i, j) = H(j, i) = hij;
      }
    }
    const double ev = jacobi_eigenvalues(H).front();
    const double scale = std::max(1.0, H.frobenius_norm());
    if (ev < rep.min_eigenvalue) {
      rep.min_eigenvalue = ev;
      rep.worst_point = x;
    }
    if (ev < -1e-6 * scale) rep.negative_curvature = true;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Beta sampling by inversion.

// I_x(a, b) via the Lentz continued fraction.
inline double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0) || !(b > 0)) throw InvalidArgument("beta shapes must be > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (x > (a + 1.0) / (a + b + 2.0))
    return 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);
  const double lbeta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  const double front =
      std::exp(a * std::log(x) + b * std::log1p(-x) - lbeta) / a;
  const double tiny = 1e-300;
  double f = 1.0, c = 1.0, d = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const int m = i / 2;
    double num;
    if (i == 0)
      num = 1.0;
    else if (i % 2 == 0)
      num = m * (b - m) * x / ((a + 2.0 * m - 1.0) * (a + 2.0 * m));
    else
      num = -((a + m) * (a + b + m) * x) / ((a + 2.0 * m) * (a + 2.0 * m + 1.0));
    d = 1.0 + num * d;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    c = 1.0 + num / c;
    if (std::abs(c) < tiny) c = tiny;
    const double cd = c * d;
    f *= cd;
    if (std::abs(1.0 - cd) < 1e-15) break;
  }
  return front * (f - 1.0);
}

// x with I_x(a, b) = u: Newton steps safeguarded by a bisection bracket,
// stopped once |I_x - u| < tol.
inline double beta_quantile(double a, double b, double u, double tol = 1e-12) {
  if (!(a > 0) || !(b > 0)) throw InvalidArgument("beta shapes must be > 0");
  if (!(u >= 0.0 && u <= 1.0)) throw InvalidArgument("u must lie in [0,1]");
  if (a == 1.0 && b == 1.0) return u;
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 1.0;
  const double lbeta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  double lo = 0.0, hi = 1.0, x = a / (a + b);
  for (int it = 0; it < 300; ++it) {
    const double F = regularized_incomplete_beta(a, b, x);
    const double err = F - u;
    if (std::abs(err) < tol) break;
    if (err < 0)
      lo = x;
    else
      hi = x;
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi) break;
    const double pdf =
        std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - lbeta);
    double nx = (pdf > 0 && std::isfinite(pdf)) ? x - err / pdf : lo - 1.0;
    if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
    x = nx;
  }
  return x;
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Independent stream `index` derived from a user seed.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(~index)));
}

inline constexpr const char* kGeneratorName =
    "mt19937_64+splitmix64-substreams/256";

// One point with X_i ~ beta(r eta_i + 1, r beta_i + 1), one uniform per
// coordinate.
inline Point sample_beta_point(const ExponentPair& p, int r,
                               std::mt19937_64& rng) {
  if (r < 1) throw InvalidArgument("power r must be >= 1");
  Point x(p.n());
  for (int i = 0; i < p.n(); ++i)
    x[i] = beta_quantile(static_cast<double>(r) * p.eta[i] + 1.0,
                         static_cast<double>(r) * p.beta[i] + 1.0,
                         uniform01(rng));
  return x;
}

struct SampleStats {
  double mean = 0.0;
  double variance = 0.0;  // divisor N - 1
  double minimum = 0.0;
  Point minimizer;
  std::uint64_t sample_size = 0;
  std::uint64_t seed = 0;
  std::string generator = kGeneratorName;
};

namespace detail {
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t h = v.size() / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}
}  // namespace detail

// Evaluates f at N draws. Draw j comes from substream j / 256, so the result
// is independent of the worker count.
inline SampleStats sample_statistics(const Polynomial& f, const ExponentPair& p,
                                     int r, std::uint64_t N, std::uint64_t seed,
                                     int workers = 1) {
  if (N < 2) throw InvalidArgument("sample size must be >= 2");
  if (p.n() != f.n_vars())
    throw InvalidArgument("exponent pair dimension does not match polynomial");
  constexpr std::uint64_t kBlock = 256;
  const std::uint64_t blocks = (N + kBlock - 1) / kBlock;
  std::vector<double> values(N);
  std::vector<Point> points(N);
  auto run = [&](std::uint64_t first_block, std::uint64_t step) {
    for (std::uint64_t b = first_block; b < blocks; b += step) {
      auto rng = substream(seed, b);
      for (std::uint64_t j = b * kBlock; j < std::min(N, (b + 1) * kBlock);
           ++j) {
        points[j] = sample_beta_point(p, r, rng);
        values[j] = evaluate(f, points[j]);
      }
    }
  };
  const int w = static_cast<int>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, blocks)));
  if (w == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < w; ++i) pool.emplace_back(run, i, w);
    for (auto& t : pool) t.join();
  }
  SampleStats s;
  s.sample_size = N;
  s.seed = seed;
  s.mean = detail::pairwise_sum(values) / static_cast<double>(N);
  std::vector<double> dev(N);
  for (std::uint64_t j = 0; j < N; ++j)
    dev[j] = (values[j] - s.mean) * (values[j] - s.mean);
  s.variance = detail::pairwise_sum(dev) / static_cast<double>(N - 1);
  const auto it = std::min_element(values.begin(), values.end());
  s.minimum = *it;
  s.minimizer = points[it - values.begin()];
  return s;
}

}  // namespace hbound

#endif  // HBOUND_FEASIBLE_HPP_
