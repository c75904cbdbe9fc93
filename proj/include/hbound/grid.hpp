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

// Brute-force minimization over the grid Q(k) = {0, 1/k, ..., 1}^n.

#ifndef HBOUND_GRID_HPP_
#define HBOUND_GRID_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "hbound/error.hpp"
#include "hbound/polynomial.hpp"

namespace hbound {

struct GridResult {
  double value = 0.0;
  Point argmin;
  int k = 0;
  std::uint64_t points_evaluated = 0;
};

struct GridOptions {
  std::uint64_t budget = 100'000'000;
  int workers = 1;
};

namespace detail {

// Per-coordinate powers (i/k)^e, so a grid point costs one product per term.
class GridEvaluator {
 public:
  GridEvaluator(const Polynomial& f, int k) : f_(f), k_(k) {
    const int n = f.n_vars();
    pow_.resize(n);
    for (int v = 0; v < n; ++v) {
      const int A = f.max_exponent(v);
      pow_[v].assign(static_cast<std::size_t>(k + 1) * (A + 1), 1.0);
      for (int i = 0; i <= k; ++i) {
        const double x = static_cast<double>(i) / k;
        for (int e = 1; e <= A; ++e)
          pow_[v][i * (A + 1) + e] = pow_[v][i * (A + 1) + e - 1] * x;
      }
      stride_.push_back(A + 1);
    }
  }

  double operator()(const std::vector<int>& idx) const {
    double s = 0.0;
    for (const auto& t : f_.terms()) {
      double m = t.coef;
      for (std::size_t v = 0; v < idx.size(); ++v)
        m *= pow_[v][idx[v] * stride_[v] + t.alpha[v]];
      s += m;
    }
    return s;
  }

 private:
  const Polynomial& f_;
  int k_;
  std::vector<std::vector<double>> pow_;
  std::vector<int> stride_;
};

}  // namespace detail

// Exact minimum of f over Q(k). Points are visited as an odometer with the
// last coordinate fastest; ties go to the lexicographically smallest point.
inline GridResult grid_min(const Polynomial& f, int k,
                           const GridOptions& opts = {}) {
  if (k < 1) throw InvalidArgument("grid denominator k must be >= 1");
  const int n = f.n_vars();
  long double total = std::pow(static_cast<long double>(k + 1), n);
  if (total > static_cast<long double>(opts.budget))
    throw BudgetExceeded("grid has (k+1)^n = " + std::to_string(k + 1) + "^" +
                         std::to_string(n) + " points, budget is " +
                         std::to_string(opts.budget));
  const detail::GridEvaluator eval(f, k);

  // Chunks are the values of the leading coordinate.
  struct Best {
    double value = std::numeric_limits<double>::infinity();
    std::vector<int> idx;
    std::uint64_t count = 0;
  };
  const int workers = std::max(1, std::min(opts.workers, k + 1));
  std::vector<Best> best(workers);
  std::atomic<int> next{0};
  auto work = [&](int w) {
    std::vector<int> idx(n, 0);
    Best& b = best[w];
    for (;;) {
      const int lead = next.fetch_add(1);
      if (lead > k) break;
      std::fill(idx.begin(), idx.end(), 0);
      idx[0] = lead;
      for (;;) {
        const double v = eval(idx);
        ++b.count;
        // Within a chunk points arrive in lex order, so strict < keeps the
        // lex-smallest of equal values.
        if (v < b.value || (v == b.value && idx < b.idx)) {
          b.value = v;
          b.idx = idx;
        }
        int i = n - 1;
        while (i >= 1 && idx[i] == k) idx[i--] = 0;
        if (i < 1) break;
        ++idx[i];
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Best all;
  for (const auto& b : best) {
    all.count += b.count;
    if (b.idx.empty()) continue;
    if (b.value < all.value || (b.value == all.value && b.idx < all.idx)) {
      all.value = b.value;
      all.idx = b.idx;
    }
  }
  GridResult res;
  res.k = k;
  res.points_evaluated = all.count;
  res.argmin.resize(n);
  for (int i = 0; i < n; ++i)
    res.argmin[i] = static_cast<double>(all.idx[i]) / k;
  res.value = evaluate(f, res.argmin);
  return res;
}

// L(f) = max_alpha |f_alpha| prod alpha_i! / |alpha|!.
inline double grid_constant_L(const Polynomial& f) {
  double L = 0.0;
  for (const auto& t : f.terms()) {
    double lg = 0.0;
    int total = 0;
    for (int a : t.alpha) {
      lg += std::lgamma(a + 1.0);
      total += a;
    }
    lg -= std::lgamma(total + 1.0);
    L = std::max(L, std::abs(t.coef) * std::exp(lg));
  }
  return L;
}

// Explicit O(1/k) bound on f_min,Q(k) - f_min: L(f)/k * C(d+1, 3) * n^d.
inline double grid_gap_bound(const Polynomial& f, int k) {
  if (k < 1) throw InvalidArgument("grid denominator k must be >= 1");
  const double d = f.degree();
  const double c3 = (d + 1) * d * (d - 1) / 6.0;
  return grid_constant_L(f) / k * c3 * std::pow(f.n_vars(), d);
}

}  // namespace hbound

#endif  // HBOUND_GRID_HPP_
