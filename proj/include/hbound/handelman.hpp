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

// Upper bounds on min_{[0,1]^n} f from densities proportional to
// (x^eta (1-x)^beta)^r with |eta + beta| = k:
//
//   f_{r,k} = min_{(eta,beta)} sum_alpha f_alpha
//                 gamma(r eta + alpha, r beta) / gamma(r eta, r beta).
//
// Each candidate value is the expectation of f under a product of beta
// distributions, so every candidate (and in particular the minimum) is an
// upper bound on the global minimum.

#ifndef HBOUND_HANDELMAN_HPP_
#define HBOUND_HANDELMAN_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "hbound/error.hpp"
#include "hbound/moments.hpp"
#include "hbound/polynomial.hpp"

namespace hbound {

struct BoundResult {
  double value = 0.0;
  ExponentPair argmin;
  int k = 0;
  int r = 1;
  std::uint64_t candidates_evaluated = 0;
};

struct ScanOptions {
  int workers = 1;
};

// C(n, k) in 64 bits; throws when the value does not fit.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ typedef unsigned __int128 u128;
  u128 v = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    v = v * (n - k + i) / i;
    if (v > std::numeric_limits<std::uint64_t>::max())
      throw InvalidArgument("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

// Number of (eta, beta) in N^{2n} with |eta + beta| = k.
inline std::uint64_t candidate_count(int n, int k) {
  return binomial(static_cast<std::uint64_t>(2 * n + k - 1),
                  static_cast<std::uint64_t>(k));
}

// Streams every composition of k into 2n nonnegative parts exactly once, in
// lexicographic order of (eta_1..eta_n, beta_1..beta_n), largest first:
// (k,0,..,0), (k-1,1,0,..), ..., (0,..,0,k).
class ExponentStream {
 public:
  ExponentStream(int n, int k) : n_(n), parts_(2 * n, 0) {
    if (n < 1) throw InvalidArgument("need n >= 1");
    if (k < 0) throw InvalidArgument("need k >= 0");
    parts_[0] = k;
  }

  bool next(ExponentPair& out) {
    if (done_) return false;
    out.eta.assign(parts_.begin(), parts_.begin() + n_);
    out.beta.assign(parts_.begin() + n_, parts_.end());
    advance();
    return true;
  }

 private:
  void advance() {
    const int m = static_cast<int>(parts_.size());
    int i = m - 2;
    while (i >= 0 && parts_[i] == 0) --i;
    if (i < 0) {
      done_ = true;
      return;
    }
    int tail = 0;
    for (int j = i + 1; j < m; ++j) {
      tail += parts_[j];
      parts_[j] = 0;
    }
    --parts_[i];
    parts_[i + 1] = tail + 1;
  }

  int n_;
  std::vector<int> parts_;
  bool done_ = false;
};

inline std::vector<ExponentPair> enumerate_exponents(int n, int k) {
  std::vector<ExponentPair> out;
  ExponentStream s(n, k);
  ExponentPair p;
  while (s.next(p)) out.push_back(p);
  return out;
}

// sum_alpha f_alpha * gamma(r eta + alpha, r beta) / gamma(r eta, r beta),
// i.e. E f(X) with X_i ~ beta(r eta_i + 1, r beta_i + 1) independent.
inline double candidate_value(const Polynomial& f, const ExponentPair& p,
                              int r = 1) {
  if (p.n() != f.n_vars())
    throw InvalidArgument("exponent pair dimension does not match polynomial");
  if (r < 1) throw InvalidArgument("power r must be >= 1");
  double s = 0.0;
  for (const auto& t : f.terms()) {
    double m = t.coef;
    for (int i = 0; i < p.n(); ++i)
      m *= coordinate_ratio(static_cast<double>(r) * p.eta[i],
                            static_cast<double>(r) * p.beta[i], t.alpha[i]);
    s += m;
  }
  return s;
}

namespace detail {

// Candidates whose value is within `tol` of the running minimum, kept as a
// Pareto front: ascending value, strictly descending lex key. The final
// answer (lex-smallest among candidates within tol of the global minimum)
// does not depend on the order in which candidates are offered.
class TieFront {
 public:
  explicit TieFront(double tol) : tol_(tol) {}

  double threshold() const noexcept { return best_ + tol_; }
  double best() const noexcept { return best_; }

  void offer(double v, std::span<const int> eta, std::span<const int> beta) {
    if (v > threshold()) return;
    if (v < best_) {
      best_ = v;
      const double th = threshold();
      std::erase_if(entries_, [th](const Entry& e) { return e.value > th; });
    }
    Entry x{v, ExponentPair(std::vector<int>(eta.begin(), eta.end()),
                            std::vector<int>(beta.begin(), beta.end()))};
    for (const auto& y : entries_)
      if (y.value <= x.value && y.key <= x.key) return;
    std::erase_if(entries_, [&x](const Entry& y) {
      return x.value <= y.value && x.key <= y.key;
    });
    auto pos = std::upper_bound(
        entries_.begin(), entries_.end(), x,
        [](const Entry& a, const Entry& b) { return a.value < b.value; });
    entries_.insert(pos, std::move(x));
  }

  void merge(const TieFront& other) {
    for (const auto& e : other.entries_)
      offer(e.value, e.key.eta, e.key.beta);
  }

  bool empty() const noexcept { return entries_.empty(); }

  // Lex-smallest entry within tol of the minimum.
  std::pair<double, ExponentPair> result() const {
    const double th = threshold();
    const Entry* pick = nullptr;
    for (const auto& e : entries_)
      if (e.value <= th) pick = &e;
    return {pick->value, pick->key};
  }

 private:
  struct Entry {
    double value;
    ExponentPair key;
  };
  double tol_;
  double best_ = std::numeric_limits<double>::infinity();
  std::vector<Entry> entries_;
};

// Depth-first evaluation of all candidates. The polynomial is viewed as a
// trie over its variables: after fixing (eta_j, beta_j) for j < level, the
// partially integrated polynomial lives on the distinct exponent suffixes
// alpha[level..n-1], so each candidate costs O(#suffixes at the last level)
// instead of O(#terms * n).
class CandidateScanner {
 public:
  CandidateScanner(const Polynomial& f, int k, int r)
      : n_(f.n_vars()), k_(k), r_(r) {
    if (k < 0) throw InvalidArgument("degree k must be >= 0");
    if (r < 1) throw InvalidArgument("power r must be >= 1");
    build_tables(f);
    build_trie(f);
    tol_ = 128.0 * std::numeric_limits<double>::epsilon() * f.coefficient_l1();
  }

  BoundResult run(const ScanOptions& opts) const {
    // Work items: the (eta_0, beta_0) choices of the first coordinate.
    std::vector<std::pair<int, int>> items;
    for (int e = 0; e <= k_; ++e)
      for (int b = 0; b <= k_ - e; ++b)
        if (n_ > 1 || e + b == k_) items.emplace_back(e, b);

    const int workers =
        std::max(1, std::min<int>(opts.workers, static_cast<int>(items.size())));
    std::vector<TieFront> fronts(workers, TieFront(tol_));
    std::vector<std::uint64_t> counts(workers, 0);
    std::atomic<std::size_t> next{0};
    auto work = [&](int w) {
      Workspace ws(*this);
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items.size()) break;
        scan_item(items[i].first, items[i].second, ws, fronts[w], counts[w]);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    TieFront all(tol_);
    std::uint64_t total = 0;
    for (int w = 0; w < workers; ++w) {
      all.merge(fronts[w]);
      total += counts[w];
    }
    BoundResult res;
    auto [v, key] = all.result();
    res.value = v;
    res.argmin = std::move(key);
    res.k = k_;
    res.r = r_;
    res.candidates_evaluated = total;
    return res;
  }

 private:
  struct Workspace {
    explicit Workspace(const CandidateScanner& s)
        : eta(s.n_), beta(s.n_), coeffs(s.n_ + 1) {
      for (int j = 0; j <= s.n_; ++j) coeffs[j].resize(s.suffix_count_[j]);
      coeffs[0] = s.root_coeffs_;
    }
    std::vector<int> eta, beta;
    std::vector<std::vector<double>> coeffs;
  };

  const double* table(int i, int e, int b) const {
    return tables_[i].data() + (static_cast<std::size_t>(e) * (k_ + 1) + b) *
                                   static_cast<std::size_t>(max_exp_[i] + 1);
  }

  void build_tables(const Polynomial& f) {
    tables_.resize(n_);
    max_exp_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      const int A = f.max_exponent(i);
      max_exp_[i] = A;
      auto& t = tables_[i];
      t.assign(static_cast<std::size_t>(k_ + 1) * (k_ + 1) * (A + 1), 0.0);
      for (int e = 0; e <= k_; ++e) {
        for (int b = 0; e + b <= k_; ++b) {
          double* row = t.data() + (static_cast<std::size_t>(e) * (k_ + 1) + b) *
                                       static_cast<std::size_t>(A + 1);
          const double re = static_cast<double>(r_) * e;
          const double rb = static_cast<double>(r_) * b;
          row[0] = 1.0;
          for (int a = 1; a <= A; ++a)
            row[a] = row[a - 1] * (re + a) / (re + rb + 1.0 + a);
        }
      }
    }
  }

  void build_trie(const Polynomial& f) {
    suffix_count_.assign(n_ + 1, 0);
    parent_.resize(n_);
    digit_.resize(n_);
    std::vector<std::map<std::vector<int>, int>> index(n_ + 1);
    // Level j holds the distinct suffixes alpha[j..n-1].
    for (int j = 0; j <= n_; ++j) {
      for (const auto& t : f.terms()) {
        std::vector<int> suf(t.alpha.begin() + j, t.alpha.end());
        index[j].try_emplace(std::move(suf), 0);
      }
      if (f.is_zero()) index[j].try_emplace(std::vector<int>{}, 0);
      int id = 0;
      for (auto& [suf, v] : index[j]) v = id++;
      suffix_count_[j] = id;
    }
    for (int j = 0; j < n_; ++j) {
      parent_[j].assign(suffix_count_[j], 0);
      digit_[j].assign(suffix_count_[j], 0);
      for (const auto& [suf, id] : index[j]) {
        if (suf.empty()) continue;  // zero polynomial placeholder
        parent_[j][id] =
            index[j + 1].at(std::vector<int>(suf.begin() + 1, suf.end()));
        digit_[j][id] = suf[0];
      }
    }
    root_coeffs_.assign(suffix_count_[0], 0.0);
    for (const auto& t : f.terms()) root_coeffs_[index[0].at(t.alpha)] = t.coef;
  }

  void scan_item(int e0, int b0, Workspace& ws, TieFront& front,
                 std::uint64_t& count) const {
    if (n_ == 1) {
      leaf(0, e0, b0, ws, front, count);
      return;
    }
    ws.eta[0] = e0;
    ws.beta[0] = b0;
    integrate(0, e0, b0, ws);
    descend(1, k_ - e0 - b0, ws, front, count);
  }

  // coeffs[j+1] = coefficients after integrating coordinate j.
  void integrate(int j, int e, int b, Workspace& ws) const {
    const auto& in = ws.coeffs[j];
    auto& out = ws.coeffs[j + 1];
    std::fill(out.begin(), out.end(), 0.0);
    const double* t = table(j, e, b);
    const auto& par = parent_[j];
    const auto& dig = digit_[j];
    for (std::size_t s = 0; s < in.size(); ++s) out[par[s]] += in[s] * t[dig[s]];
  }

  void descend(int j, int rem, Workspace& ws, TieFront& front,
               std::uint64_t& count) const {
    if (j == n_ - 1) {
      for (int e = 0; e <= rem; ++e) leaf(j, e, rem - e, ws, front, count);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      for (int b = 0; b <= rem - e; ++b) {
        ws.eta[j] = e;
        ws.beta[j] = b;
        integrate(j, e, b, ws);
        descend(j + 1, rem - e - b, ws, front, count);
      }
    }
  }

  void leaf(int j, int e, int b, Workspace& ws, TieFront& front,
            std::uint64_t& count) const {
    const auto& in = ws.coeffs[j];
    const double* t = table(j, e, b);
    const auto& dig = digit_[j];
    double v = 0.0;
    for (std::size_t s = 0; s < in.size(); ++s) v += in[s] * t[dig[s]];
    ++count;
    if (v <= front.threshold()) {
      ws.eta[j] = e;
      ws.beta[j] = b;
      front.offer(v, ws.eta, ws.beta);
    }
  }

  int n_, k_, r_;
  double tol_ = 0.0;
  std::vector<int> max_exp_;
  std::vector<std::vector<double>> tables_;
  std::vector<int> suffix_count_;
  std::vector<std::vector<int>> parent_, digit_;
  std::vector<double> root_coeffs_;
};

}  // namespace detail

// min over |eta + beta| = k of candidate_value(f, ., r). Ties (within a few
// ulps of sum |f_alpha|) go to the lexicographically smallest pair; the result
// is identical for any worker count.
inline BoundResult f_handelman_powered(const Polynomial& f, int k, int r,
                                       const ScanOptions& opts = {}) {
  return detail::CandidateScanner(f, k, r).run(opts);
}

inline BoundResult f_handelman(const Polynomial& f, int k,
                               const ScanOptions& opts = {}) {
  return f_handelman_powered(f, k, 1, opts);
}

// Bounds for k = 1..k_max.
inline std::vector<BoundResult> bound_series(const Polynomial& f, int k_max,
                                             int r = 1,
                                             const ScanOptions& opts = {}) {
  std::vector<BoundResult> out;
  for (int k = 1; k <= k_max; ++k)
    out.push_back(f_handelman_powered(f, k, r, opts));
  return out;
}

struct BetaRefinement {
  double value = 0.0;
  std::vector<double> eta;
  std::vector<double> beta;
  int iterations = 0;
};

// Objective of the continuous relaxation: real shapes (eta, beta) >= 0.
inline double real_shape_value(const Polynomial& f, std::span<const double> eta,
                               std::span<const double> beta) {
  double s = 0.0;
  for (const auto& t : f.terms()) {
    double m = t.coef;
    for (int i = 0; i < f.n_vars(); ++i)
      m *= coordinate_ratio(eta[i], beta[i], t.alpha[i]);
    s += m;
  }
  return s;
}

// Local descent for the real-shape bound over the simplex
// {(eta, beta) >= 0 : sum eta_i + beta_i = k}, started from an integer pair.
// Each sweep moves mass between every pair of the 2n coordinates with a
// golden-section line search; a move is accepted only if it lowers the value,
// so the result never exceeds the starting candidate.
inline BetaRefinement f_beta_refine(const Polynomial& f, int k,
                                    const ExponentPair& start,
                                    int max_iterations = 1000,
                                    double rel_tol = 1e-10) {
  if (start.n() != f.n_vars())
    throw InvalidArgument("start dimension does not match polynomial");
  if (start.degree() != k)
    throw InvalidArgument("start has degree " + std::to_string(start.degree()) +
                          ", expected " + std::to_string(k));
  const int n = f.n_vars();
  std::vector<double> z(2 * n);
  for (int i = 0; i < n; ++i) {
    z[i] = start.eta[i];
    z[n + i] = start.beta[i];
  }
  auto value = [&](const std::vector<double>& zz) {
    return real_shape_value(f, std::span(zz).first(n), std::span(zz).subspan(n));
  };
  BetaRefinement res;
  double cur = value(z);
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  int it = 0;
  for (; it < max_iterations && !f.is_zero(); ++it) {
    const double prev = cur;
    for (int p = 0; p < 2 * n; ++p) {
      for (int q = p + 1; q < 2 * n; ++q) {
        const double s = z[p] + z[q];
        if (s <= 0.0) continue;
        std::vector<double> trial = z;
        auto g = [&](double t) {
          trial[p] = t;
          trial[q] = s - t;
          return value(trial);
        };
        double lo = 0.0, hi = s;
        double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
        double g1 = g(x1), g2 = g(x2);
        for (int step = 0; step < 80 && hi - lo > 1e-13 * (1.0 + s); ++step) {
          if (g1 <= g2) {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - golden * (hi - lo);
            g1 = g(x1);
          } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + golden * (hi - lo);
            g2 = g(x2);
          }
        }
        double best_t = z[p], best_g = cur;
        for (double t : {x1, x2, 0.0, s}) {
          const double gt = g(t);
          if (gt < best_g) {
            best_g = gt;
            best_t = t;
          }
        }
        if (best_g < cur) {
          z[p] = best_t;
          z[q] = s - best_t;
          cur = best_g;
        }
      }
    }
    if (prev - cur <= rel_tol * std::max(std::abs(prev), 1e-300)) {
      ++it;
      break;
    }
  }
  res.value = cur;
  res.eta.assign(z.begin(), z.begin() + n);
  res.beta.assign(z.begin() + n, z.end());
  res.iterations = it;
  return res;
}

}  // namespace hbound

#endif  // HBOUND_HANDELMAN_HPP_
