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

// Sparse multivariate polynomials over [0,1]^n and the sparse-monomial text
// format:
//
//   # comment
//   n=2
//   1.0 : 1 0
//   -3.5 : 0 2
//
// The first nonblank line declares the dimension; each further nonblank line
// is "<coefficient> : <e1> ... <en>". Like terms are combined and terms whose
// coefficient ends up exactly zero are dropped.

#ifndef HBOUND_POLYNOMIAL_HPP_
#define HBOUND_POLYNOMIAL_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hbound/error.hpp"

namespace hbound {

using Exponent = std::vector<int>;
using Point = std::vector<double>;

struct Term {
  Exponent alpha;
  double coef;
};

// Immutable after construction; terms are kept sorted lexicographically by
// exponent so iteration order (and therefore every floating-point sum over
// terms) is reproducible.
class Polynomial {
 public:
  // The zero polynomial in one variable.
  Polynomial() : Polynomial(1) {}

  explicit Polynomial(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1) throw InvalidArgument("polynomial needs n_vars >= 1");
  }

  // Like terms are summed; exact zeros are dropped.
  Polynomial(int n_vars, const std::map<Exponent, double>& terms)
      : Polynomial(n_vars) {
    for (const auto& [alpha, coef] : terms) {
      check_exponent(alpha);
      if (coef != 0.0) terms_.push_back({alpha, coef});
    }
    finish();
  }

  Polynomial(int n_vars, std::vector<Term> terms) : Polynomial(n_vars) {
    std::map<Exponent, double> acc;
    for (auto& t : terms) {
      check_exponent(t.alpha);
      acc[std::move(t.alpha)] += t.coef;
    }
    for (auto& [alpha, coef] : acc)
      if (coef != 0.0) terms_.push_back({alpha, coef});
    finish();
  }

  int n_vars() const noexcept { return n_vars_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  // Largest exponent of variable i over the support.
  int max_exponent(int i) const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.alpha[i]);
    return m;
  }

  // Sum of |f_alpha|; the natural scale of rounding error in any linear
  // functional of f evaluated on [0,1]^n.
  double coefficient_l1() const {
    double s = 0.0;
    for (const auto& t : terms_) s += std::abs(t.coef);
    return s;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.n_vars_ != b.n_vars_ || a.terms_.size() != b.terms_.size())
      return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].alpha != b.terms_[i].alpha ||
          a.terms_[i].coef != b.terms_[i].coef)
        return false;
    }
    return true;
  }

 private:
  void check_exponent(const Exponent& alpha) const {
    if (static_cast<int>(alpha.size()) != n_vars_)
      throw InvalidArgument("exponent length " + std::to_string(alpha.size()) +
                            " does not match n_vars " +
                            std::to_string(n_vars_));
    for (int e : alpha)
      if (e < 0) throw InvalidArgument("negative exponent");
  }

  void finish() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.alpha < b.alpha; });
    degree_ = 0;
    for (const auto& t : terms_)
      degree_ = std::max(degree_,
                         std::accumulate(t.alpha.begin(), t.alpha.end(), 0));
  }

  int n_vars_;
  int degree_ = 0;
  std::vector<Term> terms_;
};

inline double evaluate(const Polynomial& p, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p.n_vars())
    throw InvalidArgument("point has " + std::to_string(x.size()) +
                          " coordinates, polynomial has " +
                          std::to_string(p.n_vars()) + " variables");
  double s = 0.0;
  for (const auto& t : p.terms()) {
    double m = t.coef;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int e = 0; e < t.alpha[i]; ++e) m *= x[i];
    s += m;
  }
  return s;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) {
  int n = 0;
  std::map<Exponent, double> acc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    if (n == 0) {
      if (line.substr(0, 2) != "n=")
        throw ParseError(line_no, "expected header 'n=<dims>'");
      auto digits = detail::trim(line.substr(2));
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1)
        throw ParseError(line_no, "bad dimension '" + std::string(digits) + "'");
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(line_no, "expected '<coefficient> : <exponents>'");
    auto coef_text = std::string(detail::trim(line.substr(0, colon)));
    double coef = 0.0;
    {
      // strtod accepts forms from_chars<double> may reject on older libstdc++.
      char* end = nullptr;
      coef = std::strtod(coef_text.c_str(), &end);
      if (coef_text.empty() || end != coef_text.c_str() + coef_text.size() ||
          !std::isfinite(coef))
        throw ParseError(line_no, "bad coefficient '" + coef_text + "'");
    }
    auto fields = detail::split_ws(line.substr(colon + 1));
    if (static_cast<int>(fields.size()) != n)
      throw ParseError(line_no, "expected " + std::to_string(n) +
                                    " exponents, got " +
                                    std::to_string(fields.size()));
    Exponent alpha(n);
    for (int i = 0; i < n; ++i) {
      auto f = fields[i];
      if (!f.empty() && f.front() == '-')
        throw ParseError(line_no, "negative exponent '" + std::string(f) + "'");
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), alpha[i]);
      if (ec != std::errc() || ptr != f.data() + f.size())
        throw ParseError(line_no, "bad exponent '" + std::string(f) + "'");
    }
    acc[alpha] += coef;
  }
  if (n == 0) throw ParseError(0, "missing header 'n=<dims>'");
  return Polynomial(n, acc);
}

// Inverse of parse_polynomial. Coefficients are printed with 17 significant
// digits so the round trip is exact.
inline std::string to_text(const Polynomial& p) {
  std::ostringstream os;
  os << "n=" << p.n_vars() << '\n';
  os << std::setprecision(17);
  for (const auto& t : p.terms()) {
    os << t.coef << " :";
    for (int e : t.alpha) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

}  // namespace hbound

#endif  // HBOUND_POLYNOMIAL_HPP_
