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


#include "hbound/moments.hpp"

#include <random>

#include "gtest/gtest.h"

namespace hbound {
namespace {

double to_double(const Rational& q) { return static_cast<double>(q); }

TEST(ExponentPairTest, Validation) {
  EXPECT_THROW(ExponentPair({1}, {1, 2}), InvalidArgument);
  EXPECT_THROW(ExponentPair({-1}, {0}), InvalidArgument);
  const ExponentPair p({1, 2}, {3, 0});
  EXPECT_EQ(p.n(), 2);
  EXPECT_EQ(p.degree(), 6);
  EXPECT_LT(ExponentPair({0, 1}, {5, 5}), ExponentPair({1, 0}, {0, 0}));
  EXPECT_LT(ExponentPair({0, 1}, {0, 1}), ExponentPair({0, 1}, {1, 0}));
}

TEST(UnivariateMomentTest, Values) {
  EXPECT_DOUBLE_EQ(univariate_moment(0, 0), 1.0);
  EXPECT_NEAR(univariate_moment(1, 1), 1.0 / 6, 1e-15);
  EXPECT_NEAR(univariate_moment(1, 1),
              to_double(gamma_box_exact(ExponentPair({1}, {1}))), 1e-16);
  EXPECT_THROW(univariate_moment(-1, 0), InvalidArgument);
  // Large degrees stay finite and positive.
  EXPECT_GT(univariate_moment(400, 400), 0.0);
}

TEST(GammaBoxTest, Values) {
  EXPECT_DOUBLE_EQ(gamma_box(ExponentPair::uniform(2)), 1.0);
  EXPECT_NEAR(gamma_box(ExponentPair({0, 1}, {0, 1})), 1.0 / 6, 1e-15);
  EXPECT_EQ(gamma_box_exact(ExponentPair({2}, {3})), Rational(1, 60));
  EXPECT_EQ(gamma_box_exact(ExponentPair::uniform(3)), Rational(1));
  const ExponentPair p({5, 5}, {5, 5});
  EXPECT_NEAR(gamma_box(p) / to_double(gamma_box_exact(p)), 1.0, 1e-12);
}

TEST(GammaBoxTest, SwapSymmetry) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(0, 20);
  for (int rep = 0; rep < 200; ++rep) {
    const ExponentPair p({e(rng), e(rng)}, {e(rng), e(rng)});
    const ExponentPair s(p.beta, p.eta);
    EXPECT_EQ(gamma_box_exact(p), gamma_box_exact(s));
    EXPECT_NEAR(gamma_box(p) / gamma_box(s), 1.0, 1e-14);
  }
}

TEST(MomentRatioTest, Values) {
  EXPECT_DOUBLE_EQ(moment_ratio(ExponentPair({3, 1}, {2, 2}), std::vector{0, 0}),
                   1.0);
  EXPECT_DOUBLE_EQ(moment_ratio(ExponentPair({0}, {0}), std::vector{1}), 0.5);
  const ExponentPair p({1}, {1});
  EXPECT_NEAR(moment_ratio(p, std::vector{2}), 0.3, 1e-16);
  const Rational exact =
      gamma_box_exact(ExponentPair({3}, {1})) / gamma_box_exact(p);
  EXPECT_EQ(exact, Rational(3, 10));
  EXPECT_THROW(moment_ratio(p, std::vector{1, 1}), InvalidArgument);
}

TEST(MomentRatioTest, ConsistentWithGammaBox) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> e(0, 15);
  for (int rep = 0; rep < 300; ++rep) {
    const ExponentPair p({e(rng), e(rng)}, {e(rng), e(rng)});
    const std::vector<int> a{e(rng), e(rng)};
    const ExponentPair shifted({p.eta[0] + a[0], p.eta[1] + a[1]}, p.beta);
    const double lhs = moment_ratio(p, a) * gamma_box(p);
    EXPECT_NEAR(lhs / gamma_box(shifted), 1.0, 1e-10);
    // And exactly against the rational oracle.
    const double exact =
        to_double(gamma_box_exact(shifted) / gamma_box_exact(p));
    EXPECT_NEAR(moment_ratio(p, a) / exact, 1.0, 1e-13);
  }
}

TEST(MomentRatioTest, Telescoping) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> e(0, 10);
  for (int rep = 0; rep < 200; ++rep) {
    const ExponentPair p({e(rng), e(rng)}, {e(rng), e(rng)});
    const std::vector<int> a{e(rng), e(rng)}, b{e(rng), e(rng)};
    const std::vector<int> ab{a[0] + b[0], a[1] + b[1]};
    const ExponentPair shifted({p.eta[0] + a[0], p.eta[1] + a[1]}, p.beta);
    EXPECT_NEAR(moment_ratio(p, ab), moment_ratio(p, a) * moment_ratio(shifted, b),
                1e-14 * moment_ratio(p, ab));
  }
}

TEST(BetaRawMomentTest, Values) {
  EXPECT_NEAR(beta_raw_moment(1, 1, 2), 1.0 / 3, 1e-16);
  EXPECT_DOUBLE_EQ(beta_raw_moment(2, 2, 0), 1.0);
  for (double a : {0.3, 1.0, 2.5, 7.0})
    for (double b : {0.5, 1.0, 4.0})
      EXPECT_NEAR(beta_raw_moment(a, b, 1), a / (a + b), 1e-15);
  EXPECT_THROW(beta_raw_moment(0, 1, 1), InvalidArgument);
  EXPECT_THROW(beta_raw_moment(1, -1, 1), InvalidArgument);
}

TEST(BetaRawMomentTest, MatchesMomentRatio) {
  for (int eta = 0; eta < 8; ++eta)
    for (int beta = 0; beta < 8; ++beta)
      for (int m = 0; m < 6; ++m)
        EXPECT_NEAR(beta_raw_moment(eta + 1, beta + 1, m),
                    moment_ratio(ExponentPair({eta}, {beta}), std::vector{m}),
                    1e-15);
}

// r |E X^k - (E X)^k| stays bounded for X ~ beta(ar, br): the sequence
// flattens out to a finite limit instead of growing with r.
TEST(BetaRawMomentTest, ConcentrationIsOrderOneOverR) {
  for (auto [a, b] : {std::pair{1.0, 1.0}, {2.0, 5.0}, {0.5, 3.0}}) {
    for (int k : {2, 3, 6}) {
      const double mean = a / (a + b);
      auto g = [&](int r) {
        return r * std::abs(beta_raw_moment(a * r, b * r, k) - std::pow(mean, k));
      };
      double sup = 0;
      for (int r = 1; r <= 1000; ++r) sup = std::max(sup, g(r));
      SCOPED_TRACE(testing::Message() << a << " " << b << " " << k);
      EXPECT_LE(std::abs(g(1000) - g(500)), 0.01 * g(1000));
      EXPECT_LE(sup, 2.0 * std::max(g(1000), g(1)));
    }
  }
}

}  // namespace
}  // namespace hbound
