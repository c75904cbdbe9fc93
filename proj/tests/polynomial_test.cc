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


#include "hbound/polynomial.hpp"

#include <random>

#include "gtest/gtest.h"
#include "hbound/test_functions.hpp"

namespace hbound {
namespace {

TEST(ParsePolynomialTest, LinearForm) {
  const Polynomial p = parse_polynomial("n=2\n1.0 : 1 0\n1.0 : 0 1");
  EXPECT_EQ(p.n_vars(), 2);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.degree(), 1);
  EXPECT_DOUBLE_EQ(evaluate(p, Point{0.25, 0.5}), 0.75);
}

TEST(ParsePolynomialTest, CancellationGivesZero) {
  const Polynomial p = parse_polynomial("n=1\n2.0 : 3\n-2.0 : 3");
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), 0);
}

TEST(ParsePolynomialTest, NegativeExponentReportsLine) {
  try {
    parse_polynomial("n=2\n1 : 0 -1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParsePolynomialTest, CommentsBlankLinesAndLikeTerms) {
  const Polynomial p = parse_polynomial(
      "# header comment\n\n  n=2  \n1.5 : 2 0 # trailing\n\n0.5 : 2 0\n-1e-3 : 0 0\n");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_DOUBLE_EQ(p.terms()[1].coef, 2.0);
  EXPECT_DOUBLE_EQ(p.terms()[0].coef, -1e-3);
}

TEST(ParsePolynomialTest, Malformed) {
  EXPECT_THROW(parse_polynomial(""), ParseError);
  EXPECT_THROW(parse_polynomial("1 : 0"), ParseError);
  EXPECT_THROW(parse_polynomial("n=0"), ParseError);
  EXPECT_THROW(parse_polynomial("n=2\n1 : 0"), ParseError);
  EXPECT_THROW(parse_polynomial("n=2\n1 : 0 1 2"), ParseError);
  EXPECT_THROW(parse_polynomial("n=2\nabc : 0 1"), ParseError);
  EXPECT_THROW(parse_polynomial("n=2\n1 0 1"), ParseError);
  EXPECT_THROW(parse_polynomial("n=2\n1 : 0 x"), ParseError);
  try {
    parse_polynomial("n=1\n1 : 1\n\n2 : 1 1\n");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(PolynomialTest, InvariantsAndErrors) {
  EXPECT_THROW(Polynomial(0), InvalidArgument);
  EXPECT_THROW(Polynomial(2, std::vector<Term>{{Exponent{1}, 1.0}}), InvalidArgument);
  EXPECT_THROW(Polynomial(1, std::vector<Term>{{Exponent{-1}, 1.0}}), InvalidArgument);
  const Polynomial p(2, std::vector<Term>{{{1, 2}, 1.0}, {{0, 0}, 0.0},
                                          {{1, 2}, -1.0}, {{2, 0}, 3.0}});
  ASSERT_EQ(p.size(), 1u);  // zero and cancelled terms dropped
  EXPECT_EQ(p.degree(), 2);
  EXPECT_THROW(evaluate(p, Point{1.0}), InvalidArgument);
}

TEST(PolynomialTest, RoundTripIsExact) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(-1e3, 1e3);
  std::uniform_int_distribution<int> ex(0, 5);
  for (int rep = 0; rep < 50; ++rep) {
    std::map<Exponent, double> m;
    for (int t = 0; t < 12; ++t) m[{ex(rng), ex(rng), ex(rng)}] = coef(rng);
    const Polynomial p(3, m);
    const Polynomial q = parse_polynomial(to_text(p));
    EXPECT_EQ(p, q);
    EXPECT_EQ(parse_polynomial(to_text(q)), q);
  }
}

TEST(PolynomialTest, EvaluateIsLinearInCoefficients) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2, 2), x01(0, 1);
  std::uniform_int_distribution<int> ex(0, 4);
  for (int rep = 0; rep < 100; ++rep) {
    std::map<Exponent, double> mp, mq, msum;
    for (int t = 0; t < 6; ++t) mp[{ex(rng), ex(rng)}] = u(rng);
    for (int t = 0; t < 6; ++t) mq[{ex(rng), ex(rng)}] = u(rng);
    const double a = u(rng), b = u(rng);
    for (auto& [e, c] : mp) msum[e] += a * c;
    for (auto& [e, c] : mq) msum[e] += b * c;
    const Point x{x01(rng), x01(rng)};
    const double lhs = evaluate(Polynomial(2, msum), x);
    const double rhs =
        a * evaluate(Polynomial(2, mp), x) + b * evaluate(Polynomial(2, mq), x);
    EXPECT_NEAR(lhs, rhs, 1e-12 * (1 + std::abs(rhs)));
  }
}

TEST(BuiltinTest, BoothPoints) {
  const auto f = builtin("booth");
  EXPECT_NEAR(evaluate(f.poly, Point{0.55, 0.65}), 0.0, 1e-9);
  EXPECT_NEAR(evaluate(f.poly, Point{0.0, 0.0}), 2594.0, 1e-9);
  EXPECT_EQ(f.poly.degree(), 2);
}

TEST(BuiltinTest, MotzkinMinimizers) {
  const auto f = builtin("motzkin");
  for (const auto& x : f.minimizers)
    EXPECT_NEAR(evaluate(f.poly, x), 0.0, 1e-9);
  EXPECT_NEAR(evaluate(f.poly, Point{0.25, 0.75}), 0.0, 1e-9);
}

TEST(BuiltinTest, ReferenceRanges) {
  const auto st = builtin("styblinski_tang", 2);
  EXPECT_DOUBLE_EQ(st.f_min, -78.33198);
  EXPECT_DOUBLE_EQ(st.f_max, 250.0);
  EXPECT_NEAR(builtin("rosenbrock", 3).f_max, 7811.86, 1e-9);
  const auto m = builtin("matyas");
  EXPECT_EQ(m.f_min, 0.0);
  EXPECT_EQ(m.f_max, 100.0);
  EXPECT_EQ(m.minimizers.front(), (Point{0.5, 0.5}));
}

// The listed extremes are rounded, so each function carries its own
// reference tolerance.
TEST(BuiltinTest, EveryFunctionHitsItsListedExtremes) {
  for (const auto& name : builtin_names()) {
    for (int n : {2, 3, 4}) {
      if (n > 2 && name != "styblinski_tang" && name != "rosenbrock") continue;
      const auto f = builtin(name, n);
      SCOPED_TRACE(name + " n=" + std::to_string(n));
      EXPECT_LE(f.f_min, f.f_max);
      for (const auto& x : f.minimizers)
        EXPECT_NEAR(evaluate(f.poly, x), f.f_min, f.reference_tolerance);
      EXPECT_NEAR(evaluate(f.poly, f.maximizer), f.f_max,
                  std::max(1e-6, f.reference_tolerance));
    }
  }
}

TEST(BuiltinTest, ExactMinimizersWhereStated) {
  // Where the reference minimum is exact (zero), it is attained to 1e-9.
  for (const char* name : {"booth", "matyas", "motzkin", "three_hump_camel"}) {
    const auto f = builtin(name);
    EXPECT_NEAR(evaluate(f.poly, f.minimizers.front()), 0.0, 1e-9) << name;
  }
  for (int n : {2, 3, 4}) {
    const auto f = builtin("rosenbrock", n);
    EXPECT_NEAR(evaluate(f.poly, f.minimizers.front()), 0.0, 1e-9);
  }
}

TEST(BuiltinTest, StyblinskiTangSeparableMinimum) {
  const auto f = builtin("styblinski_tang", 3);
  const double v = evaluate(f.poly, f.minimizers.front());
  EXPECT_NEAR(v / 3, -39.16616570, 1e-7);
  // A perturbation never goes lower.
  for (double d : {-1e-3, 1e-3}) {
    Point x = f.minimizers.front();
    x[1] += d;
    EXPECT_GT(evaluate(f.poly, x), v);
  }
}

TEST(BuiltinTest, Errors) {
  EXPECT_THROW(builtin("ackley"), InvalidArgument);
  EXPECT_THROW(builtin("booth", 3), InvalidArgument);
  EXPECT_THROW(builtin("rosenbrock", 1), InvalidArgument);
}

TEST(RelativeGapTest, Basics) {
  const auto f = builtin("booth");
  EXPECT_DOUBLE_EQ(relative_gap(f.f_min, f), 0.0);
  EXPECT_DOUBLE_EQ(relative_gap(f.f_max, f), 100.0);
  // RG 10.8199% on Booth corresponds to a bound of 280.668...
  EXPECT_NEAR(10.8199 / 100 * 2594, 280.668, 1e-3);
  EXPECT_NEAR(relative_gap(280.668206, f), 10.8199, 1e-6);
  EXPECT_THROW(relative_gap(1.0, 2.0, 2.0), InvalidArgument);
}

}  // namespace
}  // namespace hbound
