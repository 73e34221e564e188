#include "altlab/double_double.hpp"
#include "altlab/gauss_legendre.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace altlab;

TEST(ErrorFreeTransforms, TwoSumIsExact) {
  const auto [s, e] = eft::two_sum(1.0, 1e-20);
  EXPECT_EQ(s, 1.0);
  EXPECT_EQ(e, 1e-20);
}

TEST(ErrorFreeTransforms, TwoProdRecoversTheRoundingError) {
  const double a = 1.0 + std::ldexp(1.0, -30);
  const auto [p, e] = eft::two_prod(a, a);
  // (1 + 2^-30)^2 = 1 + 2^-29 + 2^-60
  EXPECT_EQ(p, 1.0 + std::ldexp(1.0, -29));
  EXPECT_EQ(e, std::ldexp(1.0, -60));
}

TEST(DoubleDouble, KeepsDigitsBeyondDouble) {
  const DoubleDouble one_third = DoubleDouble(1.0) / 3.0;
  const DoubleDouble back = one_third * 3.0 - 1.0;
  EXPECT_LT(std::abs(back.to_double()), 1e-31);
}

TEST(DoubleDouble, ExpMatchesKnownDigits) {
  // e = 2.71828182845904523536028747135266...
  const DoubleDouble e = exp(DoubleDouble(1.0));
  EXPECT_EQ(e.hi(), std::numbers::e);
  EXPECT_NEAR(e.lo(), 1.4456468917292502e-16, 1e-31);
  EXPECT_NEAR(exp(DoubleDouble(-30.0)).to_double(), std::exp(-30.0), 1e-28);
}

TEST(DoubleDouble, Comparisons) {
  const DoubleDouble a(1.0, 1e-20);
  const DoubleDouble b(1.0, 0.0);
  EXPECT_TRUE(b < a);
  EXPECT_TRUE(a > b);
  EXPECT_TRUE(a >= b);
  EXPECT_EQ(abs(-a).hi(), 1.0);
}

TEST(CompensatedSum, RecoversCancelledLowOrderBits) {
  CompensatedSum<double> s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i)
    s.add(1e-16);
  s.add(-1.0);
  // plain summation returns 0 here
  EXPECT_NEAR(s.value(), 1e-13, 1e-24);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  const auto& rule = gauss_legendre(8);
  // degree 15 is the highest exact degree for 8 points
  const double q = integrate_panel([](double x) { return std::pow(x, 14) + x * x; }, -1.0, 1.0, rule);
  EXPECT_NEAR(q, 2.0 / 15.0 + 2.0 / 3.0, 1e-15);
}

TEST(GaussLegendre, WeightsSumToTwo) {
  for (const int n : {1, 2, 16, 32, 128}) {
    const auto& rule = gauss_legendre(n);
    double sum = 0.0;
    for (int k = 0; k < rule.order(); ++k)
      sum += rule.weights()[k];
    EXPECT_NEAR(sum, 2.0, 1e-14) << n;
  }
}

TEST(GaussLegendre, CachedRulesAreShared) {
  EXPECT_EQ(&gauss_legendre(16), &gauss_legendre(16));
}
