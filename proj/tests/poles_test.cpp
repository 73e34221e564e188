#include "altlab/poles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace altlab;

TEST(Poles, ReferenceLocation) {
  EXPECT_NEAR(u_star(2.0), 2.1314569079920511495, 1e-15);
  EXPECT_NEAR(x_star(2.0), 0.73695898842950222854, 1e-15);
  EXPECT_NEAR(u_star(0.0), kSqrtHalfPi, 1e-15);
  EXPECT_NEAR(x_star(0.0), kSqrtHalfPi, 1e-15);
}

TEST(Poles, QuarticAndProductRelations) {
  constexpr double pi = std::numbers::pi;
  for (double y = -3.0; y <= 3.0; y += 0.125) {
    const double u = u_star(y);
    const double x = x_star(y);
    EXPECT_NEAR(u * u * u * u - y * y * u * u - pi * pi / 4.0, 0.0, 1e-13) << y;
    EXPECT_NEAR(2.0 * x * u, pi, 1e-15) << y;
    EXPECT_NEAR(x * x + y * y - u * u, 0.0, 1e-14) << y;
  }
}

TEST(Poles, QVanishesAtBothBranches) {
  for (double y = -1.8; y <= 1.8; y += 0.1) {
    EXPECT_LE(std::abs(q_eval(z_plus(y), y)), 1e-14) << y;
    EXPECT_LE(std::abs(q_eval(z_minus(y), y)), 1e-14) << y;
  }
}

TEST(Poles, SymmetryAndMonotonicity) {
  double prev = u_star(0.0);
  for (double y = 0.05; y <= 4.0; y += 0.05) {
    EXPECT_EQ(u_star(y), u_star(-y));
    EXPECT_GT(u_star(y), prev);
    prev = u_star(y);
  }
  EXPECT_EQ(z_minus(1.3), -std::conj(z_plus(1.3)));
  const auto p = pole_location(1.3, Branch::minus);
  EXPECT_EQ(p.z(), z_branch(1.3, Branch::minus));
}

TEST(Poles, QOverflowGuard) {
  EXPECT_THROW(q_eval({30.0, 0.0}, 0.0), RangeError);
  EXPECT_THROW(pole_location(std::nan("")), RangeError);
}

TEST(Strip, WidthReferenceValues) {
  EXPECT_NEAR(strip_width_b(1.7), 1.4269646081754619328, 1e-15);
  EXPECT_NEAR(default_strip().b, 1.8393340438680286, 1e-15);
  // u_star(b) = a on the strip edge
  for (const double a : {1.3, 1.7, 2.0, 2.1})
    EXPECT_NEAR(u_star(strip_width_b(a)), a, 1e-14) << a;
}

TEST(Strip, Validation) {
  EXPECT_THROW(strip_width_b(1.2), DomainError);
  EXPECT_THROW(strip_width_b(2.2), DomainError);
  EXPECT_THROW(make_strip(2.0, 1.9, 2.15), DomainError);
  EXPECT_THROW(make_strip(1.2, 2.0, 2.15), DomainError);
  EXPECT_THROW(make_strip(1.9, 2.0, 2.2), DomainError);
  StripParams s = default_strip();
  s.b += 0.01;
  EXPECT_THROW(s.validate(), DomainError);
}

TEST(Regions, Membership) {
  const auto in = region_inside(1.5);
  EXPECT_TRUE(region_contains(in, 0.0));
  EXPECT_TRUE(region_contains(in, -1.5));
  EXPECT_FALSE(region_contains(in, 1.6));
  const auto out = region_outside(1.5, 4.0);
  EXPECT_FALSE(region_contains(out, 0.0));
  EXPECT_TRUE(region_contains(out, -2.0));
  EXPECT_TRUE(region_outside(1.5, 1.0).empty());
}

TEST(QLowerBound, HoldsOnRandomSamples) {
  const auto strip = default_strip();
  const struct {
    double u;
    YRegion region;
  } cases[] = {{strip.a1, region_outside(strip.b, 6.0)}, {strip.a2, region_inside(strip.b)}};
  for (const auto& c : cases) {
    const double alpha = q_lower_bound_alpha(c.u, c.region);
    EXPECT_GT(alpha, 0.0);
    EXPECT_LE(alpha, 0.5 * std::exp(-c.u * c.u));
    for (const auto& iv : c.region)
      for (double y = iv.lo; y <= iv.hi; y += 0.0137)
        for (double x = -5.0; x <= 5.0; x += 0.0173)
          ASSERT_GE(q_scaled_modulus(x, c.u, y), alpha) << c.u << " " << x << " " << y;
  }
}

TEST(QLowerBound, RejectsRegionWithPole) {
  // on Im z = a the pole sits at |y| = b
  const auto strip = default_strip();
  EXPECT_THROW(q_lower_bound_alpha(strip.a, region_inside(strip.b + 0.1)), DomainError);
  EXPECT_THROW(q_lower_bound_alpha(-1.0, region_inside(1.0)), DomainError);
}
