#include "altlab/hankel.hpp"
#include "altlab/series.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace altlab;

TEST(HankelSStar, ValueAtZeroIsMinusLn2) {
  const auto out = hankel_s_star(0.0);
  EXPECT_NEAR(out.value, -std::numbers::ln2, 1e-15);
  EXPECT_EQ(out.method, Method::hankel);
}

TEST(HankelSStar, MatchesReferenceValues) {
  // mpmath: S*(lambda) = S(lambda^2 / 4)
  const struct {
    double lambda;
    double value;
  } refs[] = {{1.0, -0.51338792660430603259},  {2.0, -0.19710793639795065696},
              {4.0, 0.0075811160884875916661}, {8.0, -0.000032156592212015107899},
              {12.0, -3.058843266098350155e-7}, {16.0, -4.0963566449974286463e-11},
              {20.0, 1.0349298050651604833e-11}};
  for (const auto& r : refs) {
    const auto out = hankel_s_star(r.lambda);
    EXPECT_LE(std::abs(out.value - r.value), out.error_estimate) << r.lambda;
    EXPECT_NEAR(out.value, r.value, 1e-15) << r.lambda;
  }
}

TEST(HankelSStar, AgreesWithSeriesAtTOne) {
  EXPECT_NEAR(hankel_s_star(2.0).value, sum_alternating_s(1.0).value, 1e-12);
}

TEST(HankelSStar, ReportsFloorAtLargeLambda) {
  const auto at20 = hankel_s_star(20.0);
  EXPECT_LT(std::abs(at20.value), 2e-11);
  EXPECT_GE(at20.error_estimate, 1e-15);
  const auto at40 = hankel_s_star(40.0);
  EXPECT_GE(at40.error_estimate, std::abs(at40.value));
}

TEST(HankelSStar, RefinementChangeWithinErrorEstimate) {
  for (const double lambda : {1.0, 5.0, 10.0, 20.0}) {
    QuadConfig fine;
    fine.panel_rule_order = 32;
    const auto a = hankel_s_star(lambda);
    const auto b = hankel_s_star(lambda, {}, fine);
    EXPECT_LE(std::abs(a.value - b.value), a.error_estimate) << lambda;
  }
}

TEST(HankelSStar, PanelSumsAlternateAndAccelerationIsConsistent) {
  const double lambda = 10.0;
  const auto breaks = j0_panel_breaks(lambda, 8.0, 1e9);
  const auto weight = [](double x) {
    const double e = std::exp(-x * x);
    return 2.0 * x * e / (1.0 + e);
  };
  const auto r = integrate_breaks([&](double x) { return bessel_j0(lambda * x) * weight(x); },
                                  weight, breaks, 16);
  for (std::size_t i = 2; i + 1 < r.panel_sums.size(); ++i) {
    if (std::abs(r.panel_sums[i]) > 1e-20 && std::abs(r.panel_sums[i - 1]) > 1e-20) {
      EXPECT_LT(r.panel_sums[i] * r.panel_sums[i - 1], 0.0) << i;
    }
  }
  QuadConfig accel;
  accel.acceleration_depth = 4;
  const auto plain = hankel_s_star(lambda);
  const auto acc = hankel_s_star(lambda, {}, accel);
  EXPECT_LE(std::abs(plain.value - acc.value), plain.error_estimate);
}

TEST(HankelSStar, InvalidInput) {
  EXPECT_THROW(hankel_s_star(-1.0), DomainError);
  QuadConfig bad;
  bad.truncation_x = 5.0;
  EXPECT_THROW(hankel_s_star(1.0, {}, bad), DomainError);
  bad = {};
  bad.panel_rule_order = 4;
  EXPECT_THROW(hankel_s_star(1.0, {}, bad), DomainError);
}

TEST(HankelSStar, PanelBudget) {
  QuadConfig tight;
  tight.max_panels = 3;
  EXPECT_THROW(hankel_s_star(10.0, {}, tight), WorkLimitError);
}

TEST(HankelGeneral, AlternatingSpecialisation) {
  for (const double t : {0.0, 1.0, 4.0}) {
    const auto g = hankel_general({{-1.0, 0.0}, 1.0, t});
    const auto s = hankel_s_star(lambda_of_t(t));
    EXPECT_NEAR(g.value.real(), sum_alternating_s(t).value, 1e-11) << t;
    EXPECT_LE(std::abs(g.value.real() - s.value), g.error_estimate + s.error_estimate) << t;
    EXPECT_NEAR(g.value.imag(), 0.0, 1e-15);
  }
}

TEST(HankelGeneral, MatchesSeriesForOtherParameters) {
  const SeriesParams a{{0.5, 0.0}, 2.0, 0.5};
  EXPECT_NEAR(hankel_general(a).value.real(), sum_series(a).value.real(), 1e-9);
  const SeriesParams b{{0.0, 1.0}, 1.5, 2.0};
  const auto hb = hankel_general(b).value;
  EXPECT_NEAR(hb.real(), -0.083178587489021788118, 1e-12);
  EXPECT_NEAR(hb.imag(), 0.072791948107417924819, 1e-12);
}

TEST(HankelGeneral, RequiresOrderAtLeastOne) {
  EXPECT_THROW(hankel_general({{-1.0, 0.0}, 0.5, 1.0}), DomainError);
}

TEST(BesselKernel, ContinuousAtTZero) {
  EXPECT_NEAR(bessel_kernel(0.0, 1e-12, 2.0), 1.0, 1e-11);
  EXPECT_NEAR(bessel_kernel(1.0, 1e-12, 2.0), 2.0, 1e-11);
  EXPECT_EQ(bessel_kernel(1.0, 0.5, 0.0), 0.0);
}
